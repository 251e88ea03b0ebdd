/* C ABI for the rank-arrange library.
 *
 * Every computation returns an int status code and, on success, writes a
 * NUL-terminated JSON string to *out. Strings returned by this library
 * must be released with ra_string_free. On failure *out is set to NULL
 * and a thread-local message is available through ra_last_error.
 */

#ifndef RANK_ARRANGE_H
#define RANK_ARRANGE_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define RA_OK 0
#define RA_ERR_INTERNAL 1 /* internal failure or panic               */
#define RA_ERR_USAGE 2    /* bad arguments or malformed input        */
#define RA_ERR_BUDGET 3   /* configured resource budget exhausted    */

/* Opaque resource-budget handle. */
typedef struct RaBudget RaBudget;

/* Budget with the default limits (scalable via RANK_ARRANGE_BUDGET). */
RaBudget *ra_budget_default(void);

/* Effectively unlimited budget. */
RaBudget *ra_budget_unlimited(void);

/* Releases a budget handle. NULL is allowed. */
void ra_budget_free(RaBudget *budget);

/* Releases a string returned by this library. NULL is allowed. */
void ra_string_free(char *s);

/* Copy of the last error message on this thread, or NULL. Release with
 * ra_string_free. */
char *ra_last_error(void);

/* Unidimensional ranking-pattern count r0(m). Set enumerate to nonzero
 * for the chamber-enumeration route instead of the finite-field route.
 * JSON: {"schema","m","method","r0"}. */
int ra_r0(unsigned m, int enumerate, const RaBudget *budget, char **out);

/* Codimension-one pattern count q(m), by formula or enumeration.
 * JSON: {"schema","m","method","q"}. */
int ra_q(unsigned m, int enumerate, const RaBudget *budget, char **out);

/* Upper bound for the inequivalent codimension-one pattern count.
 * JSON: {"schema","m","q_ie_upper"}. */
int ra_q_ie_upper(unsigned m, const RaBudget *budget, char **out);

/* Characteristic polynomial of a named hyperplane-arrangement family:
 * "braid", "braid0", "mid", "allsubset0", "allsubset0_union_braid0".
 * JSON: {"schema","family","m","coefficients" (decimal strings,
 * ascending degree), "primes_used", "verified"}. */
int ra_charpoly(const char *family, unsigned m, const RaBudget *budget,
                char **out);

/* Ranking pattern of an object configuration. config_json is
 * {"m":M,"n":N,"points":[["x","y",...],...]} with decimal or "p/q"
 * coordinate strings. JSON: {"schema","m","n","size","rankings"}. */
int ra_pattern(const char *config_json, const RaBudget *budget, char **out);

/* Exact-count vs. bounds comparison table for 4 <= m <= max_m <= 10.
 * JSON: {"schema","rows":[{"m","r0","a","ell_display","u_display","f"}]}. */
int ra_bounds_table(unsigned max_m, char **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RANK_ARRANGE_H */
