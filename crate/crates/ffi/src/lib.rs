//! C ABI for the rank-arrange library.
//!
//! Conventions (mirrored in `include/rank_arrange.h`):
//! - Budgets are opaque handles created by `ra_budget_default` /
//!   `ra_budget_unlimited` and released with `ra_budget_free`.
//! - Every computation returns an `int` status: 0 ok, 1 internal error,
//!   2 usage error (bad arguments or input data), 3 budget exhausted.
//! - Results are NUL-terminated JSON strings written to `*out`; release
//!   them with `ra_string_free`. On failure `*out` is set to NULL and a
//!   thread-local message is available through `ra_last_error`.

use std::ffi::{c_char, c_int, c_uint, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rank_arrange::arrangement::{Family, ObjectConfig, ObjectConfigJson};
use rank_arrange::bounds::bounds_table;
use rank_arrange::budget::RunBudget;
use rank_arrange::error::Error;
use rank_arrange::finitefield::charpoly;
use rank_arrange::unfolding::{
    admissible_rankings, q_enumerate, q_from_charpoly, q_ie_upper, r0_enumerate,
    r0_from_charpoly,
};
use serde_json::json;

pub const RA_OK: c_int = 0;
pub const RA_ERR_INTERNAL: c_int = 1;
pub const RA_ERR_USAGE: c_int = 2;
pub const RA_ERR_BUDGET: c_int = 3;

/// Opaque budget handle.
pub struct RaBudget(RunBudget);

thread_local! {
    static LAST_ERROR: std::cell::RefCell<Option<CString>> =
        const { std::cell::RefCell::new(None) };
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', "?")).unwrap();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> c_int {
    match err {
        Error::BudgetExceeded(_) => RA_ERR_BUDGET,
        Error::Parse(_)
        | Error::RangeViolation(_)
        | Error::DimensionMismatch
        | Error::DuplicatePoints(_, _)
        | Error::NotGeneric(_)
        | Error::TiedDistances(_, _)
        | Error::TiedMidpoints(_, _, _, _)
        | Error::NonAdjacentSwap
        | Error::BadPrime(_, _)
        | Error::Json(_) => RA_ERR_USAGE,
        _ => RA_ERR_INTERNAL,
    }
}

/// Runs a fallible JSON-producing computation and marshals the result.
fn run(out: *mut *mut c_char, f: impl FnOnce() -> Result<serde_json::Value, Error>) -> c_int {
    if out.is_null() {
        set_error("out pointer is NULL");
        return RA_ERR_USAGE;
    }
    // Clear the slot first so callers never read stale pointers.
    unsafe { *out = std::ptr::null_mut() };
    let result = catch_unwind(AssertUnwindSafe(f));
    match result {
        Ok(Ok(value)) => {
            let text = value.to_string();
            match CString::new(text) {
                Ok(c) => {
                    unsafe { *out = c.into_raw() };
                    RA_OK
                }
                Err(_) => {
                    set_error("result contained an interior NUL");
                    RA_ERR_INTERNAL
                }
            }
        }
        Ok(Err(e)) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            RA_ERR_INTERNAL
        }
    }
}

fn budget_ref<'a>(b: *const RaBudget) -> Option<&'a RunBudget> {
    unsafe { b.as_ref() }.map(|b| &b.0)
}

/// Creates a budget with the default resource limits.
#[no_mangle]
pub extern "C" fn ra_budget_default() -> *mut RaBudget {
    Box::into_raw(Box::new(RaBudget(RunBudget::default())))
}

/// Creates an effectively unlimited budget.
#[no_mangle]
pub extern "C" fn ra_budget_unlimited() -> *mut RaBudget {
    Box::into_raw(Box::new(RaBudget(RunBudget::unlimited())))
}

/// Releases a budget handle. NULL is allowed.
#[no_mangle]
pub extern "C" fn ra_budget_free(b: *mut RaBudget) {
    if !b.is_null() {
        drop(unsafe { Box::from_raw(b) });
    }
}

/// Releases a string returned by this library. NULL is allowed.
#[no_mangle]
pub extern "C" fn ra_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Copy of the last error message on this thread, or NULL. Release with
/// `ra_string_free`.
#[no_mangle]
pub extern "C" fn ra_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match &*e.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Unidimensional pattern count r0(m). `enumerate` selects the chamber
/// enumeration route instead of the finite-field route.
#[no_mangle]
pub extern "C" fn ra_r0(
    m: c_uint,
    enumerate: c_int,
    budget: *const RaBudget,
    out: *mut *mut c_char,
) -> c_int {
    run(out, || {
        let b = budget_ref(budget)
            .ok_or_else(|| Error::Parse("budget handle is NULL".into()))?;
        let m = m as usize;
        let r0 = if enumerate != 0 {
            r0_enumerate(m, b)?
        } else {
            r0_from_charpoly(m, b, None)?
        };
        Ok(json!({
            "schema": "1",
            "m": m,
            "method": if enumerate != 0 { "enumerate" } else { "charpoly" },
            "r0": r0.to_string(),
        }))
    })
}

/// Codimension-one pattern count q(m), by formula or enumeration.
#[no_mangle]
pub extern "C" fn ra_q(
    m: c_uint,
    enumerate: c_int,
    budget: *const RaBudget,
    out: *mut *mut c_char,
) -> c_int {
    run(out, || {
        let b = budget_ref(budget)
            .ok_or_else(|| Error::Parse("budget handle is NULL".into()))?;
        let m = m as usize;
        let q = if enumerate != 0 {
            q_enumerate(m, false, b)?.q
        } else {
            q_from_charpoly(m, b, None)?
        };
        Ok(json!({
            "schema": "1",
            "m": m,
            "method": if enumerate != 0 { "enumerate" } else { "charpoly" },
            "q": q.to_string(),
        }))
    })
}

/// Upper bound for the inequivalent codimension-one pattern count.
#[no_mangle]
pub extern "C" fn ra_q_ie_upper(
    m: c_uint,
    budget: *const RaBudget,
    out: *mut *mut c_char,
) -> c_int {
    run(out, || {
        let b = budget_ref(budget)
            .ok_or_else(|| Error::Parse("budget handle is NULL".into()))?;
        let v = q_ie_upper(m as usize, b, None)?;
        Ok(json!({ "schema": "1", "m": m, "q_ie_upper": v.to_string() }))
    })
}

/// Characteristic polynomial of a named family ("braid", "mid",
/// "allsubset0", "allsubset0_union_braid0").
#[no_mangle]
pub extern "C" fn ra_charpoly(
    family: *const c_char,
    m: c_uint,
    budget: *const RaBudget,
    out: *mut *mut c_char,
) -> c_int {
    run(out, || {
        let b = budget_ref(budget)
            .ok_or_else(|| Error::Parse("budget handle is NULL".into()))?;
        if family.is_null() {
            return Err(Error::Parse("family is NULL".into()));
        }
        let name = unsafe { CStr::from_ptr(family) }
            .to_str()
            .map_err(|_| Error::Parse("family is not UTF-8".into()))?;
        let fam: Family = name.parse()?;
        let res = charpoly(fam, m as usize, b, None)?;
        Ok(json!({
            "schema": "1",
            "family": fam.to_string(),
            "m": m,
            "coefficients": res.poly.to_decimal_strings(),
            "primes_used": res.primes_used,
            "verified": res.consistency_verified,
        }))
    })
}

/// Ranking pattern of an object configuration given as JSON
/// {"m":..,"n":..,"points":[["x","y"],..]} with decimal or "p/q" entries.
#[no_mangle]
pub extern "C" fn ra_pattern(
    config_json: *const c_char,
    budget: *const RaBudget,
    out: *mut *mut c_char,
) -> c_int {
    run(out, || {
        let b = budget_ref(budget)
            .ok_or_else(|| Error::Parse("budget handle is NULL".into()))?;
        if config_json.is_null() {
            return Err(Error::Parse("config is NULL".into()));
        }
        let text = unsafe { CStr::from_ptr(config_json) }
            .to_str()
            .map_err(|_| Error::Parse("config is not UTF-8".into()))?;
        let parsed: ObjectConfigJson = serde_json::from_str(text)?;
        let cfg = ObjectConfig::from_json(&parsed)?;
        let pattern = admissible_rankings(&cfg, b)?;
        Ok(json!({
            "schema": "1",
            "m": cfg.m,
            "n": cfg.n,
            "size": pattern.len(),
            "rankings": pattern.to_strings(),
        }))
    })
}

/// Comparison table of exact counts against bounds for 4 <= m <= max_m.
#[no_mangle]
pub extern "C" fn ra_bounds_table(max_m: c_uint, out: *mut *mut c_char) -> c_int {
    run(out, || {
        let rows = bounds_table(max_m as usize)?;
        Ok(json!({ "schema": "1", "rows": rows }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn take(out: *mut c_char) -> String {
        assert!(!out.is_null());
        let s = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
        ra_string_free(out);
        s
    }

    #[test]
    fn r0_roundtrip() {
        let b = ra_budget_default();
        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(ra_r0(4, 0, b, &mut out), RA_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["r0"], "2");
        assert_eq!(ra_r0(4, 1, b, &mut out), RA_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["r0"], "2");
        ra_budget_free(b);
    }

    #[test]
    fn q_and_bound() {
        let b = ra_budget_default();
        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(ra_q(4, 0, b, &mut out), RA_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["q"], "28");
        assert_eq!(ra_q_ie_upper(4, b, &mut out), RA_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["q_ie_upper"], "3");
        ra_budget_free(b);
    }

    #[test]
    fn charpoly_json() {
        let b = ra_budget_default();
        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(
            ra_charpoly(c"mid".as_ptr(), 4, b, &mut out),
            RA_OK
        );
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["coefficients"].as_array().unwrap().len(), 5);
        assert_eq!(v["verified"], true);
        ra_budget_free(b);
    }

    #[test]
    fn pattern_json() {
        let b = ra_budget_default();
        let mut out: *mut c_char = std::ptr::null_mut();
        let cfg = r#"{"m":4,"n":1,"points":[["0"],["1"],["3"],["7"]]}"#;
        let c = CString::new(cfg).unwrap();
        assert_eq!(ra_pattern(c.as_ptr(), b, &mut out), RA_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["size"], 7);
        ra_budget_free(b);
    }

    #[test]
    fn bounds_json() {
        let mut out: *mut c_char = std::ptr::null_mut();
        assert_eq!(ra_bounds_table(6, &mut out), RA_OK);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn errors_and_status_codes() {
        let b = ra_budget_default();
        let mut out: *mut c_char = std::ptr::null_mut();
        // Out-of-range m is a usage error with a message.
        assert_eq!(ra_r0(1, 0, b, &mut out), RA_ERR_USAGE);
        assert!(out.is_null());
        let msg = ra_last_error();
        assert!(!msg.is_null());
        ra_string_free(msg);
        // NULL handles are usage errors, not crashes.
        assert_eq!(ra_r0(4, 0, std::ptr::null(), &mut out), RA_ERR_USAGE);
        assert_eq!(ra_charpoly(std::ptr::null(), 4, b, &mut out), RA_ERR_USAGE);
        assert_eq!(
            ra_charpoly(c"nonsense".as_ptr(), 4, b, &mut out),
            RA_ERR_USAGE
        );
        ra_budget_free(b);
        ra_string_free(std::ptr::null_mut());
        ra_budget_free(std::ptr::null_mut());
    }
}
