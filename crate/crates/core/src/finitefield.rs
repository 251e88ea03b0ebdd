//! Characteristic polynomials by the finite field method: count
//! complement points of an arrangement over F_q for enough good primes,
//! interpolate, and verify at a held-out prime.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num::Zero;
use rayon::prelude::*;

use crate::arrangement::{Arrangement, Family};
use crate::budget::{BudgetMeter, RunBudget};
use crate::error::Error;
use crate::exactmath::{interpolate_integer_polynomial, Int, IntPolynomial};

/// One exact evaluation χ(A, q) = number of complement points over F_q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCountRecord {
    pub family: Family,
    pub m: usize,
    pub q: u64,
    pub count: Int,
}

/// An interpolated characteristic polynomial with its provenance.
#[derive(Clone, Debug)]
pub struct CharPolyResult {
    pub poly: IntPolynomial,
    pub primes_used: Vec<u64>,
    pub consistency_verified: bool,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes strictly above m(m-1)/2, ascending. Primes below that
/// threshold can divide minors of the family normals, so they are
/// conservatively excluded; interpolation is verified at a held-out prime
/// regardless.
pub fn good_primes(m: usize) -> impl Iterator<Item = u64> {
    let floor = (m * (m - 1) / 2) as u64;
    (floor.max(2) + 1..).filter(|&q| q % 2 == 1 && is_prime(q))
}

fn check_nodes(
    local: &mut u64,
    meter: &BudgetMeter,
    budget: &RunBudget,
) -> Result<(), Error> {
    *local += 1;
    if *local & 0xfffff == 0 {
        meter.charge_points(budget, 1 << 20)?;
    }
    Ok(())
}

/// Brute-force complement count over F_q^dim: every hyperplane equation
/// is reduced mod q and every point is tested.
pub fn count_complement_generic(
    a: &Arrangement,
    q: u64,
    budget: &RunBudget,
) -> Result<Int, Error> {
    if !is_prime(q) {
        return Err(Error::BadPrime(q, "not prime".into()));
    }
    let qi = q as i64;
    let rows: Vec<(Vec<u64>, u64)> = a
        .hyperplanes
        .iter()
        .map(|h| {
            let n: Vec<u64> = h
                .normal
                .iter()
                .map(|c| {
                    let r: Int = ((c % qi) + qi) % qi;
                    u64::try_from(&r).unwrap()
                })
                .collect();
            let off: Int = ((&h.offset % qi) + qi) % qi;
            (n, u64::try_from(&off).unwrap())
        })
        .collect();
    for (n, _) in &rows {
        if n.iter().all(|&c| c == 0) {
            return Err(Error::BadPrime(q, "a normal vanishes mod q".into()));
        }
    }
    let total = (q as u128).checked_pow(a.dim as u32).ok_or_else(|| {
        Error::BudgetExceeded("point grid overflows".into())
    })?;
    let meter = BudgetMeter::new();
    meter.charge_points(budget, u64::try_from(total).unwrap_or(u64::MAX))?;

    fn rec(
        rows: &[(Vec<u64>, u64)],
        q: u64,
        dim: usize,
        coord: usize,
        partial: &mut Vec<u64>,
    ) -> u128 {
        if coord == dim {
            let off_hyperplanes = rows
                .iter()
                .enumerate()
                .all(|(i, (_, b))| partial[i] % q != *b);
            return off_hyperplanes as u128;
        }
        let mut acc = 0u128;
        for v in 0..q {
            for (i, (n, _)) in rows.iter().enumerate() {
                partial[i] += n[coord] * v;
            }
            acc += rec(rows, q, dim, coord + 1, partial);
            for (i, (n, _)) in rows.iter().enumerate() {
                partial[i] -= n[coord] * v;
            }
        }
        acc
    }
    let mut partial = vec![0u64; rows.len()];
    let count = rec(&rows, q, a.dim, 0, &mut partial);
    Ok(Int::from(count))
}

/// Complement count of the mid-hyperplane arrangement over F_q, computed
/// as q(q-1)·N(q): the affine group x -> ax+b acts freely on complement
/// tuples, so N(q) counts tuples normalized to x_1 = 0, x_2 = 1. A tuple
/// is in the complement iff all coordinates are distinct and all pairwise
/// sums x_i + x_j (i < j) are distinct.
pub fn count_mid_complement(m: usize, q: u64, budget: &RunBudget) -> Result<Int, Error> {
    if q == 2 || q <= m as u64 || !is_prime(q) {
        return Err(Error::BadPrime(q, format!("need an odd prime > {m}")));
    }
    let meter = BudgetMeter::new();
    if m == 2 {
        return Ok(Int::from(q as u128 * (q - 1) as u128));
    }
    // Parallel strata: the value of x_3.
    let n = (0..q)
        .into_par_iter()
        .map(|v3| -> Result<u128, Error> {
            let mut used = vec![false; q as usize];
            let mut sumocc = vec![0u32; q as usize];
            let mut chosen = vec![0u64, 1];
            used[0] = true;
            used[1] = true;
            sumocc[1] = 1; // 0 + 1
            if used[v3 as usize]
                || chosen.iter().any(|&x| sumocc[((v3 + x) % q) as usize] > 0)
            {
                return Ok(0);
            }
            for &x in &chosen {
                sumocc[((v3 + x) % q) as usize] += 1;
            }
            used[v3 as usize] = true;
            chosen.push(v3);
            let mut local = 0u64;
            let r = mid_dfs(
                m, q, &mut chosen, &mut used, &mut sumocc, &meter, budget, &mut local,
            );
            meter.charge_points(budget, local & 0xfffff)?;
            r
        })
        .try_reduce(|| 0u128, |a, b| Ok(a + b))?;
    Ok(Int::from(q as u128 * (q - 1) as u128 * n))
}

#[allow(clippy::too_many_arguments)]
fn mid_dfs(
    m: usize,
    q: u64,
    chosen: &mut Vec<u64>,
    used: &mut [bool],
    sumocc: &mut [u32],
    meter: &BudgetMeter,
    budget: &RunBudget,
    local: &mut u64,
) -> Result<u128, Error> {
    if chosen.len() == m {
        return Ok(1);
    }
    let mut acc = 0u128;
    'cand: for v in 0..q {
        check_nodes(local, meter, budget)?;
        if used[v as usize] {
            continue;
        }
        for &x in chosen.iter() {
            if sumocc[((v + x) % q) as usize] > 0 {
                continue 'cand;
            }
        }
        for &x in chosen.iter() {
            sumocc[((v + x) % q) as usize] += 1;
        }
        used[v as usize] = true;
        chosen.push(v);
        acc += mid_dfs(m, q, chosen, used, sumocc, meter, budget, local)?;
        chosen.pop();
        used[v as usize] = false;
        for &x in chosen.iter() {
            sumocc[((v + x) % q) as usize] -= 1;
        }
    }
    Ok(acc)
}

const FACT: [u128; 13] = [
    1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880, 3628800, 39916800, 479001600,
];

/// Complement count of the restricted all-subset arrangement over F_q:
/// tuples x in F_q^m with Σx_i = 0 whose proper nonempty subset sums are
/// all nonzero. After eliminating x_m this is exactly the set of
/// (x_1..x_{m-1}) whose 2^{m-1}-1 nonempty subset sums are all nonzero.
/// Counted over nondecreasing value tuples with multinomial weights
/// (the condition is symmetric in the coordinates).
pub fn count_allsubset_complement(m: usize, q: u64, budget: &RunBudget) -> Result<Int, Error> {
    count_subsetsum_family(m, q, budget, false)
}

/// Same complement intersected with the restricted braid complement:
/// additionally all m coordinates (including x_m = -Σ) are distinct.
pub fn count_allsubset_union_braid_complement(
    m: usize,
    q: u64,
    budget: &RunBudget,
) -> Result<Int, Error> {
    count_subsetsum_family(m, q, budget, true)
}

fn count_subsetsum_family(
    m: usize,
    q: u64,
    budget: &RunBudget,
    distinct: bool,
) -> Result<Int, Error> {
    if !is_prime(q) {
        return Err(Error::BadPrime(q, "not prime".into()));
    }
    let n = m - 1; // free coordinates
    let meter = BudgetMeter::new();
    let total = (1..q)
        .into_par_iter()
        .map(|v0| -> Result<u128, Error> {
            let mut occ = vec![0u32; q as usize];
            let mut sums = vec![v0];
            occ[v0 as usize] = 1;
            let mut chosen = vec![v0];
            let mut local = 0u64;
            let r = subset_dfs(
                n, q, distinct, &mut chosen, &mut sums, &mut occ, &meter, budget, &mut local,
            );
            meter.charge_points(budget, local & 0xfffff)?;
            r
        })
        .try_reduce(|| 0u128, |a, b| Ok(a + b))?;
    Ok(Int::from(total))
}

#[allow(clippy::too_many_arguments)]
fn subset_dfs(
    n: usize,
    q: u64,
    distinct: bool,
    chosen: &mut Vec<u64>,
    sums: &mut Vec<u64>,
    occ: &mut [u32],
    meter: &BudgetMeter,
    budget: &RunBudget,
    local: &mut u64,
) -> Result<u128, Error> {
    if chosen.len() == n {
        if distinct {
            // x_m = -Σ must differ from every free coordinate; the free
            // coordinates are already strictly increasing, hence distinct.
            let s = sums[sums.len() - 1]; // full-tuple sum: see push order
            debug_assert_eq!(s, chosen.iter().sum::<u64>() % q);
            let xm = (q - s % q) % q;
            if chosen.contains(&xm) {
                return Ok(0);
            }
            return Ok(FACT[n]);
        }
        // Multinomial weight n! / Π(multiplicity!).
        let mut w = FACT[n];
        let mut run = 1usize;
        for i in 1..chosen.len() {
            if chosen[i] == chosen[i - 1] {
                run += 1;
            } else {
                w /= FACT[run];
                run = 1;
            }
        }
        w /= FACT[run];
        return Ok(w);
    }
    let lo = if distinct {
        chosen.last().unwrap() + 1
    } else {
        *chosen.last().unwrap()
    };
    let mut acc = 0u128;
    for v in lo..q {
        check_nodes(local, meter, budget)?;
        if occ[((q - v) % q) as usize] > 0 {
            continue;
        }
        let k = sums.len();
        for i in 0..k {
            let s = (sums[i] + v) % q;
            sums.push(s);
            occ[s as usize] += 1;
        }
        sums.push(v);
        occ[v as usize] += 1;
        // Keep the full-tuple sum last for the leaf check above: it is
        // old_full + v, currently second from the end.
        let len = sums.len();
        sums.swap(len - 2, len - 1);
        chosen.push(v);
        acc += subset_dfs(n, q, distinct, chosen, sums, occ, meter, budget, local)?;
        chosen.pop();
        for _ in 0..k + 1 {
            let s = sums.pop().unwrap();
            occ[s as usize] -= 1;
        }
    }
    Ok(acc)
}

fn falling_factorial(q: u64, m: usize) -> Int {
    if (m as u64) > q {
        return Int::zero();
    }
    let mut acc = Int::from(1);
    for k in 0..m as u64 {
        acc *= Int::from(q - k);
    }
    acc
}

/// Complement count for a named family, dispatching to the specialized
/// counter.
pub fn count_family_complement(
    family: Family,
    m: usize,
    q: u64,
    budget: &RunBudget,
) -> Result<Int, Error> {
    match family {
        Family::Braid => {
            if !is_prime(q) {
                return Err(Error::BadPrime(q, "not prime".into()));
            }
            Ok(falling_factorial(q, m))
        }
        Family::Mid => count_mid_complement(m, q, budget),
        Family::AllSubset0 => count_allsubset_complement(m, q, budget),
        Family::AllSubset0UnionBraid0 => {
            count_allsubset_union_braid_complement(m, q, budget)
        }
        _ => Err(Error::Parse(format!(
            "no finite-field counter for family {family}"
        ))),
    }
}

/// Ambient dimension of the counting space for each family.
pub fn family_dim(family: Family, m: usize) -> Option<usize> {
    match family {
        Family::Braid | Family::Mid => Some(m),
        Family::AllSubset0 | Family::AllSubset0UnionBraid0 => Some(m - 1),
        _ => None,
    }
}

/// Line-oriented cache of point counts (tab-separated: family, m, q,
/// count) so expensive evaluations are never recomputed.
#[derive(Debug, Default)]
pub struct CountsCache {
    path: Option<PathBuf>,
    map: BTreeMap<(String, usize, u64), Int>,
}

impl CountsCache {
    pub fn in_memory() -> CountsCache {
        CountsCache::default()
    }

    pub fn open(path: &Path) -> Result<CountsCache, Error> {
        let mut map = BTreeMap::new();
        if path.exists() {
            let text = std::fs::read_to_string(path)?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let mut it = line.split('\t');
                let parse = || Error::Parse(format!("counts cache line {}", lineno + 1));
                let fam = it.next().ok_or_else(parse)?.to_string();
                let m: usize = it.next().ok_or_else(parse)?.parse().map_err(|_| parse())?;
                let q: u64 = it.next().ok_or_else(parse)?.parse().map_err(|_| parse())?;
                let count: Int = it
                    .next()
                    .ok_or_else(parse)?
                    .parse()
                    .map_err(|_| parse())?;
                map.insert((fam, m, q), count);
            }
        }
        Ok(CountsCache { path: Some(path.to_path_buf()), map })
    }

    pub fn get(&self, family: Family, m: usize, q: u64) -> Option<&Int> {
        self.map.get(&(family.to_string(), m, q))
    }

    pub fn put(&mut self, rec: &PointCountRecord) -> Result<(), Error> {
        self.map
            .insert((rec.family.to_string(), rec.m, rec.q), rec.count.clone());
        self.flush()
    }

    fn flush(&self) -> Result<(), Error> {
        let Some(path) = &self.path else { return Ok(()) };
        let mut out = String::new();
        for ((fam, m, q), count) in &self.map {
            out.push_str(&format!("{fam}\t{m}\t{q}\t{count}\n"));
        }
        std::fs::write(path, out)?;
        Ok(())
    }
}

/// Interpolates χ(family_m, t) from deg+1 good-prime counts and verifies
/// the result against one held-out prime. Any integrality or consistency
/// failure slides the prime window up and retries.
pub fn charpoly(
    family: Family,
    m: usize,
    budget: &RunBudget,
    mut cache: Option<&mut CountsCache>,
) -> Result<CharPolyResult, Error> {
    let degree = family_dim(family, m).ok_or_else(|| {
        Error::Parse(format!("no finite-field counter for family {family}"))
    })?;
    let needed = degree + 2; // deg+1 to interpolate, one to verify
    let mut start = 0usize;
    let max_slides = 8;
    loop {
        let primes: Vec<u64> = good_primes(m).skip(start).take(needed).collect();
        let counts: Result<Vec<Int>, Error> = primes
            .iter()
            .map(|&q| {
                if let Some(c) = cache.as_ref().and_then(|c| c.get(family, m, q)) {
                    return Ok(c.clone());
                }
                let count = count_family_complement(family, m, q, budget)?;
                if let Some(c) = cache.as_deref_mut() {
                    c.put(&PointCountRecord { family, m, q, count: count.clone() })?;
                }
                Ok(count)
            })
            .collect();
        let counts = counts?;
        let points: Vec<(Int, Int)> = primes
            .iter()
            .zip(&counts)
            .map(|(&q, c)| (Int::from(q), c.clone()))
            .collect();
        match interpolate_integer_polynomial(&points, degree) {
            Ok(poly) => {
                // Monic of full degree, and (t-1) divides χ of any
                // nonempty arrangement.
                if poly.degree() != degree
                    || !poly.is_monic()
                    || !poly.eval(&Int::from(1)).is_zero()
                {
                    return Err(Error::ConsistencyFailure(format!(
                        "interpolated χ for {family} m={m} fails shape checks"
                    )));
                }
                return Ok(CharPolyResult {
                    poly,
                    primes_used: primes,
                    consistency_verified: true,
                });
            }
            Err(Error::NonIntegralCoefficient(_) | Error::ConsistencyFailure(_))
                if start + 1 < max_slides =>
            {
                start += 1;
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{all_subset_restricted, braid, mid_hyperplane, union};
    use crate::exactmath::int;

    #[test]
    fn prime_iteration() {
        let ps: Vec<u64> = good_primes(4).take(5).collect();
        assert_eq!(ps, vec![7, 11, 13, 17, 19]);
        assert!(good_primes(7).next().unwrap() > 21);
    }

    #[test]
    fn generic_counter_examples() {
        let b = RunBudget::default();
        assert_eq!(count_complement_generic(&braid(3), 5, &b).unwrap(), int(60));
        let one = crate::arrangement::Arrangement::new(
            2,
            vec![crate::arrangement::Hyperplane::from_integer(
                vec![int(1), int(2)],
                int(0),
                crate::arrangement::Label::None,
            )
            .unwrap()],
            Family::Other,
        );
        assert_eq!(count_complement_generic(&one, 7, &b).unwrap(), int(42));
    }

    #[test]
    fn mid_matches_generic_counter() {
        let b = RunBudget::default();
        assert_eq!(count_mid_complement(3, 5, &b).unwrap(), int(60));
        for (m, q) in [(4usize, 7u64), (4, 11), (5, 11), (5, 13)] {
            let spec = count_mid_complement(m, q, &b).unwrap();
            let gen = count_complement_generic(&mid_hyperplane(m), q, &b).unwrap();
            assert_eq!(spec, gen, "mid m={m} q={q}");
        }
    }

    #[test]
    fn allsubset_matches_generic_counter() {
        let b = RunBudget::default();
        for (m, q) in [(3usize, 7u64), (4, 5), (4, 7), (5, 11)] {
            let spec = count_allsubset_complement(m, q, &b).unwrap();
            let gen =
                count_complement_generic(&all_subset_restricted(m), q, &b).unwrap();
            assert_eq!(spec, gen, "allsubset m={m} q={q}");
        }
        assert_eq!(count_allsubset_complement(3, 2, &b).unwrap(), int(0));
    }

    #[test]
    fn union_matches_generic_counter() {
        let b = RunBudget::default();
        for (m, q) in [(3usize, 7u64), (4, 7), (5, 11)] {
            let a = union(
                &all_subset_restricted(m),
                &crate::arrangement::braid_restricted(m),
            )
            .unwrap();
            let spec = count_allsubset_union_braid_complement(m, q, &b).unwrap();
            let gen = count_complement_generic(&a, q, &b).unwrap();
            assert_eq!(spec, gen, "union m={m} q={q}");
        }
    }

    #[test]
    fn bad_primes_rejected() {
        let b = RunBudget::default();
        assert!(matches!(
            count_mid_complement(5, 2, &b),
            Err(Error::BadPrime(2, _))
        ));
        assert!(matches!(
            count_mid_complement(5, 5, &b),
            Err(Error::BadPrime(5, _))
        ));
        assert!(matches!(
            count_complement_generic(&braid(3), 9, &b),
            Err(Error::BadPrime(9, _))
        ));
    }

    #[test]
    fn charpoly_braid3() {
        let b = RunBudget::default();
        let r = charpoly(Family::Braid, 3, &b, None).unwrap();
        assert_eq!(r.poly, IntPolynomial::from_i64(&[0, 2, -3, 1]));
        assert!(r.consistency_verified);
    }

    #[test]
    fn charpoly_mid5_gives_r0() {
        let b = RunBudget::default();
        let r = charpoly(Family::Mid, 5, &b, None).unwrap();
        // (-1)^5 χ(-1) / 5! = 12.
        let total = -r.poly.eval(&Int::from(-1));
        assert_eq!(total, int(120 * 12));
        // Divisible by t(t-1).
        assert!(r.poly.trailing_zeros() >= 1);
    }

    #[test]
    fn charpoly_allsubset5_gives_q() {
        let b = RunBudget::default();
        let r = charpoly(Family::AllSubset0, 5, &b, None).unwrap();
        assert_eq!(r.poly.eval(&Int::from(-1)), int(370)); // q(5) + 5
    }

    #[test]
    fn counts_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("counts.tsv");
        let b = RunBudget::default();
        {
            let mut cache = CountsCache::open(&path).unwrap();
            let r = charpoly(Family::Braid, 4, &b, Some(&mut cache)).unwrap();
            assert_eq!(r.poly, IntPolynomial::from_i64(&[0, -6, 11, -6, 1]));
        }
        let cache = CountsCache::open(&path).unwrap();
        assert_eq!(cache.get(Family::Braid, 4, 11), Some(&int(11 * 10 * 9 * 8)));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.lines().all(|l| l.split('\t').count() == 4));
    }
}
