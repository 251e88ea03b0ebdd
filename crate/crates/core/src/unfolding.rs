//! Ranking semantics of the unfolding model: admissible rankings for any
//! judge-space dimension, the unidimensional pattern pipeline (r0, r,
//! r_IE), and the codimension-one pipeline (slice directions, braid
//! slices, q, q_IE bound).

use std::collections::BTreeSet;

use itertools::Itertools;
use num::{Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arrangement::{
    all_subset_restricted, check_generic, mid_quads_only, unfolding_arrangement, Family,
    ObjectConfig,
};
use crate::budget::{BudgetMeter, RunBudget};
use crate::chambers::{enumerate_chambers, ConstraintRegion};
use crate::error::Error;
use crate::exactmath::{dot, factorial, int, stirling_first_signless, Int, Rat, RationalMatrix};
use crate::finitefield::{charpoly, CountsCache};
use crate::simplex::{strict_feasible_point, Constraint, Rel};

/// A ranking in one-line most-preferred-first notation: a permutation of
/// 1..=m.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ranking(Vec<usize>);

impl Ranking {
    pub fn new(perm: Vec<usize>) -> Result<Ranking, Error> {
        let m = perm.len();
        let mut seen = vec![false; m + 1];
        for &i in &perm {
            if i == 0 || i > m || seen[i] {
                return Err(Error::Parse(format!("not a permutation: {perm:?}")));
            }
            seen[i] = true;
        }
        Ok(Ranking(perm))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies an object relabeling: object i becomes sigma[i-1].
    pub fn relabel(&self, sigma: &[usize]) -> Ranking {
        Ranking(self.0.iter().map(|&i| sigma[i - 1]).collect())
    }
}

impl std::fmt::Display for Ranking {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.len() <= 9 {
            for i in &self.0 {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.0.iter().map(|i| i.to_string()).join("-"))
        }
    }
}

/// A canonical (sorted, deduplicated) set of rankings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankingPattern {
    rankings: BTreeSet<Ranking>,
}

impl RankingPattern {
    pub fn new() -> RankingPattern {
        RankingPattern::default()
    }

    pub fn insert(&mut self, r: Ranking) {
        self.rankings.insert(r);
    }

    pub fn len(&self) -> usize {
        self.rankings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rankings.is_empty()
    }

    pub fn contains(&self, r: &Ranking) -> bool {
        self.rankings.contains(r)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Ranking> {
        self.rankings.iter()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.rankings.iter().map(|r| r.to_string()).collect()
    }

    pub fn relabel(&self, sigma: &[usize]) -> RankingPattern {
        RankingPattern {
            rankings: self.rankings.iter().map(|r| r.relabel(sigma)).collect(),
        }
    }
}

impl FromIterator<Ranking> for RankingPattern {
    fn from_iter<T: IntoIterator<Item = Ranking>>(iter: T) -> Self {
        RankingPattern { rankings: iter.into_iter().collect() }
    }
}

/// Ranks the objects by strictly increasing exact squared distance from
/// the judge point.
pub fn rank_of_judge(config: &ObjectConfig, y: &[Rat]) -> Result<Ranking, Error> {
    if y.len() != config.n {
        return Err(Error::DimensionMismatch);
    }
    let mut dists: Vec<(Rat, usize)> = (0..config.m)
        .map(|i| {
            let d = config.points[i]
                .iter()
                .zip(y)
                .map(|(a, b)| {
                    let diff = a - b;
                    &diff * &diff
                })
                .sum::<Rat>();
            (d, i + 1)
        })
        .collect();
    dists.sort();
    for w in dists.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::TiedDistances(w[0].1, w[1].1));
        }
    }
    Ranking::new(dists.into_iter().map(|(_, i)| i).collect())
}

/// All rankings realized by some judge point: one per chamber of the
/// unfolding arrangement, read off at the chamber witness.
pub fn admissible_rankings(
    config: &ObjectConfig,
    budget: &RunBudget,
) -> Result<RankingPattern, Error> {
    check_generic(config).map_err(|v| Error::NotGeneric(v.to_string()))?;
    let a = unfolding_arrangement(config)?;
    let chambers = enumerate_chambers(&a, None, budget)?;
    let mut pattern = RankingPattern::new();
    for c in &chambers {
        pattern.insert(rank_of_judge(config, &c.witness)?);
    }
    if pattern.len() != chambers.len() {
        return Err(Error::ConsistencyFailure(
            "two chambers produced the same ranking".into(),
        ));
    }
    Ok(pattern)
}

/// Chamber counts of a generic unfolding arrangement in the essential
/// range 1 <= n <= m-2: total and bounded, as signless-Stirling sums.
pub fn count_admissible(m: usize, n: usize) -> Result<(Int, Int), Error> {
    if m < 3 || n < 1 || n > m - 2 {
        return Err(Error::RangeViolation(format!(
            "need m >= 3 and 1 <= n <= m-2, got m={m} n={n}"
        )));
    }
    let mut total = Int::zero();
    let mut bounded = Int::zero();
    for k in (m - n)..=m {
        let s = stirling_first_signless(m as u32, k as i64);
        total += &s;
        if (k - (m - n)) % 2 == 0 {
            bounded += &s;
        } else {
            bounded -= &s;
        }
    }
    Ok((total, bounded))
}

/// Unidimensional pattern oracle that never builds an arrangement: sweep
/// a judge along the line; each midpoint crossing swaps two objects that
/// must be adjacent in the current ranking.
pub fn pattern_1d(config: &ObjectConfig) -> Result<RankingPattern, Error> {
    if config.n != 1 {
        return Err(Error::RangeViolation(format!(
            "pattern_1d needs n = 1, got n = {}",
            config.n
        )));
    }
    let m = config.m;
    let xs: Vec<&Rat> = config.points.iter().map(|p| &p[0]).collect();
    let mut mids: Vec<(Rat, usize, usize)> = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            mids.push((xs[i] + xs[j], i + 1, j + 1)); // 2x the midpoint
        }
    }
    mids.sort();
    for w in mids.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::TiedMidpoints(w[0].1, w[0].2, w[1].1, w[1].2));
        }
    }
    // At -infinity the nearest object has the smallest coordinate.
    let mut order: Vec<usize> = (1..=m).collect();
    order.sort_by(|&a, &b| xs[a - 1].cmp(xs[b - 1]));
    let mut pattern = RankingPattern::new();
    pattern.insert(Ranking::new(order.clone())?);
    for (_, i, j) in &mids {
        let pi = order.iter().position(|&v| v == *i).unwrap();
        let pj = order.iter().position(|&v| v == *j).unwrap();
        if pi.abs_diff(pj) != 1 {
            return Err(Error::NonAdjacentSwap);
        }
        order.swap(pi, pj);
        pattern.insert(Ranking::new(order.clone())?);
    }
    debug_assert_eq!(pattern.len(), m * (m - 1) / 2 + 1);
    Ok(pattern)
}

/// The open cone x_1 < x_2 < ... < x_m in R^m.
pub fn c0_region(m: usize) -> ConstraintRegion {
    let mut cons = Vec::with_capacity(m - 1);
    for i in 0..m - 1 {
        let mut v = vec![Rat::zero(); m];
        v[i] = -Rat::from_integer(Int::from(1));
        v[i + 1] = Rat::from_integer(Int::from(1));
        cons.push(Constraint::new(v, Rel::Gt, Rat::zero()));
    }
    ConstraintRegion::new(cons)
}

/// r0(m) by direct chamber enumeration: chambers of the quadruple-sum
/// arrangement inside the ordered cone C0, each mapped through the
/// 1-dimensional pattern oracle; patterns are pairwise distinct.
pub fn r0_enumerate(m: usize, budget: &RunBudget) -> Result<Int, Error> {
    if m < 3 {
        return Err(Error::RangeViolation("need m >= 3".into()));
    }
    let a = mid_quads_only(m);
    let region = c0_region(m);
    let chambers = enumerate_chambers(&a, Some(&region), budget)?;
    let patterns: Result<BTreeSet<Vec<String>>, Error> = chambers
        .par_iter()
        .map(|c| {
            let cfg = ObjectConfig::new(c.witness.iter().map(|v| vec![v.clone()]).collect())?;
            Ok(pattern_1d(&cfg)?.to_strings())
        })
        .collect();
    let patterns = patterns?;
    if patterns.len() != chambers.len() {
        return Err(Error::ConsistencyFailure(format!(
            "{} chambers but {} distinct patterns",
            chambers.len(),
            patterns.len()
        )));
    }
    Ok(Int::from(chambers.len()))
}

fn mid_charpoly_at_minus_one(
    m: usize,
    budget: &RunBudget,
    cache: Option<&mut CountsCache>,
) -> Result<Int, Error> {
    let chi = match m {
        9 => crate::reference::reference().chi_mid_9.clone(),
        10 => crate::reference::reference().chi_mid_10.clone(),
        _ => charpoly(Family::Mid, m, budget, cache)?.poly,
    };
    let v = chi.eval(&Int::from(-1));
    Ok(if m % 2 == 0 { v } else { -v })
}

/// r0(m) = (-1)^m chi(mid_m, -1) / m!.
pub fn r0_from_charpoly(
    m: usize,
    budget: &RunBudget,
    cache: Option<&mut CountsCache>,
) -> Result<Int, Error> {
    if m < 3 {
        return Err(Error::RangeViolation("need m >= 3".into()));
    }
    let total = mid_charpoly_at_minus_one(m, budget, cache)?;
    let fm = factorial(m as u32);
    if (&total % &fm) != Int::zero() {
        return Err(Error::ConsistencyFailure(format!(
            "chamber count of mid_{m} not divisible by {m}!"
        )));
    }
    Ok(total / fm)
}

/// r(m) = m! r0(m) / 2: patterns over all generic configurations.
pub fn r_total(
    m: usize,
    budget: &RunBudget,
    cache: Option<&mut CountsCache>,
) -> Result<Int, Error> {
    let r0 = r0_from_charpoly(m, budget, cache)?;
    Ok(factorial(m as u32) * r0 / int(2))
}

/// r_IE(m): inequivalent patterns; 1 for m = 3, r0(m)/2 for m >= 4.
pub fn r_ie(
    m: usize,
    budget: &RunBudget,
    cache: Option<&mut CountsCache>,
) -> Result<Int, Error> {
    if m == 3 {
        return Ok(int(1));
    }
    let r0 = r0_from_charpoly(m, budget, cache)?;
    if (&r0 % int(2)) != Int::zero() {
        return Err(Error::ConsistencyFailure(format!("r0({m}) is odd")));
    }
    Ok(r0 / int(2))
}

/// An exact ray representative of the slice normal: the hyperplane is
/// {x in H0 : v^T x = c} with c = |v|^2 > 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDirection {
    pub v: Vec<Rat>,
    pub c: Rat,
}

/// Builds the slice direction of a codimension-one configuration
/// (n = m-2): recenter the objects, set u_i = -(|x_i|^2 - s)/2 with
/// s the mean squared norm, and project u off the column space of the
/// recentered coordinate matrix. The result is checked to be nonzero
/// with no proper nonempty coordinate subset summing to zero.
pub fn v_map(config: &ObjectConfig) -> Result<SliceDirection, Error> {
    let (m, n) = (config.m, config.n);
    if n + 2 != m {
        return Err(Error::RangeViolation(format!(
            "v_map needs n = m-2, got m={m} n={n}"
        )));
    }
    check_generic(config).map_err(|v| Error::NotGeneric(v.to_string()))?;
    let mean: Vec<Rat> = (0..n)
        .map(|k| {
            config.points.iter().map(|p| &p[k]).sum::<Rat>()
                / Rat::from_integer(Int::from(m as i64))
        })
        .collect();
    let centered: Vec<Vec<Rat>> = config
        .points
        .iter()
        .map(|p| p.iter().zip(&mean).map(|(a, b)| a - b).collect())
        .collect();
    let norms: Vec<Rat> = centered.iter().map(|p| dot(p, p)).collect();
    let s = norms.iter().sum::<Rat>() / Rat::from_integer(Int::from(m as i64));
    let half = Rat::new(Int::from(1), Int::from(2));
    let u: Vec<Rat> = norms.iter().map(|nsq| -(nsq - &s) * &half).collect();
    // Columns of W are the m-vectors of each coordinate across objects.
    let w = RationalMatrix::new(
        (0..m)
            .map(|i| (0..n).map(|k| centered[i][k].clone()).collect())
            .collect(),
    );
    let proj = w.project_onto_column_space(&u)?;
    let v: Vec<Rat> = u.iter().zip(&proj).map(|(a, b)| a - b).collect();
    if v.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateProjection);
    }
    debug_assert!(v.iter().sum::<Rat>().is_zero());
    // Ray genericity: no proper nonempty subset of coordinates sums to 0.
    for mask in 1..(1u32 << m) - 1 {
        let sum: Rat = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| v[i].clone())
            .sum();
        if sum.is_zero() {
            return Err(Error::NotGeneric(format!(
                "slice direction has a vanishing coordinate subset sum (mask {mask:#b})"
            )));
        }
    }
    let c = dot(&v, &v);
    Ok(SliceDirection { v, c })
}

/// The set of braid chambers met by the slice hyperplane: one exact LP
/// per permutation over {sum x = 0, v^T x = c, x_{i1} > ... > x_{im}}.
pub fn braid_slice_pattern(
    dir: &SliceDirection,
    m: usize,
    budget: &RunBudget,
) -> Result<RankingPattern, Error> {
    if dir.v.len() != m {
        return Err(Error::DimensionMismatch);
    }
    let meter = BudgetMeter::new();
    let perms: Vec<Vec<usize>> = (1..=m).permutations(m).collect();
    let hits: Result<Vec<Option<Ranking>>, Error> = perms
        .par_iter()
        .map(|perm| {
            meter.charge_lp(budget)?;
            let mut cons = Vec::with_capacity(m + 1);
            cons.push(Constraint::new(
                vec![Rat::from_integer(Int::from(1)); m],
                Rel::Eq,
                Rat::zero(),
            ));
            cons.push(Constraint::new(dir.v.clone(), Rel::Eq, dir.c.clone()));
            for w in perm.windows(2) {
                let mut row = vec![Rat::zero(); m];
                row[w[0] - 1] = Rat::from_integer(Int::from(1));
                row[w[1] - 1] = -Rat::from_integer(Int::from(1));
                cons.push(Constraint::new(row, Rel::Gt, Rat::zero()));
            }
            Ok(strict_feasible_point(m, &cons)
                .map(|_| Ranking::new(perm.clone()).unwrap()))
        })
        .collect();
    Ok(hits?.into_iter().flatten().collect())
}

/// q(m) by the formula route: (-1)^{m-1} chi(allsubset0_m, -1) - m.
pub fn q_from_charpoly(
    m: usize,
    budget: &RunBudget,
    cache: Option<&mut CountsCache>,
) -> Result<Int, Error> {
    if m < 3 {
        return Err(Error::RangeViolation("need m >= 3".into()));
    }
    let chi = charpoly(Family::AllSubset0, m, budget, cache)?.poly;
    let v = chi.eval(&Int::from(-1));
    let total = if (m - 1) % 2 == 0 { v } else { -v };
    Ok(total - Int::from(m as i64))
}

/// Chamber census of the restricted all-subset arrangement by ambient
/// coordinate signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEnumeration {
    pub chambers: usize,
    /// Chambers with exactly one positive ambient coordinate.
    pub d_type: usize,
    /// Chambers with exactly one negative ambient coordinate.
    pub neg_d_type: usize,
    /// All remaining chambers (at least two of each sign).
    pub v2_type: usize,
    pub q: Int,
    /// Number of distinct braid-slice patterns over chamber witnesses,
    /// when the bijection check was requested.
    pub distinct_patterns: Option<usize>,
}

/// q(m) by direct enumeration of the chambers of the restricted
/// all-subset arrangement, with the sign-class census; optionally also
/// verifies that chamber rays induce pairwise distinct braid-slice
/// patterns.
pub fn q_enumerate(
    m: usize,
    check_bijection: bool,
    budget: &RunBudget,
) -> Result<QEnumeration, Error> {
    if m < 3 {
        return Err(Error::RangeViolation("need m >= 3".into()));
    }
    let a = all_subset_restricted(m);
    let chambers = enumerate_chambers(&a, None, budget)?;
    let (mut d_type, mut neg_d_type, mut v2_type) = (0usize, 0usize, 0usize);
    let mut rays: Vec<Vec<Rat>> = Vec::with_capacity(chambers.len());
    for ch in &chambers {
        let mut v = ch.witness.clone();
        let last = -v.iter().sum::<Rat>();
        v.push(last);
        let pos = v.iter().filter(|x| x.is_positive()).count();
        let neg = v.iter().filter(|x| x.is_negative()).count();
        if pos + neg != m {
            return Err(Error::ConsistencyFailure(
                "chamber witness has a zero ambient coordinate".into(),
            ));
        }
        if pos == 1 {
            d_type += 1;
        } else if neg == 1 {
            neg_d_type += 1;
        } else {
            v2_type += 1;
        }
        rays.push(v);
    }
    if d_type != m || neg_d_type != m {
        return Err(Error::ConsistencyFailure(format!(
            "sign census broken: {d_type} single-positive and {neg_d_type} \
             single-negative chambers, expected {m} each"
        )));
    }
    let distinct_patterns = if check_bijection {
        let pats: Result<BTreeSet<Vec<String>>, Error> = rays
            .par_iter()
            .map(|v| {
                let dir = SliceDirection { v: v.clone(), c: dot(v, v) };
                Ok(braid_slice_pattern(&dir, m, budget)?.to_strings())
            })
            .collect();
        let pats = pats?;
        if pats.len() != chambers.len() {
            return Err(Error::ConsistencyFailure(format!(
                "{} chambers but {} distinct slice patterns",
                chambers.len(),
                pats.len()
            )));
        }
        Some(pats.len())
    } else {
        None
    };
    Ok(QEnumeration {
        chambers: chambers.len(),
        d_type,
        neg_d_type,
        v2_type,
        q: Int::from(chambers.len() as i64) - Int::from(m as i64),
        distinct_patterns,
    })
}

/// Upper bound for the number of inequivalent codimension-one patterns:
/// |ch(allsubset0_m union braid0_m)| / m! - 1. Known to be exact for
/// m <= 6; an upper bound only beyond that.
pub fn q_ie_upper(
    m: usize,
    budget: &RunBudget,
    cache: Option<&mut CountsCache>,
) -> Result<Int, Error> {
    if m < 3 {
        return Err(Error::RangeViolation("need m >= 3".into()));
    }
    let chi = charpoly(Family::AllSubset0UnionBraid0, m, budget, cache)?.poly;
    let v = chi.eval(&Int::from(-1));
    let total = if (m - 1) % 2 == 0 { v } else { -v };
    let fm = factorial(m as u32);
    if (&total % &fm) != Int::zero() {
        return Err(Error::ConsistencyFailure(format!(
            "union chamber count not divisible by {m}!"
        )));
    }
    Ok(total / fm - int(1))
}

/// Draws a generic integer configuration with coordinates uniform in
/// [-10^4, 10^4], rejecting until check_generic accepts. Deterministic in
/// the seed.
pub fn random_generic_config(m: usize, n: usize, seed: u64) -> ObjectConfig {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pts: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(-10_000..=10_000)).collect())
            .collect();
        let Ok(cfg) = ObjectConfig::from_integers(&pts) else { continue };
        if check_generic(&cfg).is_ok() {
            return cfg;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn cfg_1d(xs: &[i64]) -> ObjectConfig {
        ObjectConfig::from_integers(&xs.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn judge_ranking_examples() {
        let c = cfg_1d(&[0, 1, 3]);
        let r = rank_of_judge(&c, &[rat(0)]).unwrap();
        assert_eq!(r.as_slice(), &[1, 2, 3]);
        assert!(matches!(
            rank_of_judge(&c, &[rat(2)]),
            Err(Error::TiedDistances(2, 3))
        ));
        let r = rank_of_judge(&c, &[ratio(5, 4)]).unwrap();
        assert_eq!(r.as_slice(), &[2, 1, 3]);
    }

    #[test]
    fn pattern_walk_examples() {
        let c = cfg_1d(&[0, 1, 3]);
        let p = pattern_1d(&c).unwrap();
        assert_eq!(p.to_strings(), vec!["123", "213", "231", "321"]);
        // Scaling preserves the pattern.
        let c100 = cfg_1d(&[0, 100, 300]);
        assert_eq!(pattern_1d(&c100).unwrap(), p);
        // Unsorted input is fine; pattern size is C(m,2)+1.
        let c = cfg_1d(&[7, 0, 3, 100]);
        assert_eq!(pattern_1d(&c).unwrap().len(), 7);
        // Tied midpoints rejected: 0+3 = 1+2.
        assert!(matches!(
            pattern_1d(&cfg_1d(&[0, 1, 2, 3])),
            Err(Error::TiedMidpoints(..))
        ));
    }

    #[test]
    fn pattern_matches_chamber_route() {
        let b = RunBudget::default();
        for xs in [[0i64, 1, 3, 7], [2, 11, 19, 41], [-9, -2, 0, 5]] {
            let c = cfg_1d(&xs);
            assert_eq!(pattern_1d(&c).unwrap(), admissible_rankings(&c, &b).unwrap());
        }
    }

    #[test]
    fn negation_and_reversal_symmetries() {
        let c = cfg_1d(&[0, 1, 3, 7]);
        let neg = cfg_1d(&[0, -1, -3, -7]);
        assert_eq!(pattern_1d(&c).unwrap(), pattern_1d(&neg).unwrap());
        // x' = (-x_4,...,-x_1) relabels by sigma(i) = m+1-i and differs
        // from the original pattern.
        let rev = cfg_1d(&[-7, -3, -1, 0]);
        let sigma = [4, 3, 2, 1];
        let p = pattern_1d(&c).unwrap();
        let pr = pattern_1d(&rev).unwrap();
        assert_eq!(pr, p.relabel(&sigma));
        assert_ne!(pr, p);
    }

    #[test]
    fn stirling_counts() {
        assert_eq!(count_admissible(4, 1).unwrap(), (int(7), int(5)));
        assert_eq!(count_admissible(3, 1).unwrap(), (int(4), int(2)));
        assert_eq!(count_admissible(5, 2).unwrap().0, int(46));
        assert_eq!(count_admissible(4, 2).unwrap().0, int(18));
        assert!(count_admissible(4, 3).is_err());
    }

    #[test]
    fn admissible_rankings_counts() {
        let b = RunBudget::default();
        let c = random_generic_config(4, 1, 11);
        assert_eq!(admissible_rankings(&c, &b).unwrap().len(), 7);
        let c = random_generic_config(5, 2, 12);
        assert_eq!(admissible_rankings(&c, &b).unwrap().len(), 46);
        let c = random_generic_config(4, 3, 13);
        assert_eq!(admissible_rankings(&c, &b).unwrap().len(), 24);
    }

    #[test]
    fn r0_small() {
        let b = RunBudget::default();
        assert_eq!(r0_enumerate(4, &b).unwrap(), int(2));
        assert_eq!(r0_enumerate(5, &b).unwrap(), int(12));
        assert_eq!(r0_from_charpoly(4, &b, None).unwrap(), int(2));
        assert_eq!(r_total(4, &b, None).unwrap(), int(24));
        assert_eq!(r_ie(3, &b, None).unwrap(), int(1));
        assert_eq!(r_ie(5, &b, None).unwrap(), int(6));
    }

    #[test]
    fn v_map_properties() {
        // m=3, n=1.
        let c = cfg_1d(&[0, 1, 3]);
        let d = v_map(&c).unwrap();
        assert!(d.v.iter().sum::<Rat>().is_zero());
        assert!(d.c.is_positive());
        // Scale covariance: lambda-scaled config gives lambda^2 v, same ray.
        let c2 = cfg_1d(&[0, 2, 6]);
        let d2 = v_map(&c2).unwrap();
        for (a, b) in d.v.iter().zip(&d2.v) {
            assert_eq!(&(a * rat(4)), b);
        }
        // m=4, n=2 random config: coordinates sum to zero exactly.
        let c = random_generic_config(4, 2, 5);
        let d = v_map(&c).unwrap();
        assert!(d.v.iter().sum::<Rat>().is_zero());
    }

    #[test]
    fn slice_pattern_matches_admissible() {
        let b = RunBudget::default();
        for seed in [1u64, 2, 3] {
            let c = random_generic_config(4, 2, seed);
            let d = v_map(&c).unwrap();
            let sliced = braid_slice_pattern(&d, 4, &b).unwrap();
            assert_eq!(sliced, admissible_rankings(&c, &b).unwrap(), "seed {seed}");
        }
        // Ray invariance.
        let c = random_generic_config(4, 2, 9);
        let d = v_map(&c).unwrap();
        let scaled = SliceDirection {
            v: d.v.iter().map(|x| x * rat(3)).collect(),
            c: &d.c * rat(3),
        };
        assert_eq!(
            braid_slice_pattern(&d, 4, &b).unwrap(),
            braid_slice_pattern(&scaled, 4, &b).unwrap()
        );
    }

    #[test]
    fn m3_slice_patterns_are_large() {
        let b = RunBudget::default();
        let c = cfg_1d(&[0, 1, 3]);
        let d = v_map(&c).unwrap();
        assert!(braid_slice_pattern(&d, 3, &b).unwrap().len() >= 4);
    }

    #[test]
    fn q_routes_agree() {
        let b = RunBudget::default();
        assert_eq!(q_from_charpoly(3, &b, None).unwrap(), int(3));
        assert_eq!(q_from_charpoly(4, &b, None).unwrap(), int(28));
        let e = q_enumerate(4, true, &b).unwrap();
        assert_eq!(e.chambers, 32);
        assert_eq!((e.d_type, e.neg_d_type), (4, 4));
        assert_eq!(e.q, int(28));
        assert_eq!(e.distinct_patterns, Some(32));
        let e3 = q_enumerate(3, true, &b).unwrap();
        assert_eq!(e3.q, int(3));
    }

    #[test]
    fn qie_small() {
        let b = RunBudget::default();
        assert_eq!(q_ie_upper(3, &b, None).unwrap(), int(1));
        assert_eq!(q_ie_upper(4, &b, None).unwrap(), int(3));
        assert_eq!(q_ie_upper(5, &b, None).unwrap(), int(11));
    }
}
