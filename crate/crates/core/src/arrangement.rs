//! Construction and canonicalization of the named hyperplane arrangements:
//! braid, mid-hyperplane, all-subset (restricted to the zero-sum hyperplane),
//! and perpendicular-bisector arrangements of object configurations, plus
//! the forest-rank genericity checks.

use std::collections::HashSet;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactmath::{rat_from_str, rat_to_string, Int, Rat, RationalMatrix};

/// Structured tag identifying where a hyperplane came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    /// Pair (i, j), 1-based.
    Pair(usize, usize),
    /// Quadruple (i, j, k, l), 1-based: x_i + x_j = x_k + x_l.
    Quad(usize, usize, usize, usize),
    /// Subset of [m], 1-based members.
    Subset(Vec<usize>),
    None,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Pair(i, j) => write!(f, "({i},{j})"),
            Label::Quad(i, j, k, l) => write!(f, "({i},{j}|{k},{l})"),
            Label::Subset(s) => write!(
                f,
                "{{{}}}",
                s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            Label::None => write!(f, "-"),
        }
    }
}

/// Affine hyperplane `{x : normal . x = offset}` with integer data in
/// canonical form: entries have gcd 1 and the first nonzero normal entry
/// is positive.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    pub normal: Vec<Int>,
    pub offset: Int,
    pub label: Label,
}

impl PartialEq for Hyperplane {
    fn eq(&self, other: &Self) -> bool {
        self.normal == other.normal && self.offset == other.offset
    }
}
impl Eq for Hyperplane {}

impl std::hash::Hash for Hyperplane {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.normal.hash(state);
        self.offset.hash(state);
    }
}

impl Hyperplane {
    /// Canonicalizes integer data: divide by the gcd of all entries and
    /// flip sign so the first nonzero normal entry is positive.
    pub fn from_integer(normal: Vec<Int>, offset: Int, label: Label) -> Option<Hyperplane> {
        if normal.iter().all(Zero::is_zero) {
            return None;
        }
        let mut g = offset.clone().abs();
        for x in &normal {
            g = num::integer::gcd(g, x.clone().abs());
        }
        let mut normal: Vec<Int> = normal.into_iter().map(|x| x / &g).collect();
        let mut offset = offset / &g;
        let first = normal.iter().find(|x| !x.is_zero()).unwrap();
        if first.is_negative() {
            for x in normal.iter_mut() {
                *x = -x.clone();
            }
            offset = -offset;
        }
        Some(Hyperplane { normal, offset, label })
    }

    /// Canonicalizes from rational coefficients by clearing denominators.
    pub fn from_rational(normal: &[Rat], offset: &Rat, label: Label) -> Option<Hyperplane> {
        let mut lcm = Int::one();
        for d in normal.iter().map(|r| r.denom()).chain([offset.denom()]) {
            lcm = num::integer::lcm(lcm, d.clone());
        }
        let ints: Vec<Int> = normal
            .iter()
            .map(|r| r.numer() * (&lcm / r.denom()))
            .collect();
        let off = offset.numer() * (&lcm / offset.denom());
        Hyperplane::from_integer(ints, off, label)
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Exact evaluation of `normal . x - offset`.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut acc = -Rat::from_integer(self.offset.clone());
        for (n, xi) in self.normal.iter().zip(x) {
            acc += Rat::from_integer(n.clone()) * xi;
        }
        acc
    }

    fn sort_key(&self) -> (Vec<Int>, Int) {
        (self.normal.clone(), self.offset.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Braid,
    BraidRestricted,
    Mid,
    AllSubset0,
    AllSubset0UnionBraid0,
    Unfolding,
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Braid => "braid",
            Family::BraidRestricted => "braid0",
            Family::Mid => "mid",
            Family::AllSubset0 => "allsubset0",
            Family::AllSubset0UnionBraid0 => "allsubset0_union_braid0",
            Family::Unfolding => "unfolding",
            Family::Other => "other",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "braid" => Ok(Family::Braid),
            "braid0" => Ok(Family::BraidRestricted),
            "mid" => Ok(Family::Mid),
            "allsubset0" => Ok(Family::AllSubset0),
            "allsubset0_union_braid0" => Ok(Family::AllSubset0UnionBraid0),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Finite list of distinct hyperplanes in a common ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
    pub family: Family,
}

impl Arrangement {
    /// Deduplicates canonicalized hyperplanes, keeping first occurrence.
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane>, family: Family) -> Arrangement {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for h in hyperplanes {
            assert_eq!(h.dim(), dim, "hyperplane dimension mismatch");
            if seen.insert(h.sort_key()) {
                out.push(h);
            }
        }
        Arrangement { dim, hyperplanes: out, family }
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    /// Normals as a rational matrix, one row per hyperplane.
    pub fn normal_matrix(&self) -> RationalMatrix {
        RationalMatrix::new(
            self.hyperplanes
                .iter()
                .map(|h| {
                    h.normal
                        .iter()
                        .map(|n| Rat::from_integer(n.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.normal_matrix().rank()
        }
    }

    /// Hyperplanes sorted by canonical form (deterministic insertion order
    /// for chamber enumeration).
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| self.hyperplanes[i].sort_key());
        idx
    }
}

/// m rational points in R^n, all distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectConfig {
    pub m: usize,
    pub n: usize,
    pub points: Vec<Vec<Rat>>,
}

impl ObjectConfig {
    pub fn new(points: Vec<Vec<Rat>>) -> Result<ObjectConfig, Error> {
        let m = points.len();
        if m < 2 {
            return Err(Error::RangeViolation("need at least 2 points".into()));
        }
        let n = points[0].len();
        if n == 0 || points.iter().any(|p| p.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        for i in 0..m {
            for j in i + 1..m {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoints(i + 1, j + 1));
                }
            }
        }
        Ok(ObjectConfig { m, n, points })
    }

    pub fn from_integers(points: &[Vec<i64>]) -> Result<ObjectConfig, Error> {
        ObjectConfig::new(
            points
                .iter()
                .map(|p| p.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
                .collect(),
        )
    }

    pub fn norm_sq(&self, i: usize) -> Rat {
        self.points[i].iter().map(|x| x * x).sum()
    }
}

/// Braid arrangement: x_i = x_j in R^m.
pub fn braid(m: usize) -> Arrangement {
    assert!(m >= 2);
    let mut hs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut n = vec![Int::zero(); m];
            n[i] = Int::one();
            n[j] = -Int::one();
            hs.push(Hyperplane::from_integer(n, Int::zero(), Label::Pair(i + 1, j + 1)).unwrap());
        }
    }
    Arrangement::new(m, hs, Family::Braid)
}

/// Braid arrangement restricted to the zero-sum hyperplane, in the
/// coordinates x_1..x_{m-1} with x_m = -(x_1+...+x_{m-1}).
pub fn braid_restricted(m: usize) -> Arrangement {
    assert!(m >= 2);
    let d = m - 1;
    let mut hs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let mut n = vec![Int::zero(); d];
            if j < d {
                n[i] = Int::one();
                n[j] = -Int::one();
            } else {
                // x_i - x_m = x_i + (x_1 + ... + x_{m-1})
                for v in n.iter_mut() {
                    *v = Int::one();
                }
                n[i] = Int::from(2);
            }
            hs.push(Hyperplane::from_integer(n, Int::zero(), Label::Pair(i + 1, j + 1)).unwrap());
        }
    }
    Arrangement::new(d, hs, Family::BraidRestricted)
}

/// Mid-hyperplane arrangement: braid hyperplanes plus x_i + x_j = x_k + x_l
/// over quadruples of distinct indices with i<j, i<k<l.
pub fn mid_hyperplane(m: usize) -> Arrangement {
    assert!(m >= 3);
    let mut hs = braid(m).hyperplanes;
    for i in 0..m {
        for j in i + 1..m {
            for k in i + 1..m {
                for l in k + 1..m {
                    if k == j || l == j {
                        continue;
                    }
                    let mut n = vec![Int::zero(); m];
                    n[i] = Int::one();
                    n[j] = Int::one();
                    n[k] = -Int::one();
                    n[l] = -Int::one();
                    hs.push(
                        Hyperplane::from_integer(
                            n,
                            Int::zero(),
                            Label::Quad(i + 1, j + 1, k + 1, l + 1),
                        )
                        .unwrap(),
                    );
                }
            }
        }
    }
    Arrangement::new(m, hs, Family::Mid)
}

/// The non-braid part of the mid-hyperplane arrangement.
pub fn mid_quads_only(m: usize) -> Arrangement {
    let mid = mid_hyperplane(m);
    let hs: Vec<Hyperplane> = mid
        .hyperplanes
        .into_iter()
        .filter(|h| matches!(h.label, Label::Quad(..)))
        .collect();
    Arrangement::new(m, hs, Family::Other)
}

/// All-subset arrangement restricted to the zero-sum hyperplane, expressed
/// in the coordinates x_1..x_{m-1}. Complementary subsets produce the same
/// hyperplane and are deduplicated, so there are (2^m - 2)/2 of them.
pub fn all_subset_restricted(m: usize) -> Arrangement {
    assert!((3..=30).contains(&m));
    let d = m - 1;
    let mut hs = Vec::new();
    for mask in 1u32..(1u32 << m) - 1 {
        let mut n = vec![Int::zero(); d];
        for i in 0..d {
            if mask & (1 << i) != 0 {
                n[i] += 1;
            }
        }
        if mask & (1 << (m - 1)) != 0 {
            for v in n.iter_mut() {
                *v -= 1;
            }
        }
        let members: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        if let Some(h) = Hyperplane::from_integer(n, Int::zero(), Label::Subset(members)) {
            hs.push(h);
        }
    }
    Arrangement::new(d, hs, Family::AllSubset0)
}

/// Perpendicular-bisector arrangement of an object configuration in R^n.
pub fn unfolding_arrangement(config: &ObjectConfig) -> Result<Arrangement, Error> {
    let m = config.m;
    let mut hs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let normal: Vec<Rat> = config.points[i]
                .iter()
                .zip(&config.points[j])
                .map(|(a, b)| a - b)
                .collect();
            let offset = (config.norm_sq(i) - config.norm_sq(j)) / Rat::from_integer(Int::from(2));
            let h = Hyperplane::from_rational(&normal, &offset, Label::Pair(i + 1, j + 1))
                .ok_or(Error::DuplicatePoints(i + 1, j + 1))?;
            hs.push(h);
        }
    }
    Ok(Arrangement::new(config.n, hs, Family::Unfolding))
}

/// Union with canonical deduplication; requires matching dimensions.
pub fn union(a: &Arrangement, b: &Arrangement) -> Result<Arrangement, Error> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch);
    }
    let family = if a.family == b.family { a.family } else { Family::Other };
    let mut hs = a.hyperplanes.clone();
    hs.extend(b.hyperplanes.clone());
    Ok(Arrangement::new(a.dim, hs, family))
}

/// Expresses the arrangement in coordinates of a complement of its common
/// center (the pivot coordinates of the normal matrix), preserving rank and
/// chamber count.
pub fn essentialize(a: &Arrangement) -> Arrangement {
    if a.is_empty() {
        return a.clone();
    }
    let (_, rank, pivots) = a.normal_matrix().rref();
    if rank == a.dim {
        return a.clone();
    }
    let hs = a
        .hyperplanes
        .iter()
        .map(|h| {
            let n: Vec<Int> = pivots.iter().map(|&c| h.normal[c].clone()).collect();
            Hyperplane::from_integer(n, h.offset.clone(), h.label.clone()).unwrap()
        })
        .collect();
    Arrangement::new(rank, hs, a.family)
}

/// A witness that the forest-rank genericity condition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityViolation {
    /// "A1" or "A2".
    pub condition: &'static str,
    /// 1-based edge list whose difference vectors are dependent.
    pub edges: Vec<(usize, usize)>,
}

impl fmt::Display for GenericityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}) fails on edges {:?}", self.condition, self.edges)
    }
}

struct Dsu(Vec<usize>);
impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Checks that every `nu`-edge forest on the m points has difference
/// vectors of exact rank `nu`. Returns the first violating forest.
fn check_forest_rank(
    points: &[Vec<Rat>],
    nu: usize,
    condition: &'static str,
) -> Result<(), GenericityViolation> {
    let m = points.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j));
        }
    }
    // Depth-first enumeration of nu-edge forests among the C(m,2) edges.
    fn rec(
        points: &[Vec<Rat>],
        edges: &[(usize, usize)],
        start: usize,
        chosen: &mut Vec<(usize, usize)>,
        dsu: &Dsu,
        nu: usize,
        condition: &'static str,
    ) -> Result<(), GenericityViolation> {
        if chosen.len() == nu {
            let rows: Vec<Vec<Rat>> = chosen
                .iter()
                .map(|&(i, j)| {
                    points[i]
                        .iter()
                        .zip(&points[j])
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            if RationalMatrix::new(rows).rank() != nu {
                return Err(GenericityViolation {
                    condition,
                    edges: chosen.iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
                });
            }
            return Ok(());
        }
        for e in start..edges.len() {
            if edges.len() - e < nu - chosen.len() {
                break;
            }
            let (i, j) = edges[e];
            let mut d2 = Dsu(dsu.0.clone());
            if !d2.union(i, j) {
                continue; // would close a loop
            }
            chosen.push((i, j));
            rec(points, edges, e + 1, chosen, &d2, nu, condition)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(points, &edges, 0, &mut Vec::new(), &Dsu::new(m), nu, condition)
}

/// Genericity conditions on an object configuration.
///
/// For n <= m-2: every n-edge forest has independent difference vectors
/// (A1), and every (n+1)-edge forest of the paraboloid-lifted points has
/// independent differences (A2). For n >= m-1 the forest condition with
/// nu = m-1 is checked on the plain points.
pub fn check_generic(config: &ObjectConfig) -> Result<(), GenericityViolation> {
    let (m, n) = (config.m, config.n);
    if n >= m - 1 {
        return check_forest_rank(&config.points, m - 1, "A1");
    }
    check_forest_rank(&config.points, n, "A1")?;
    let lifted: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut p = config.points[i].clone();
            p.push(config.norm_sq(i));
            p
        })
        .collect();
    check_forest_rank(&lifted, n + 1, "A2")
}

// --- JSON interchange ---------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct HyperplaneJson {
    pub normal: Vec<String>,
    pub offset: String,
    pub label: String,
}

#[derive(Serialize, Deserialize)]
pub struct ArrangementJson {
    pub schema: String,
    pub family: String,
    pub dim: usize,
    pub hyperplanes: Vec<HyperplaneJson>,
}

impl Arrangement {
    pub fn to_json(&self) -> ArrangementJson {
        ArrangementJson {
            schema: "1".into(),
            family: self.family.to_string(),
            dim: self.dim,
            hyperplanes: self
                .hyperplanes
                .iter()
                .map(|h| HyperplaneJson {
                    normal: h.normal.iter().map(|n| n.to_string()).collect(),
                    offset: h.offset.to_string(),
                    label: h.label.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct ObjectConfigJson {
    pub m: usize,
    pub n: usize,
    pub points: Vec<Vec<String>>,
}

impl ObjectConfig {
    pub fn to_json(&self) -> ObjectConfigJson {
        ObjectConfigJson {
            m: self.m,
            n: self.n,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(rat_to_string).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &ObjectConfigJson) -> Result<ObjectConfig, Error> {
        let points: Result<Vec<Vec<Rat>>, Error> = j
            .points
            .iter()
            .map(|p| p.iter().map(|s| rat_from_str(s)).collect())
            .collect();
        let cfg = ObjectConfig::new(points?)?;
        if cfg.m != j.m || cfg.n != j.n {
            return Err(Error::Parse("m/n fields disagree with points".into()));
        }
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    #[test]
    fn braid_counts() {
        assert_eq!(braid(3).len(), 3);
        assert_eq!(braid(5).len(), 10);
        assert_eq!(braid(2).len(), 1);
    }

    #[test]
    fn mid_counts() {
        assert_eq!(mid_hyperplane(4).len(), 9);
        assert_eq!(mid_hyperplane(5).len(), 25);
        assert_eq!(mid_hyperplane(3).len(), 3);
        for m in 4..=10 {
            let expect = m * (m - 1) / 2
                + 3 * (m * (m - 1) * (m - 2) * (m - 3) / 24);
            assert_eq!(mid_hyperplane(m).len(), expect, "m={m}");
        }
    }

    #[test]
    fn all_subset_restricted_counts() {
        // Brute-force derivation: every proper nonempty subset, canonicalized
        // after eliminating x_m, pairs up with its complement.
        assert_eq!(all_subset_restricted(4).len(), 7);
        assert_eq!(all_subset_restricted(3).len(), 3);
        for m in 3..=8 {
            assert_eq!(all_subset_restricted(m).len(), ((1usize << m) - 2) / 2, "m={m}");
        }
    }

    #[test]
    fn complement_subsets_canonicalize_identically() {
        // {1} and {2,3,4} in m=4 give the same hyperplane.
        let a = all_subset_restricted(4);
        let h1 = Hyperplane::from_integer(
            vec![Int::from(1), Int::from(0), Int::from(0)],
            Int::from(0),
            Label::None,
        )
        .unwrap();
        assert_eq!(a.hyperplanes.iter().filter(|h| **h == h1).count(), 1);
    }

    #[test]
    fn unfolding_1d_midpoints() {
        let c = ObjectConfig::from_integers(&[vec![0], vec![2]]).unwrap();
        let a = unfolding_arrangement(&c).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.hyperplanes[0].normal, vec![Int::from(1)]);
        assert_eq!(a.hyperplanes[0].offset, Int::from(1));

        let c = ObjectConfig::from_integers(&[vec![0], vec![1], vec![3]]).unwrap();
        let a = unfolding_arrangement(&c).unwrap();
        // midpoints 1/2, 3/2, 2 -> canonical forms 2x=1, 2x=3, x=2
        let offsets: Vec<(Int, Int)> = a
            .hyperplanes
            .iter()
            .map(|h| (h.normal[0].clone(), h.offset.clone()))
            .collect();
        assert!(offsets.contains(&(Int::from(2), Int::from(1))));
        assert!(offsets.contains(&(Int::from(2), Int::from(3))));
        assert!(offsets.contains(&(Int::from(1), Int::from(2))));
    }

    #[test]
    fn unfolding_2d_bisectors() {
        let c = ObjectConfig::from_integers(&[vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        let a = unfolding_arrangement(&c).unwrap();
        assert_eq!(a.len(), 3);
        // Bisector of (0,0),(2,0) is x = 1; of (0,0),(0,2) is y = 1; of
        // (2,0),(0,2) is x = y.
        for h in &a.hyperplanes {
            let ok = (h.normal == vec![Int::from(1), Int::from(0)] && h.offset == Int::from(1))
                || (h.normal == vec![Int::from(0), Int::from(1)] && h.offset == Int::from(1))
                || (h.normal == vec![Int::from(1), Int::from(-1)] && h.offset == Int::from(0));
            assert!(ok, "unexpected bisector {:?}", h);
        }
    }

    #[test]
    fn union_behavior() {
        let a0 = all_subset_restricted(4);
        let b0 = braid_restricted(4);
        let u = union(&a0, &b0).unwrap();
        assert_eq!(u.len(), 13);
        let idem = union(&a0, &a0).unwrap();
        assert_eq!(idem.hyperplanes, a0.hyperplanes);
        let empty = Arrangement::new(3, vec![], Family::Other);
        assert_eq!(union(&a0, &empty).unwrap().hyperplanes, a0.hyperplanes);
        assert!(union(&a0, &braid(4)).is_err());
    }

    #[test]
    fn essentialize_braid() {
        let e = essentialize(&braid(3));
        assert_eq!(e.dim, 2);
        assert_eq!(e.len(), 3);
        assert_eq!(e.rank(), 2);
        // Already essential: unchanged.
        let again = essentialize(&e);
        assert_eq!(again, e);
        // M_5 essentializes to dimension 4.
        assert_eq!(essentialize(&mid_hyperplane(5)).dim, 4);
    }

    #[test]
    fn canonical_scaling_invariance() {
        let h1 = Hyperplane::from_rational(
            &[ratio(2, 3), ratio(-4, 3)],
            &ratio(2, 3),
            Label::None,
        )
        .unwrap();
        let h2 = Hyperplane::from_rational(&[rat(1), rat(-2)], &rat(1), Label::None).unwrap();
        assert_eq!(h1, h2);
        // Negative leading entry flips.
        let h3 = Hyperplane::from_rational(&[rat(-1), rat(2)], &rat(-1), Label::None).unwrap();
        assert_eq!(h3, h2);
    }

    #[test]
    fn generic_1d_configs() {
        let ok = ObjectConfig::from_integers(&[vec![0], vec![1], vec![3], vec![7]]).unwrap();
        assert!(check_generic(&ok).is_ok());

        let bad = ObjectConfig::from_integers(&[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        let v = check_generic(&bad).unwrap_err();
        assert_eq!(v.condition, "A2");
    }

    #[test]
    fn cocircular_square_violates_a2() {
        // Four points on the circle of radius 5 with pairwise differences
        // of distinct slopes, so only cocircularity can fail.
        let c = ObjectConfig::from_integers(&[
            vec![5, 0],
            vec![0, 5],
            vec![4, 3],
            vec![-4, 3],
        ])
        .unwrap();
        let v = check_generic(&c).unwrap_err();
        assert_eq!(v.condition, "A2");
    }

    #[test]
    fn high_dim_uses_spanning_forest_condition() {
        // m=4, n=3 generic simplex-like points.
        let c = ObjectConfig::from_integers(&[
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ])
        .unwrap();
        assert!(check_generic(&c).is_ok());
        // Collinear points in R^3 fail.
        let c = ObjectConfig::from_integers(&[
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![2, 0, 0],
            vec![3, 0, 0],
        ])
        .unwrap();
        assert!(check_generic(&c).is_err());
    }

    #[test]
    fn config_json_round_trip() {
        let c = ObjectConfig::new(vec![
            vec![ratio(1, 2), rat(0)],
            vec![rat(1), ratio(-3, 4)],
            vec![rat(2), rat(2)],
        ])
        .unwrap();
        let j = c.to_json();
        let back = ObjectConfig::from_json(&j).unwrap();
        assert_eq!(back, c);
    }
}
