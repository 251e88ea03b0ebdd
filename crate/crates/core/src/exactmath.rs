//! Exact arithmetic: big integers, reduced rationals, integer polynomials,
//! Lagrange interpolation, Stirling numbers, and rational linear algebra.
//!
//! No floating point is used anywhere in this module: sign decisions made
//! here feed chamber feasibility tests downstream.

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as `"p"` or `"p/q"` with positive denominator.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// m! as a big integer.
pub fn factorial(m: u32) -> Int {
    let mut acc = Int::one();
    for i in 2..=m as i64 {
        acc *= i;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k as i64 {
        acc = acc * (n as i64 - i) / (i + 1);
    }
    acc
}

/// Signless Stirling numbers of the first kind: the coefficient of `t^k`
/// in the rising factorial `t(t+1)...(t+m-1)`. Returns 0 for `k <= 0`
/// (except the trivial m=0 case) or `k > m`.
pub fn stirling_first_signless(m: u32, k: i64) -> Int {
    assert!(m >= 1, "m must be positive");
    if k <= 0 || k > m as i64 {
        return Int::zero();
    }
    // Row of the triangle by the recurrence S(m,k) = S(m-1,k-1) + (m-1)S(m-1,k).
    let mut row: Vec<Int> = vec![Int::zero(), Int::one()]; // m = 1
    for next in 2..=m {
        let mut new_row = vec![Int::zero(); next as usize + 1];
        for j in 1..=next as usize {
            let mut v = if j >= 1 { row.get(j - 1).cloned().unwrap_or_default() } else { Int::zero() };
            if let Some(prev) = row.get(j) {
                v += prev * (next as i64 - 1);
            }
            new_row[j] = v;
        }
        row = new_row;
    }
    row[k as usize].clone()
}

/// Integer polynomial in one variable `t`, coefficients ascending by degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map(Zero::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Int::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![Int::zero()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn leading(&self) -> &Int {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, t: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the
    /// root t = 0.
    pub fn trailing_zeros(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `t^k`; panics if the polynomial is not divisible.
    pub fn shift_down(&self, k: usize) -> IntPolynomial {
        assert!(self.trailing_zeros() >= k || self.is_zero());
        IntPolynomial::new(self.coeffs[k..].to_vec())
    }

    /// Exact division check by (t - r) for integer r.
    pub fn divisible_by_root(&self, r: i64) -> bool {
        self.eval(&Int::from(r)).is_zero()
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_decimal_strings(strs: &[String]) -> Result<Self, Error> {
        let coeffs: Result<Vec<Int>, _> = strs.iter().map(|s| s.parse::<Int>()).collect();
        Ok(IntPolynomial::new(
            coeffs.map_err(|_| Error::Parse("bad polynomial coefficient".into()))?,
        ))
    }
}

/// Rising factorial t(t+1)...(t+m-1) as an integer polynomial.
pub fn rising_factorial(m: u32) -> IntPolynomial {
    let mut p = IntPolynomial::from_i64(&[0, 1]);
    for a in 1..m as i64 {
        p = p.mul(&IntPolynomial::from_i64(&[a, 1]));
    }
    if m == 0 {
        IntPolynomial::from_i64(&[1])
    } else {
        p
    }
}

/// Exact Lagrange interpolation through `(q, value)` pairs, expected to
/// produce an integer polynomial of degree at most `degree`.
///
/// A non-integral coefficient signals a bad prime in a finite-field sample
/// and is reported as an error rather than rounded.
pub fn interpolate_integer_polynomial(
    points: &[(Int, Int)],
    degree: usize,
) -> Result<IntPolynomial, Error> {
    if points.len() < degree + 1 {
        return Err(Error::InsufficientPoints {
            needed: degree + 1,
            got: points.len(),
        });
    }
    let pts = &points[..degree + 1];
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[i].0 == pts[j].0 {
                return Err(Error::Parse("duplicate interpolation node".into()));
            }
        }
    }
    // Accumulate sum of value_i * prod_{j != i} (t - q_j)/(q_i - q_j) over Q.
    let mut acc: Vec<Rat> = vec![Rat::zero(); degree + 1];
    for (i, (qi, vi)) in pts.iter().enumerate() {
        // numerator polynomial prod_{j != i} (t - q_j)
        let mut num: Vec<Rat> = vec![Rat::one()];
        let mut den = Rat::one();
        for (j, (qj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rat::zero(); num.len() + 1];
            let negq = Rat::from_integer(-qj.clone());
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] += c * &negq;
            }
            num = next;
            den *= Rat::from_integer(qi - qj);
        }
        let scale = Rat::from_integer(vi.clone()) / den;
        for (k, c) in num.into_iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut coeffs = Vec::with_capacity(acc.len());
    for c in &acc {
        if !c.denom().is_one() {
            return Err(Error::NonIntegralCoefficient(rat_to_string(c)));
        }
        coeffs.push(c.numer().clone());
    }
    let poly = IntPolynomial::new(coeffs);
    // All supplied points must lie on the result, including any beyond
    // degree+1 that the caller passed for validation.
    for (q, v) in points {
        if &poly.eval(q) != v {
            return Err(Error::ConsistencyFailure(format!(
                "interpolated polynomial misses sample at q={q}"
            )));
        }
    }
    Ok(poly)
}

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rat>>,
}

impl RationalMatrix {
    pub fn new(data: Vec<Vec<Rat>>) -> Self {
        let rows = data.len();
        let cols = data.first().map(|r| r.len()).unwrap_or(0);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        RationalMatrix { rows, cols, data }
    }

    pub fn from_columns(cols: Vec<Vec<Rat>>) -> Self {
        let nrows = cols.first().map(|c| c.len()).unwrap_or(0);
        let data = (0..nrows)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        RationalMatrix::new(data)
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        RationalMatrix::new(data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    /// Reduced row-echelon form; returns (rref, rank, pivot columns).
    pub fn rref(&self) -> (RationalMatrix, usize, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = &*x / &inv;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..self.cols {
                        let sub = &m[r][j] * &f;
                        m[i][j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (RationalMatrix::new(m), r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Solves `self * x = b` exactly. Returns None when inconsistent.
    /// Free variables, if any, are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut aug = self.data.clone();
        for (row, bi) in aug.iter_mut().zip(b) {
            row.push(bi.clone());
        }
        let augm = RationalMatrix::new(aug);
        let (rr, _, pivots) = augm.rref();
        // Inconsistent iff a pivot lands in the last (augmented) column.
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.at(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch);
        }
        Ok(self
            .data
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Orthogonal projection of `u` onto the column space, computed with
    /// unnormalized Gram-Schmidt so everything stays rational.
    pub fn project_onto_column_space(&self, u: &[Rat]) -> Result<Vec<Rat>, Error> {
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch);
        }
        let mut basis: Vec<Vec<Rat>> = Vec::new();
        for j in 0..self.cols {
            let mut v = self.column(j);
            for b in &basis {
                let coef = dot(&v, b) / dot(b, b);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= &coef * bi;
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                basis.push(v);
            }
        }
        let mut proj = vec![Rat::zero(); self.rows];
        for b in &basis {
            let coef = dot(u, b) / dot(b, b);
            for (pi, bi) in proj.iter_mut().zip(b) {
                *pi += &coef * bi;
            }
        }
        Ok(proj)
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling_first_signless(3, 2), int(3));
        assert_eq!(stirling_first_signless(4, 4), int(1));
        assert_eq!(stirling_first_signless(3, 0), int(0));
        assert_eq!(stirling_first_signless(3, 5), int(0));
    }

    #[test]
    fn stirling_matches_rising_factorial_oracle() {
        // Independent oracle: brute-force polynomial expansion.
        for m in 1..=8u32 {
            let p = rising_factorial(m);
            for k in 0..=m as i64 + 1 {
                let expect = p
                    .coeffs()
                    .get(k.max(0) as usize)
                    .cloned()
                    .unwrap_or_default();
                if k <= 0 {
                    assert_eq!(stirling_first_signless(m, k), Int::zero());
                } else {
                    assert_eq!(stirling_first_signless(m, k), expect, "m={m} k={k}");
                }
            }
        }
        // (5,3) -> 35 from the oracle.
        assert_eq!(stirling_first_signless(5, 3), int(35));
    }

    #[test]
    fn stirling_recurrence_and_row_sums() {
        for m in 2..=12u32 {
            let mut sum = Int::zero();
            for k in 1..=m as i64 {
                let lhs = stirling_first_signless(m, k);
                let rhs = stirling_first_signless(m - 1, k - 1)
                    + stirling_first_signless(m - 1, k) * int(m as i64 - 1);
                assert_eq!(lhs, rhs);
                sum += stirling_first_signless(m, k);
            }
            assert_eq!(sum, factorial(m));
        }
    }

    #[test]
    fn interpolate_braid3_char_poly() {
        let pts: Vec<(Int, Int)> = [(1, 0), (2, 0), (3, 6), (4, 24)]
            .iter()
            .map(|&(q, v)| (int(q), int(v)))
            .collect();
        let p = interpolate_integer_polynomial(&pts, 3).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[0, 2, -3, 1]));
    }

    #[test]
    fn interpolate_constant() {
        let p = interpolate_integer_polynomial(&[(int(0), int(7))], 0).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[7]));
    }

    #[test]
    fn interpolate_round_trip_t2_plus_1() {
        let poly = IntPolynomial::from_i64(&[1, 0, 1]);
        let pts: Vec<(Int, Int)> = [2i64, 3, 5]
            .iter()
            .map(|&q| (int(q), poly.eval(&int(q))))
            .collect();
        assert_eq!(interpolate_integer_polynomial(&pts, 2).unwrap(), poly);
    }

    #[test]
    fn interpolate_rejects_non_integral() {
        // value 1 at 0, 2 at 2 forces coefficient 1/2.
        let pts = vec![(int(0), int(1)), (int(2), int(2))];
        assert!(matches!(
            interpolate_integer_polynomial(&pts, 1),
            Err(Error::NonIntegralCoefficient(_))
        ));
    }

    #[test]
    fn projection_examples() {
        let id = RationalMatrix::identity(2);
        let u = vec![rat(3), rat(4)];
        assert_eq!(id.project_onto_column_space(&u).unwrap(), u);

        let col = RationalMatrix::from_columns(vec![vec![rat(1), rat(0)]]);
        assert_eq!(
            col.project_onto_column_space(&u).unwrap(),
            vec![rat(3), rat(0)]
        );
    }

    #[test]
    fn projection_orthogonality_and_idempotence() {
        // Fixed pseudo-random 4x2 rational matrix.
        let w = RationalMatrix::from_columns(vec![
            vec![ratio(1, 2), rat(3), rat(-2), rat(7)],
            vec![rat(4), ratio(-1, 3), rat(5), rat(1)],
        ]);
        let u = vec![rat(2), rat(-1), ratio(3, 4), rat(6)];
        let p = w.project_onto_column_space(&u).unwrap();
        let resid: Vec<Rat> = u.iter().zip(&p).map(|(a, b)| a - b).collect();
        for j in 0..2 {
            assert!(dot(&resid, &w.column(j)).is_zero());
        }
        assert_eq!(w.project_onto_column_space(&p).unwrap(), p);
    }

    #[test]
    fn solve_and_rank() {
        let m = RationalMatrix::new(vec![
            vec![rat(1), rat(2)],
            vec![rat(2), rat(4)],
        ]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.solve(&[rat(3), rat(6)]).unwrap(), Some(vec![rat(3), rat(0)]));
        assert_eq!(m.solve(&[rat(3), rat(7)]).unwrap(), None);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_from_str("3/6").unwrap(), ratio(1, 2));
        assert_eq!(rat_to_string(&ratio(-4, 6)), "-2/3");
        assert_eq!(rat_to_string(&rat(5)), "5");
        assert!(rat_from_str("1/0").is_err());
    }
}
