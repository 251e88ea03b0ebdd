//! Closed-form bounds and comparison sequences for the unidimensional
//! pattern count: the lower bound ell(m), the upper bound u(m) (interval
//! arithmetic around a rational enclosure of e), the coincidence sequence
//! a(m), Thrall's upper bound f(m), and the comparison table.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::exactmath::{factorial, int, rat, Int, Rat};

/// A closed rational interval [lo, hi] used for directed rounding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RatInterval {
    pub fn exact(v: Rat) -> RatInterval {
        RatInterval { lo: v.clone(), hi: v }
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        // All intervals in this module are positive.
        debug_assert!(self.lo.is_positive() && other.lo.is_positive());
        RatInterval { lo: &self.lo * &other.lo, hi: &self.hi * &other.hi }
    }

    pub fn pow(&self, k: usize) -> RatInterval {
        let mut acc = RatInterval::exact(rat(1));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, f: &Rat) -> RatInterval {
        debug_assert!(f.is_positive());
        RatInterval { lo: &self.lo * f, hi: &self.hi * f }
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Rational enclosure of e from the Taylor tail bound:
/// sum_{k<=K} 1/k! < e < sum + 2/(K+1)! with K = 45 (more than 50
/// significant digits).
pub fn e_enclosure() -> RatInterval {
    const K: u32 = 45;
    let mut lo = Rat::zero();
    let mut term = Rat::one();
    for k in 0..=K {
        if k > 0 {
            term /= Rat::from_integer(Int::from(k));
        }
        lo += &term;
    }
    let hi = &lo + Rat::new(int(2), factorial(K + 1));
    RatInterval { lo, hi }
}

/// Lower bound ell(m) = 2 (3/4)^{m-4} {(m-3)!}^2, exact.
pub fn lower_ell(m: usize) -> Result<Rat, Error> {
    if m < 4 {
        return Err(Error::RangeViolation("need m >= 4".into()));
    }
    let mut v = rat(2);
    for _ in 0..m - 4 {
        v *= Rat::new(int(3), int(4));
    }
    let f = factorial(m as u32 - 3);
    Ok(v * Rat::from_integer(&f * &f))
}

/// Upper bound u(m) = 2/m! {e m (m-1)^2 / 8}^{m-2} as an interval.
pub fn upper_u(m: usize) -> Result<RatInterval, Error> {
    if m < 4 {
        return Err(Error::RangeViolation("need m >= 4".into()));
    }
    let mi = m as i64;
    let base = e_enclosure().scale(&Rat::new(
        int(mi) * int(mi - 1) * int(mi - 1),
        int(8),
    ));
    Ok(base
        .pow(m - 2)
        .scale(&Rat::new(int(2), factorial(m as u32))))
}

/// a(m) = (m-2){(m-2)^{m-3} - 1}(m-4)!/(m-3); coincides with r0(m)
/// exactly for 4 <= m <= 7.
pub fn a_seq(m: usize) -> Result<Int, Error> {
    if m < 4 {
        return Err(Error::RangeViolation("need m >= 4".into()));
    }
    let base = Int::from(m as i64 - 2);
    let num = &base * (num::pow::pow(base.clone(), m - 3) - Int::one())
        * factorial(m as u32 - 4);
    let den = Int::from(m as i64 - 3);
    assert!((&num % &den).is_zero(), "a({m}) divisibility failed");
    Ok(num / den)
}

/// Thrall's bound f(m) = {m(m-1)/2}! prod_{i=1}^{m-2} i! /
/// prod_{i=1}^{m-1} (2i-1)!.
pub fn f_seq(m: usize) -> Result<Int, Error> {
    if m < 3 {
        return Err(Error::RangeViolation("need m >= 3".into()));
    }
    let mut num = factorial((m * (m - 1) / 2) as u32);
    for i in 1..=m as u32 - 2 {
        num *= factorial(i);
    }
    let mut den = Int::one();
    for i in 1..=m as u32 - 1 {
        den *= factorial(2 * i - 1);
    }
    assert!((&num % &den).is_zero(), "f({m}) divisibility failed");
    Ok(num / den)
}

fn pow10(k: usize) -> Int {
    num::pow::pow(Int::from(10), k)
}

fn decimal_digits(v: &Int) -> usize {
    v.to_string().trim_start_matches('-').len()
}

fn floor_rat(x: &Rat) -> Int {
    x.floor().to_integer()
}

fn ceil_rat(x: &Rat) -> Int {
    x.ceil().to_integer()
}

/// Three-significant-digit scientific display like "1.82e6", rounding the
/// mantissa in the given direction (-1 = floor, +1 = ceiling).
fn sig3(x: &Rat, direction: i32) -> String {
    assert!(x.is_positive());
    let digits = decimal_digits(&floor_rat(x));
    assert!(digits >= 3, "sig3 display expects values >= 100");
    let scale = pow10(digits - 3);
    let scaled = x / Rat::from_integer(scale);
    let mut d3 = if direction < 0 { floor_rat(&scaled) } else { ceil_rat(&scaled) };
    let mut exp = digits - 1;
    if decimal_digits(&d3) == 4 {
        // 999.x ceiled to 1000: renormalize.
        d3 = Int::from(100);
        exp += 1;
    }
    let s = d3.to_string();
    format!("{}.{}e{}", &s[..1], &s[1..], exp)
}

/// One row of the comparison table, with display strings following the
/// published conventions (ceilings for ell, floors for u, three
/// significant digits once the values outgrow exact printing).
#[derive(Clone, Debug, Serialize)]
pub struct BoundsRow {
    pub m: usize,
    pub r0: String,
    pub a: String,
    pub ell_display: String,
    pub u_display: String,
    pub f: String,
    #[serde(skip)]
    pub ell_exact: Rat,
    #[serde(skip)]
    pub u_interval: RatInterval,
}

/// Builds the table for 4 <= m <= m_max (m_max <= 10); r0 comes from the
/// embedded reference values.
pub fn bounds_table(m_max: usize) -> Result<Vec<BoundsRow>, Error> {
    if !(4..=10).contains(&m_max) {
        return Err(Error::RangeViolation("need 4 <= m_max <= 10".into()));
    }
    let reference = crate::reference::reference();
    let mut rows = Vec::new();
    for m in 4..=m_max {
        let ell = lower_ell(m)?;
        let u = upper_u(m)?;
        // Display floors/ceilings must be unambiguous: both interval ends
        // agree after rounding.
        let ell_display = if m <= 9 {
            ceil_rat(&ell).to_string()
        } else {
            sig3(&ell, 1)
        };
        let u_display = if m <= 6 {
            let lo = floor_rat(&u.lo);
            let hi = floor_rat(&u.hi);
            assert_eq!(lo, hi, "u({m}) interval straddles an integer");
            lo.to_string()
        } else {
            let lo = sig3(&u.lo, -1);
            let hi = sig3(&u.hi, -1);
            assert_eq!(lo, hi, "u({m}) interval straddles a display step");
            lo
        };
        rows.push(BoundsRow {
            m,
            r0: reference.r0[&m].to_string(),
            a: a_seq(m)?.to_string(),
            ell_display,
            u_display,
            f: f_seq(m)?.to_string(),
            ell_exact: ell,
            u_interval: u,
        });
    }
    Ok(rows)
}

fn ipow(base: Int, k: usize) -> Int {
    num::pow::pow(base, k)
}

/// Directed 20-digit truncation of the e enclosure: returns (lo_num,
/// hi_num, den) with lo_num/den <= e <= hi_num/den.
fn coarse_e() -> (Int, Int, Int) {
    let e = e_enclosure();
    let den = pow10(20);
    let lo = floor_rat(&(&e.lo * Rat::from_integer(den.clone())));
    let hi = ceil_rat(&(&e.hi * Rat::from_integer(den.clone())));
    (lo, hi, den)
}

/// True iff {u(m)}^{1/m}/m^2 lies within 5% of e^2/8. The comparison is
/// done entirely in big integers (both sides raised to the m-th power)
/// to keep the large-m checks fast.
pub fn u_asymptotic_within_5pct(m: usize) -> Result<bool, Error> {
    if m < 4 {
        return Err(Error::RangeViolation("need m >= 4".into()));
    }
    let (eln, ehn, d) = coarse_e();
    let mi = Int::from(m as i64);
    let big_m = &mi * ipow(Int::from(m as i64 - 1), 2); // m(m-1)^2
    // u bounds as unreduced fractions: 2 (e_b M)^{m-2} / (m! (8d)^{m-2}).
    let u_den = factorial(m as u32) * ipow(int(8) * &d, m - 2);
    let u_lo_num = int(2) * ipow(&eln * &big_m, m - 2);
    let u_hi_num = int(2) * ipow(&ehn * &big_m, m - 2);
    // Target e^2/8 enclosed by [eln^2, ehn^2] / (8 d^2).
    let td = int(8) * &d * &d;
    let m2 = &mi * &mi;
    // Above: u_lo >= (19/20 * eln^2/td * m^2)^m.
    let above = &u_lo_num * ipow(int(20) * &td, m)
        >= &u_den * ipow(int(19) * &eln * &eln * &m2, m);
    // Below: u_hi <= (21/20 * ehn^2/td * m^2)^m.
    let below = &u_hi_num * ipow(int(20) * &td, m)
        <= &u_den * ipow(int(21) * &ehn * &ehn * &m2, m);
    Ok(above && below)
}

/// True iff {ell(m)}^{1/m}/m^2 lies within 5% of 3/(4e^2), via the same
/// integer cross-multiplication scheme.
pub fn ell_asymptotic_within_5pct(m: usize) -> Result<bool, Error> {
    if m < 4 {
        return Err(Error::RangeViolation("need m >= 4".into()));
    }
    let (eln, ehn, d) = coarse_e();
    let f = factorial(m as u32 - 3);
    // ell = 2 * 3^{m-4} (m-3)!^2 / 4^{m-4}.
    let ell_num = int(2) * ipow(int(3), m - 4) * &f * &f;
    let ell_den = ipow(int(4), m - 4);
    // Target 3/(4e^2) enclosed by 3 d^2 / (4 [ehn^2, eln^2]).
    let m2 = ipow(Int::from(m as i64), 2);
    let three_d2 = int(3) * &d * &d;
    // Above: ell >= (19/20 * 3d^2/(4 ehn^2) * m^2)^m.
    let above = &ell_num * ipow(int(20) * int(4) * &ehn * &ehn, m)
        >= &ell_den * ipow(int(19) * &three_d2 * &m2, m);
    // Below: ell <= (21/20 * 3d^2/(4 eln^2) * m^2)^m.
    let below = &ell_num * ipow(int(20) * int(4) * &eln * &eln, m)
        <= &ell_den * ipow(int(21) * &three_d2 * &m2, m);
    Ok(above && below)
}
