//! Exact rational LP feasibility for systems of strict and non-strict
//! linear constraints over free variables.
//!
//! Strict inequalities are handled by maximizing a slack variable `eps`
//! (capped at 1): the open region is nonempty iff the optimum is positive.
//! The simplex uses Bland's rule, so it terminates on every input, and all
//! pivoting is over `BigRational` - no floating point.

use num::{One, Signed, Zero};

use crate::exactmath::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    /// a.x > rhs
    Gt,
    /// a.x >= rhs
    Ge,
    /// a.x = rhs
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub rel: Rel,
    pub rhs: Rat,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rat>, rel: Rel, rhs: Rat) -> Self {
        Constraint { coeffs, rel, rhs }
    }

    pub fn gt0(coeffs: Vec<Rat>) -> Self {
        Constraint::new(coeffs, Rel::Gt, Rat::zero())
    }
}

struct Tableau {
    /// rows[i] has ncols coefficient entries followed by the rhs.
    rows: Vec<Vec<Rat>>,
    ncols: usize,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rat {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, row: usize, col: usize, obj: &mut Vec<Rat>) {
        let inv = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v = &*v / &inv;
            }
        }
        let prow = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let f = r[col].clone();
            for (a, p) in r.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *a -= &f * p;
                }
            }
        }
        if !obj[col].is_zero() {
            let f = obj[col].clone();
            for (a, p) in obj.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *a -= &f * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Minimizes `cost . z` from the current basis with Bland's rule.
    /// `allowed` restricts entering columns. Returns false on unbounded.
    /// When `stop_positive` names a column, iteration halts early as soon
    /// as that variable is basic with a positive value (the caller only
    /// needs sign information, not the optimum).
    fn minimize(&mut self, cost: &[Rat], allowed: usize, stop_positive: Option<usize>) -> bool {
        // Reduced-cost row: cost - cost_B * B^-1 A, tracked incrementally.
        let mut obj: Vec<Rat> = cost.to_vec();
        obj.push(Rat::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() {
                let f = cost[b].clone();
                let row = self.rows[i].clone();
                for (a, p) in obj.iter_mut().zip(&row) {
                    if !p.is_zero() {
                        *a -= &f * p;
                    }
                }
            }
        }
        // Dantzig's rule for speed; after a run of degenerate pivots,
        // fall back to Bland's rule so termination stays guaranteed.
        let mut degenerate_run = 0u32;
        loop {
            if let Some(target) = stop_positive {
                if self
                    .basis
                    .iter()
                    .position(|&b| b == target)
                    .is_some_and(|i| self.rhs(i).is_positive())
                {
                    return true;
                }
            }
            let col = if degenerate_run < 24 {
                let mut best: Option<usize> = None;
                for j in 0..allowed {
                    if obj[j].is_negative()
                        && best.map(|b| obj[j] < obj[b]).unwrap_or(true)
                    {
                        best = Some(j);
                    }
                }
                best
            } else {
                (0..allowed).find(|&j| obj[j].is_negative())
            };
            let Some(col) = col else {
                return true;
            };
            let mut pick: Option<(usize, Rat)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col].is_positive() {
                    let ratio = self.rhs(i) / &self.rows[i][col];
                    match &pick {
                        None => pick = Some((i, ratio)),
                        Some((bi, br)) => {
                            // Bland tie-break: smallest basic variable index.
                            if ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]) {
                                pick = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((row, ratio)) = pick else {
                return false;
            };
            if ratio.is_zero() {
                degenerate_run += 1;
            } else {
                degenerate_run = 0;
            }
            self.pivot(row, col, &mut obj);
        }
    }
}

pub struct LpOutcome {
    /// Witness for the free variables.
    pub point: Vec<Rat>,
    /// Achieved slack value (only meaningful when strict rows exist).
    pub eps: Rat,
}

/// Solves the system, pushing the shared strict-slack `eps <= 1` upward
/// until it is positive (stopping early) or proven stuck at zero.
///
/// Returns `None` when even the non-strict relaxation is infeasible.
/// Feasibility *with* strictness holds iff `eps > 0` (or there were no
/// strict rows).
fn solve(dim: usize, constraints: &[Constraint]) -> Option<LpOutcome> {
    let has_strict = constraints.iter().any(|c| c.rel == Rel::Gt);
    let n_slack = constraints.iter().filter(|c| c.rel != Rel::Eq).count()
        + usize::from(has_strict);
    // Columns: x+ (dim), x- (dim), eps, slacks, then artificials.
    let eps_col = 2 * dim;
    let real_cols = 2 * dim + 1 + n_slack;

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(constraints.len() + 1);
    let mut slack = 0usize;
    for c in constraints {
        assert_eq!(c.coeffs.len(), dim);
        let mut row = vec![Rat::zero(); real_cols + 1];
        for (j, a) in c.coeffs.iter().enumerate() {
            row[j] = a.clone();
            row[dim + j] = -a.clone();
        }
        match c.rel {
            Rel::Gt => {
                row[eps_col] = -Rat::one();
                row[2 * dim + 1 + slack] = -Rat::one();
                slack += 1;
            }
            Rel::Ge => {
                row[2 * dim + 1 + slack] = -Rat::one();
                slack += 1;
            }
            Rel::Eq => {}
        }
        row[real_cols] = c.rhs.clone();
        rows.push(row);
    }
    if has_strict {
        // eps + s = 1
        let mut row = vec![Rat::zero(); real_cols + 1];
        row[eps_col] = Rat::one();
        row[2 * dim + 1 + slack] = Rat::one();
        row[real_cols] = Rat::one();
        rows.push(row);
    }

    // Normalize rhs >= 0, then give every row an initial basic column:
    // a slack with +1 coefficient when available, otherwise an artificial.
    let mut basis = Vec::with_capacity(rows.len());
    let mut artificials = Vec::new();
    for row in rows.iter_mut() {
        if row[real_cols].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        let slack_col = (2 * dim + 1..real_cols).find(|&j| row[j].is_one());
        match slack_col {
            Some(j) => basis.push(j),
            None => {
                artificials.push(basis.len());
                basis.push(usize::MAX); // patched below
            }
        }
    }
    let total_cols = real_cols + artificials.len();
    for row in rows.iter_mut() {
        row.splice(real_cols..real_cols, std::iter::repeat(Rat::zero()).take(artificials.len()));
    }
    for (k, &i) in artificials.iter().enumerate() {
        rows[i][real_cols + k] = Rat::one();
        basis[i] = real_cols + k;
    }

    let mut tab = Tableau { rows, ncols: total_cols, basis };

    if !artificials.is_empty() {
        let mut cost = vec![Rat::zero(); total_cols];
        for k in 0..artificials.len() {
            cost[real_cols + k] = Rat::one();
        }
        tab.minimize(&cost, total_cols, None);
        let infeas: Rat = tab
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= real_cols)
            .map(|(i, _)| tab.rhs(i).clone())
            .sum();
        if !infeas.is_zero() {
            return None;
        }
        // Drive any degenerate artificials out of the basis.
        for i in 0..tab.basis.len() {
            if tab.basis[i] >= real_cols {
                if let Some(j) = (0..real_cols).find(|&j| !tab.rows[i][j].is_zero()) {
                    let mut dummy = vec![Rat::zero(); total_cols + 1];
                    tab.pivot(i, j, &mut dummy);
                }
                // A row that stays artificial-basic at zero is redundant;
                // harmless to keep.
            }
        }
    }

    if has_strict {
        let mut cost = vec![Rat::zero(); total_cols];
        cost[eps_col] = -Rat::one();
        if !tab.minimize(&cost, real_cols, Some(eps_col)) {
            return None; // capped objective cannot be unbounded
        }
    }

    let mut val = vec![Rat::zero(); total_cols];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < total_cols {
            val[b] = tab.rhs(i).clone();
        }
    }
    let point: Vec<Rat> = (0..dim).map(|j| &val[j] - &val[dim + j]).collect();
    Some(LpOutcome { point, eps: val[eps_col].clone() })
}

/// Witness of the open region cut out by the constraints, or None.
pub fn strict_feasible_point(dim: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    let has_strict = constraints.iter().any(|c| c.rel == Rel::Gt);
    // Fully homogeneous systems are scale-invariant, so `a.x > 0` is
    // feasible iff `a.x >= 1` is. The rewritten system avoids the shared
    // slack variable and the degenerate all-zero vertex it stalls on.
    if has_strict && constraints.iter().all(|c| c.rhs.is_zero()) {
        let scaled: Vec<Constraint> = constraints
            .iter()
            .map(|c| Constraint {
                coeffs: c.coeffs.clone(),
                rel: if c.rel == Rel::Gt { Rel::Ge } else { c.rel },
                rhs: if c.rel == Rel::Gt { Rat::one() } else { Rat::zero() },
            })
            .collect();
        let point = solve(dim, &scaled)?.point;
        debug_assert!(constraints.iter().all(|c| {
            let v: Rat = c.coeffs.iter().zip(&point).map(|(a, x)| a * x).sum();
            match c.rel {
                Rel::Gt => v > c.rhs,
                Rel::Ge => v >= c.rhs,
                Rel::Eq => v == c.rhs,
            }
        }));
        return Some(point);
    }
    let out = solve(dim, constraints)?;
    if has_strict && !out.eps.is_positive() {
        return None;
    }
    debug_assert!(constraints.iter().all(|c| {
        let v: Rat = c.coeffs.iter().zip(&out.point).map(|(a, x)| a * x).sum();
        match c.rel {
            Rel::Gt => v > c.rhs,
            Rel::Ge => v >= c.rhs,
            Rel::Eq => v == c.rhs,
        }
    }));
    Some(out.point)
}

/// Feasibility of a closed system (no strict rows required).
pub fn feasible_point(dim: usize, constraints: &[Constraint]) -> Option<Vec<Rat>> {
    let relaxed: Vec<Constraint> = constraints
        .iter()
        .map(|c| Constraint {
            coeffs: c.coeffs.clone(),
            rel: if c.rel == Rel::Gt { Rel::Ge } else { c.rel },
            rhs: c.rhs.clone(),
        })
        .collect();
    solve(dim, &relaxed).map(|o| o.point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn c(coeffs: &[i64], rel: Rel, rhs: i64) -> Constraint {
        Constraint::new(coeffs.iter().map(|&x| rat(x)).collect(), rel, rat(rhs))
    }

    #[test]
    fn strict_interval() {
        // 0 < x < 1
        let p = strict_feasible_point(1, &[c(&[1], Rel::Gt, 0), c(&[-1], Rel::Gt, -1)]).unwrap();
        assert!(p[0] > rat(0) && p[0] < rat(1));
    }

    #[test]
    fn strict_empty() {
        // x > 0 and x < 0
        assert!(strict_feasible_point(1, &[c(&[1], Rel::Gt, 0), c(&[-1], Rel::Gt, 0)]).is_none());
        // x > 0 and x <= 0: relaxation feasible, strict not.
        assert!(strict_feasible_point(1, &[c(&[1], Rel::Gt, 0), c(&[-1], Rel::Ge, 0)]).is_none());
    }

    #[test]
    fn equality_mix() {
        // x + y = 1, x > 0, y > 0
        let p = strict_feasible_point(
            2,
            &[c(&[1, 1], Rel::Eq, 1), c(&[1, 0], Rel::Gt, 0), c(&[0, 1], Rel::Gt, 0)],
        )
        .unwrap();
        assert_eq!(&p[0] + &p[1], rat(1));
        assert!(p[0].is_positive() && p[1].is_positive());
    }

    #[test]
    fn infeasible_equalities() {
        assert!(feasible_point(2, &[c(&[1, 1], Rel::Eq, 1), c(&[1, 1], Rel::Eq, 2)]).is_none());
        assert!(feasible_point(1, &[c(&[1], Rel::Ge, 3), c(&[-1], Rel::Ge, -2)]).is_none());
    }

    #[test]
    fn negative_rhs_and_free_vars() {
        // x >= -5, -x >= -(-3) i.e. x <= -3
        let p = feasible_point(1, &[c(&[1], Rel::Ge, -5), c(&[-1], Rel::Ge, 3)]).unwrap();
        assert!(p[0] >= rat(-5) && p[0] <= rat(-3));
    }

    #[test]
    fn fractional_data() {
        let p = strict_feasible_point(
            2,
            &[
                Constraint::new(vec![ratio(1, 3), ratio(-1, 2)], Rel::Gt, ratio(1, 7)),
                c(&[0, 1], Rel::Gt, 2),
            ],
        )
        .unwrap();
        let v = &p[0] * ratio(1, 3) - &p[1] * ratio(1, 2);
        assert!(v > ratio(1, 7) && p[1] > rat(2));
    }

    #[test]
    fn chamber_like_homogeneous_system() {
        // Chambers of 3 generic lines through the origin: pick one open cone.
        let p = strict_feasible_point(
            2,
            &[c(&[1, 0], Rel::Gt, 0), c(&[0, 1], Rel::Gt, 0), c(&[1, -1], Rel::Gt, 0)],
        )
        .unwrap();
        assert!(p[0] > p[1] && p[1].is_positive());
    }
}
