//! Cooperative run budgets. Long-running loops check these counters and
//! abort with a structured error instead of hanging.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;

/// Caps on the expensive primitives. The environment variable
/// `RANK_ARRANGE_BUDGET` (a positive integer) scales every cap.
#[derive(Debug, Clone)]
pub struct RunBudget {
    pub max_lp_calls: u64,
    pub max_point_tests: u64,
    pub max_chambers: u64,
}

impl Default for RunBudget {
    fn default() -> Self {
        let scale = std::env::var("RANK_ARRANGE_BUDGET")
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
            .filter(|&s| s > 0)
            .unwrap_or(1);
        RunBudget {
            max_lp_calls: 20_000_000u64.saturating_mul(scale),
            max_point_tests: 2_000_000_000u64.saturating_mul(scale),
            max_chambers: 1_000_000u64.saturating_mul(scale),
        }
    }
}

impl RunBudget {
    pub fn unlimited() -> Self {
        RunBudget {
            max_lp_calls: u64::MAX,
            max_point_tests: u64::MAX,
            max_chambers: u64::MAX,
        }
    }
}

/// Shared mutable counters for one computation.
#[derive(Debug, Default)]
pub struct BudgetMeter {
    pub lp_calls: AtomicU64,
    pub point_tests: AtomicU64,
}

impl BudgetMeter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn charge_lp(&self, budget: &RunBudget) -> Result<(), Error> {
        let n = self.lp_calls.fetch_add(1, Ordering::Relaxed) + 1;
        if n > budget.max_lp_calls {
            return Err(Error::BudgetExceeded(format!("{n} LP calls")));
        }
        Ok(())
    }

    pub fn charge_points(&self, budget: &RunBudget, n: u64) -> Result<(), Error> {
        let t = self.point_tests.fetch_add(n, Ordering::Relaxed) + n;
        if t > budget.max_point_tests {
            return Err(Error::BudgetExceeded(format!("{t} point tests")));
        }
        Ok(())
    }
}
