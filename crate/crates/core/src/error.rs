use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate points: objects {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("configuration is not generic: {0}")]
    NotGeneric(String),
    #[error("tied distances: judge is equidistant from objects {0} and {1}")]
    TiedDistances(usize, usize),
    #[error("tied midpoints: pairs ({0},{1}) and ({2},{3}) share a midpoint")]
    TiedMidpoints(usize, usize, usize, usize),
    #[error("internal inconsistency: midpoint walk attempted a non-adjacent swap")]
    NonAdjacentSwap,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("infeasible region")]
    InfeasibleRegion,
    #[error("bad prime {0}: {1}")]
    BadPrime(u64, String),
    #[error("non-integral interpolation coefficient {0}")]
    NonIntegralCoefficient(String),
    #[error("insufficient interpolation points: need {needed}, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("characteristic polynomial unavailable: {0}")]
    MissingCharPoly(String),
    #[error("argument out of range: {0}")]
    RangeViolation(String),
    #[error("projection degenerated to zero (violates genericity)")]
    DegenerateProjection,
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
