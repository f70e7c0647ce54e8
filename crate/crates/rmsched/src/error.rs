//! Crate-wide error type.

use crate::instance::Violation;

/// Errors returned by solvers, oracles, generators and I/O.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The instance failed structural validation.
    #[error("invalid instance: {}", render_violations(.0))]
    InvalidInstance(Vec<Violation>),
    /// An arrival index was out of range.
    #[error("arrival index {index} out of range (q = {q})")]
    IndexOutOfRange { index: usize, q: usize },
    /// The operation requires all processing times to be zero.
    #[error("job {job} has processing time {p}, but this operation requires p = 0 for all jobs")]
    NonzeroProcessingTime { job: usize, p: u64 },
    /// The operation requires unit resource requirements.
    #[error("job {job} has requirement {a}, but this operation requires a = 1 for all jobs")]
    NonUnitRequirement { job: usize, a: u64 },
    /// The operation requires total supply to equal total requirement.
    #[error("total supply {supply} differs from total requirement {requirement}")]
    UnbalancedSupply { supply: u64, requirement: u64 },
    /// Total supply cannot satisfy total requirement; no feasible schedule exists.
    #[error("total supply {supply} cannot satisfy total requirement {requirement}")]
    InsufficientSupply { supply: u64, requirement: u64 },
    /// The operation requires integer arrival times.
    #[error("arrival times must be integers for this operation")]
    NonIntegerTime,
    /// An oracle was asked to handle more jobs than its configured cap.
    #[error("{what}: {n} jobs exceed the configured cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },
    /// An enumeration exceeded its candidate budget.
    #[error("enumeration budget exceeded: more than {budget} candidates")]
    BudgetExceeded { budget: u64 },
    /// A covering problem whose demand exceeds the total available amount.
    #[error("cover demand {demand} exceeds the total available amount {available}")]
    UncoverableDemand { demand: u64, available: u64 },
    /// An ordering that is not a permutation of the job ids.
    #[error("ordering is not a permutation of the job ids")]
    InvalidOrdering,
    /// An assignment whose shape does not match the instance.
    #[error("assignment is malformed: {0}")]
    InvalidAssignment(String),
    /// A parameter outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// Exact integer arithmetic would overflow the supported range.
    #[error("numeric range exceeded: {0}")]
    NumericRange(String),
    /// An internal invariant did not hold; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    /// Malformed input file or argument.
    #[error("parse error: {0}")]
    Parse(String),
}

fn render_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}
