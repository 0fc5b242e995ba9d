use thiserror::Error;

/// Errors raised by the computation modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight mismatch: {left} != {right}")]
    WeightMismatch { left: usize, right: usize },

    #[error("{n} variables cannot hold a partition of length {needed}")]
    TooFewVariables { n: usize, needed: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("exponent vector has length {got}, polynomial has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid partition literal {0:?}")]
    Parse(String),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A closed form was asked for outside the domain where it is valid.
    /// Callers fall back to a recurrence engine.
    #[error("closed form not applicable: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
