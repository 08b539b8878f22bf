//! Shared error type for domain and precondition failures.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("case id must be in 1..=5, got {0}")]
    CaseOutOfRange(u32),

    #[error("beta parameters must be positive, got a={a}, b={b}")]
    BetaParams { a: f64, b: f64 },

    #[error("argument t={0} outside [0, 1]")]
    OutOfUnitInterval(f64),

    #[error("grid size must be at least 2, got {0}")]
    GridTooSmall(usize),

    #[error("noise level must be nonnegative, got {0}")]
    NegativeSigma(f64),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid bracket [{0}, {1}]")]
    InvalidBracket(f64, f64),

    #[error("number of draws must be at least {min}, got {got}")]
    TooFewDraws { min: usize, got: usize },

    #[error("level must be strictly between 0 and 1, got {0}")]
    InvalidLevel(f64),

    #[error("percentile order must be strictly between 0 and 1, got {0}")]
    InvalidPercentile(f64),

    #[error("replication count must be at least 1, got {0}")]
    NoReplications(usize),
}
