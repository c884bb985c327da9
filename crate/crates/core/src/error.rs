use thiserror::Error;

/// Errors raised by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precision mismatch: {left} vs {right}")]
    PrecisionMismatch { left: usize, right: usize },

    #[error("exponent {exponent} exceeds precision {precision}")]
    OutOfRange { exponent: usize, precision: usize },

    /// A cyclotomic coefficient that is not a rational integer.
    #[error("coefficient at exponent {exponent} is not a rational integer")]
    NotInteger { exponent: usize },

    #[error("brute-force enumeration refused for n = {n} (limit {limit})")]
    Guard { n: usize, limit: usize },

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
