use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("singular point: {0}")]
    Singular(String),

    #[error("leading coefficient vanishes at n = {0}")]
    LeadingCoeffRoot(u64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("bound certification failed: {0}")]
    Certification(String),

    #[error("continuation step from {from} to {to} leaves the certified disk")]
    StepTooLong { from: String, to: String },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
