//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported group: {op} requires a {expected} spec")]
    UnsupportedGroup { op: &'static str, expected: &'static str },

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("dimension {dim} exceeds limit {limit} for {op}")]
    TooLarge { op: &'static str, dim: usize, limit: usize },

    #[error("invalid charges: {0}")]
    InvalidCharges(String),

    #[error("operator is not gaugeable: {0}")]
    NotGaugeable(String),

    #[error("sector mismatch: state has weight {weight:.3e} in sector {sector}, expected > {required:.3e}")]
    SectorMismatch { sector: i64, weight: f64, required: f64 },

    #[error("post-selection amplitude vanishes (norm^2 = {norm_sq:.3e})")]
    ZeroPostSelection { norm_sq: f64 },

    #[error("domain error: {0}")]
    DivisionDomain(String),

    #[error("eigensolver failed: {0}")]
    EigenFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
