use thiserror::Error;

/// Errors raised by construction and certification routines.
///
/// Mathematical violations discovered by the `check_*` family are reported as
/// data in their report types; this enum covers failures that make a result
/// impossible to produce.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("grade violation: {0}")]
    GradeViolation(String),
    #[error("form violation: {0}")]
    FormViolation(String),
    #[error("invariance violation at basis triple ({0}, {1}, {2})")]
    InvarianceViolation(usize, usize, usize),
    #[error("element is not parity-homogeneous")]
    NonHomogeneous,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("closure failure: {0}")]
    Closure(String),
    #[error("dimension {dim} exceeds the quintuple-check guard {max} (set SUPERBRACKET_MAX_DIM to override)")]
    DimensionGuard { dim: usize, max: usize },
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
