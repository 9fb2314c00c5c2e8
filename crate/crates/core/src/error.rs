use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {what}({n}, {k}) requires 0 <= k <= n")]
    Index { what: &'static str, n: usize, k: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("offset mismatch: expected x^{expected}, found x^{found}")]
    OffsetMismatch { expected: String, found: String },

    #[error("expression is not a multiple of y: real part {0} is nonzero")]
    NotMultipleOfY(String),

    #[error("expression has a nonzero y-part: {0}")]
    NonzeroYPart(String),

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("{0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
