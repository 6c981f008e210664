use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter constraint was violated; the payload names it.
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("incompatible radicands: sqrt({0}) and sqrt({1})")]
    IncompatibleRadicands(u64, u64),
    #[error("radicand overflow: {0} does not fit in 63 bits")]
    RadicandOverflow(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bad facet: {0}")]
    BadFacet(String),
    #[error("bad bounding box on axis {0}: lower bound exceeds upper bound")]
    BadBox(usize),
    #[error("too many generators: {0} (at most 24)")]
    TooManyGenerators(usize),
    #[error("halfspace system is unbounded")]
    Unbounded,
    #[error("dimension {0} too large for this operation (max {1})")]
    DimensionTooLarge(usize, usize),
    #[error("certificate failure for d = {d}: {clause}")]
    CertificateFailure { d: usize, clause: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn bad_params(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}
