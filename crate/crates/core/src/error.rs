use thiserror::Error;

/// Failures of the numeric engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector has zero (or numerically zero) norm")]
    ZeroVector,
    #[error("empty input")]
    EmptyInput,
    #[error("non-finite component")]
    NonFinite,
    #[error("basis is not orthonormal")]
    NotOrthonormal,
    #[error("event `{0}` spans the whole space and has no complement")]
    FullSpace(String),
    #[error("events `{0}` and `{1}` are incompatible")]
    IncompatibleEvents(String, String),
    #[error("cannot collapse onto `{0}`: zero probability")]
    ZeroProbabilityCollapse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("joint distribution inconsistent: {0}")]
    InconsistentJoint(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
