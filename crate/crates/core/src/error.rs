use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inversion of zero")]
    InversionOfZero,
    #[error("element is not invertible in this instance")]
    NotInvertible,
    #[error("element is not strictly above one")]
    NotStrictlyAboveOne,
    #[error("element has no type: x + x^-1 is not placed by any of the five cases")]
    Untyped,
    #[error("height of zero is undefined")]
    HeightOfZero,
    #[error("value is not a valid element of {instance}: {reason}")]
    InvalidValue { instance: String, reason: String },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial evaluates to zero at the given point")]
    ZeroEvaluation,
    #[error("polynomial must have a strictly positive constant term")]
    NonPositiveConstant,
    #[error("negative coefficient {0}")]
    NegativeCoefficient(String),
    #[error("jet is not invertible (constant coefficient is zero)")]
    NonInvertible,
    #[error("norms differ at the base point: {x} vs {y}")]
    NormMismatch { x: String, y: String },
    #[error("witness verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
