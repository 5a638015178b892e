use thiserror::Error;

/// Errors produced by lattice construction, solvers, enumeration and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("reflection normal has self-pairing zero")]
    NullNormal,

    #[error("vector is not spacelike (self-pairing {0} is not negative)")]
    NotSpacelike(String),

    #[error("vector is not null (self-pairing {0} is nonzero)")]
    NotNull(String),

    #[error("element has curvature zero; its center is at infinity")]
    CenterAtInfinity,

    #[error("point pairs to zero with the cusp; it is the point at infinity")]
    PointAtInfinity,

    #[error("constraint system has no nonzero solution")]
    NoSolution,

    #[error("no rational null point satisfies the constraints")]
    NoRationalNullPoint,

    #[error("null-point solution space is indefinite of rank {0}; not a binary problem")]
    NullSpaceTooLarge(usize),

    #[error("generator set is invalid: {0}")]
    InvalidGenerators(String),

    #[error("chamber test failed: {0}")]
    ChamberTest(String),

    #[error("enumeration budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("insufficient data for fit: {0}")]
    InsufficientData(String),

    #[error("config error (line {line}): {msg}")]
    Config { line: usize, msg: String },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
