use thiserror::Error;

/// Errors raised by the library. Indices carried in variants are 1-based,
/// matching the external formats.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    EmptyAlgebra,

    #[error("bracket index ({i},{j},{k}) out of range for dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },

    #[error("bracket entry ({i},{i},{k}) has equal first indices")]
    DiagonalBracket { i: usize, k: usize },

    #[error("conflicting entries for C_{{{i},{j}}}^{k}: {first} vs {second}")]
    ConflictingEntry {
        i: usize,
        j: usize,
        k: usize,
        first: f64,
        second: f64,
    },

    #[error("Jacobi identity fails at ({i},{j},{k},{l}) with residual {residual:e}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residual: f64,
    },

    #[error("subspace is not closed under the bracket: [b{a}, b{b}] leaves it by {residual:e}")]
    NotASubalgebra { a: usize, b: usize, residual: f64 },

    #[error("subspace ambient dimension {got} does not match algebra dimension {expected}")]
    AmbientMismatch { expected: usize, got: usize },

    #[error("operation requires dimension >= {required}, got {actual}")]
    DimensionTooSmall { required: usize, actual: usize },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("bivector is not an eigenvector for lambda = {lambda} (residual {residual:e})")]
    NotAnEigenvector { lambda: f64, residual: f64 },

    #[error("irreducibility undecidable for an eigenvector with eigenvalue {eigenvalue}")]
    AmbiguousIrreducibility { eigenvalue: f64 },

    #[error("Z-parts {first} and {second} overlap (cosine {overlap:e})")]
    NonOrthogonalZ {
        first: usize,
        second: usize,
        overlap: f64,
    },

    #[error("the algebra admits no V-decomposition")]
    NoVDecomposition,

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("entry {entry:?} has no parameter {param:?}")]
    UnknownParameter { entry: String, param: String },

    #[error("entry {entry:?} has no variant {variant:?}")]
    UnknownVariant { entry: String, variant: String },

    #[error("no verdict recorded for {0:?}")]
    NoVerdictRecorded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable tag used in error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyAlgebra => "EmptyAlgebra",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DiagonalBracket { .. } => "DiagonalBracket",
            Error::ConflictingEntry { .. } => "ConflictingEntry",
            Error::JacobiViolation { .. } => "JacobiViolation",
            Error::NotASubalgebra { .. } => "NotASubalgebra",
            Error::AmbientMismatch { .. } => "AmbientMismatch",
            Error::DimensionTooSmall { .. } => "DimensionTooSmall",
            Error::ConstraintViolation(_) => "ConstraintViolation",
            Error::NotAnEigenvector { .. } => "NotAnEigenvector",
            Error::AmbiguousIrreducibility { .. } => "AmbiguousIrreducibility",
            Error::NonOrthogonalZ { .. } => "NonOrthogonalZ",
            Error::NoVDecomposition => "NoVDecomposition",
            Error::UnknownEntry(_) => "UnknownEntry",
            Error::UnknownParameter { .. } => "UnknownParameter",
            Error::UnknownVariant { .. } => "UnknownVariant",
            Error::NoVerdictRecorded(_) => "NoVerdictRecorded",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
