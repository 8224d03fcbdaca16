use thiserror::Error;

use crate::expr_io::ParseError;

pub type Result<T, E = CkError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CkError {
    #[error("algebra dimension must lie in 1..={max}, got {got}", max = crate::clifford::MAX_DIM)]
    InvalidDimension { got: usize },

    #[error("dimension mismatch: m = {left} vs m = {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("generator e{index} out of range for m = {m}")]
    GeneratorOutOfRange { index: usize, m: usize },

    #[error("variable {name} out of range for m = {m}")]
    VariableOutOfRange { name: String, m: usize },

    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),

    #[error("{0} depends on x0; Cauchy data must be given on the hyperplane x0 = 0")]
    NotSpatial(&'static str),

    #[error("polynomial is not homogeneous in the spatial variables")]
    NotHomogeneous,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("internal cross-check failed: {0}")]
    OracleMismatch(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{path}: {message}")]
    Json { path: String, message: String },
}
