use thiserror::Error;

/// Errors surfaced by the evaluation and interpolation kernels.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Subset enumeration grows as 2^m; refuse tuples above the cap.
    #[error("subset enumeration over {m} variables exceeds the cap of {cap}")]
    SubsetCapExceeded { m: usize, cap: usize },

    /// A precondition on the inputs was violated.
    #[error("{0}")]
    Domain(String),

    /// A polynomial referenced a power sum the vector does not cover.
    #[error("power sum index {index} out of range (vector holds {available})")]
    PowerSumIndex { index: usize, available: usize },

    /// Every resampling attempt produced a singular sample matrix.
    #[error("sample matrix still singular after {attempts} attempts")]
    SingularSystem { attempts: usize },

    /// The interpolant disagreed with the evaluator on a held-out point.
    #[error("interpolant mismatch at point ({point}): got {got}, evaluator says {want}")]
    InterpolationMismatch {
        point: String,
        got: String,
        want: String,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
