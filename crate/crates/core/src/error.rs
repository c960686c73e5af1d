use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate basis: {rank} independent elements out of {len}")]
    DegenerateBasis { rank: usize, len: usize },

    #[error("matrix is not Hamiltonian: |MᵀJ + JM| = {residual:e}")]
    NotHamiltonian { residual: f64 },

    #[error("operator is not hermitian: |X - X†| = {residual:e}")]
    NotHermitian { residual: f64 },

    #[error("quantized operator is not hermitian (|X - X†| = {residual:e}); generator is not pure imaginary")]
    ConventionViolation { residual: f64 },

    #[error("cutoff {cutoff} too small for operators shifting occupation by {shift}")]
    CutoffTooSmall { cutoff: usize, shift: usize },
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
