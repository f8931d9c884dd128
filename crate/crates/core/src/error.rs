use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {0}x{1}")]
    NotSquare(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (asymmetry {0:e})")]
    NonHermitian(f64),

    #[error("matrix is not positive semidefinite (eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("eigendecomposition did not converge")]
    EigenFailure,

    #[error("invalid exponent p = {0}")]
    InvalidExponent(f64),

    #[error("element is not in the weighted Lp space (membership residual {0:e})")]
    NotInSpace(f64),

    #[error("weight functional is not faithful (rank {rank} of {dim})")]
    NotFaithful { rank: usize, dim: usize },

    #[error("vector is zero")]
    ZeroVector,

    #[error("vector functional is not majorized by the weight (residual {0:e})")]
    NotMajorized(f64),

    #[error("variational budget must be at least 1")]
    BudgetTooSmall,

    #[error("invalid order alpha = {0}; allowed range is [1/2, 1) or (1, inf]")]
    InvalidAlpha(f64),

    #[error("functional is not a state (trace {0})")]
    NotAState(f64),

    #[error("functional is zero")]
    ZeroFunctional,

    #[error("support of psi is not contained in the support of phi")]
    SupportViolation,

    #[error("both divergences are infinite; gap is indeterminate")]
    IndeterminateGap,

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid epsilon {0}; must lie in (0, 1)")]
    InvalidEpsilon(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
