use thiserror::Error;

/// Errors produced by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    MismatchedRings,

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by zero")]
    DivisionByZero,

    #[error("variable `{0}` has no image under the substitution")]
    UnmappedVariable(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("the ideal is the whole ring")]
    UnitIdeal,

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("colength did not stabilize below degree cap {cap}; the radical of the input is probably not the given prime")]
    StabilizationFailed { cap: usize },

    #[error("subspace is not closed under differentiation")]
    NotClosedUnderDifferentiation,

    #[error("operators do not span an R-bimodule; their solution space is not an ideal")]
    BimoduleCheckFailed,

    #[error("post-verification of the reconstructed ideal failed: {0}")]
    PostVerificationFailed(String),

    #[error("point is not on the variety of the prime")]
    PointNotOnVariety,

    #[error("operator differentiates `{0}`, which is an independent variable of the prime")]
    IndependentDerivative(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
