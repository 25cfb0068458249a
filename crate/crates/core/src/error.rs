use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dimension mismatch: ambient dimensions {left} and {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("not a subspace: the smaller space is not contained in the larger one")]
    NotASubspace,

    #[error("validation failed: {0}")]
    ValidationFailed(String),

    #[error("not an A-sub-bimodule: {0}")]
    NotSubmodule(String),

    #[error("invalid character: {0}")]
    InvalidCharacter(String),

    #[error("not a bimodule: {0}")]
    NotBimodule(String),

    #[error("not an algebra homomorphism: alpha(e_{i} e_{j}) != alpha(e_{i}) alpha(e_{j})")]
    NotHomomorphism { i: usize, j: usize },

    #[error("gamma fails its defining identity: {0}")]
    GammaIdentityFailed(String),

    #[error("not a derivation: {0}")]
    NotADerivation(String),

    #[error("unknown hypothesis `{0}`")]
    UnknownHypothesis(String),

    #[error("wrong construction kind: expected {expected}, found {found}")]
    WrongConstructionKind { expected: String, found: String },

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
