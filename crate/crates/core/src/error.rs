use thiserror::Error;

/// Errors raised by the engine.
///
/// Check violations are never errors: they are data carried by
/// [`CheckReport`](crate::checks::CheckReport).
#[derive(Debug, Error)]
pub enum Error {
    #[error("group closure exceeded the bound of {bound} elements")]
    BoundExceeded { bound: usize },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("cyclotomic conductor {conductor} exceeds the bound {bound}")]
    ConductorOverflow { conductor: u64, bound: u64 },

    #[error("eigenspace splitting failed for every Dixon prime tried (last: {last_prime})")]
    SplitFailure { last_prime: u64 },

    #[error("non-integral value where an algebraic integer was expected: {0}")]
    NonIntegral(String),

    #[error("zero weight: a defect-zero block has trivial defect group")]
    ZeroWeight,

    #[error("p-bar cores are only implemented for odd primes (got {0})")]
    EvenPrimeUnsupported(u64),

    #[error("value on a split class of a self-conjugate partition {0:?} is not supported")]
    SplitClassUnsupported(Vec<usize>),

    #[error("group file has no class projection data")]
    MissingProjection,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("metadata mismatch: {0}")]
    MetadataMismatch(String),

    #[error("orthogonality failure: {0}")]
    OrthogonalityFailure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
