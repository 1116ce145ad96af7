use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("index {index} out of range (limit {limit})")]
    OutOfRange { index: u128, limit: u128 },

    #[error("group is not transitive (orbit of 0 has {orbit} of {degree} points)")]
    Intransitive { orbit: usize, degree: usize },

    #[error("search budget of {0:?} exhausted")]
    Timeout(std::time::Duration),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("not computed here: {0}")]
    NotComputed(&'static str),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
