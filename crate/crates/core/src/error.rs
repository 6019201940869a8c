use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("`{prefix}` is not a prefix of `{word}`")]
    NotAPrefix { prefix: String, word: String },

    #[error("`{suffix}` is not a suffix of `{word}`")]
    NotASuffix { suffix: String, word: String },

    #[error("`{0}` is not a binary letter (expected 0 or 1)")]
    InvalidBinaryLetter(char),

    #[error("cannot take powers of the empty word")]
    EmptyPeriod,

    #[error("`{0}` and `{1}` commute, so they do not form a binary code")]
    NotACode(String, String),

    #[error("no {0}-block exists, so the block morphisms are undefined on `{0}`")]
    MissingBlock(char),

    #[error("solution ({0}, {1}) does not decompose into letter blocks")]
    DecompositionFailure(String, String),

    /// A property that the theory guarantees did not hold. Always a bug.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn inconsistency(msg: impl Into<String>) -> Error {
    Error::InternalInconsistency(msg.into())
}
