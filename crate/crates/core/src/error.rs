use thiserror::Error;

/// Errors raised by braid computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("malformed token {0:?}: expected a nonzero integer")]
    MalformedToken(String),

    #[error("generator index {letter} out of range for {strands} strands")]
    IndexOutOfRange { letter: i64, strands: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("word length {length} exceeds the limit of {limit} letters")]
    WordTooLong { length: u128, limit: usize },

    #[error("handle reduction exceeded its budget of {budget} steps")]
    StepBudgetExceeded { budget: u64 },

    #[error("braid is not sigma_1-positive")]
    NotSigma1Positive,

    #[error("word is not sigma_1-positive (needs a letter 1 and no letter -1)")]
    NotSigma1PositiveWord,

    #[error("operation needs at least {min} strands, got {strands}")]
    BadStrandCount { strands: usize, min: usize },

    #[error("quasipositive factorization is empty")]
    EmptyFactorization,

    #[error("malformed factorization entry {0:?}")]
    MalformedFactorization(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
