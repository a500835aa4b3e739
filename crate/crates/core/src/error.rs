use thiserror::Error;

pub type Result<T> = std::result::Result<T, HkError>;

/// Errors raised anywhere in the engine.
///
/// Variants are grouped by how the command line runner maps them to exit
/// codes: configuration problems, budget exhaustion and domain errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HkError {
    #[error("characteristic must be prime (got {0})")]
    NotPrime(u64),

    #[error("characteristic {0} is too large (p must be below 2^31)")]
    CharacteristicTooLarge(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("relation `{generator}` is not weighted-homogeneous (weighted degrees {degrees:?})")]
    Inhomogeneous { generator: String, degrees: Vec<u64> },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("inversion of zero in F_{0}")]
    InverseOfZero(u64),

    #[error("exponent or count overflow: {0}")]
    Overflow(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("ideal does not have finite colength: {0}")]
    InfiniteColength(String),

    #[error("no bound on the F-threshold: {0}")]
    NotBounded(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl HkError {
    pub fn overflow(what: impl Into<String>) -> Self {
        HkError::Overflow(what.into())
    }
}

impl From<std::io::Error> for HkError {
    fn from(e: std::io::Error) -> Self {
        HkError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for HkError {
    fn from(e: serde_json::Error) -> Self {
        HkError::Config(e.to_string())
    }
}
