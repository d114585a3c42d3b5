use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),

    #[error("unknown agent `{0}`")]
    UnknownAgent(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("ranking of agent {agent} is not a partition: {reason}")]
    NotAPartition { agent: String, reason: String },

    #[error("alternatives `{0}` and `{1}` are universally indifferent")]
    UniversalIndifference(String, String),

    #[error("max set of an empty set of alternatives")]
    EmptySet,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("enumeration guard exceeded: {n} agents, limit {limit}")]
    GuardExceeded { n: usize, limit: usize },

    #[error("number of samples must be positive")]
    ZeroSamples,

    #[error("threshold {0} is not strictly between 0 and 1")]
    ThresholdOutOfRange(String),

    #[error("invalid assignment problem: {0}")]
    InvalidProblem(String),

    #[error("not a bijection: {0}")]
    NotABijection(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("singular matrix")]
    Singular,

    #[error("recovered value for {unknown} is {value}, not a non-negative integer")]
    NonIntegral { unknown: String, value: String },

    #[error("oracle failure: {0}")]
    Oracle(String),
}

impl Error {
    /// Errors caused by an internal inconsistency rather than bad input.
    pub fn is_integrity_failure(&self) -> bool {
        matches!(self, Error::Singular | Error::NonIntegral { .. })
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}
