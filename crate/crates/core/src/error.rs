use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("degenerate samples: {0}")]
    DegenerateSample(String),

    /// The input violates a hypothesis the caller promised (for instance a
    /// non-submodular function handed to the submodularity checker).
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("below admissible range: {0}")]
    Threshold(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("singular lattice basis")]
    Singular,

    #[error("too few records in window: need {need}, have {have}")]
    TooFewRecords { need: usize, have: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
