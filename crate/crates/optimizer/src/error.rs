use thiserror::Error;

/// Errors raised by pattern synthesis and the search machinery.
#[derive(Debug, Error)]
pub enum OptimizerError {
    #[error("invalid clock grid: {0}")]
    InvalidGrid(String),

    #[error("grid too short: pattern needs {needed} ticks but register holds {available}")]
    GridCapacity { needed: usize, available: usize },

    #[error("invalid search config: {0}")]
    InvalidConfig(String),

    #[error("seed pattern has {actual} bits, register holds {expected}")]
    SeedLengthMismatch { expected: usize, actual: usize },

    #[error(transparent)]
    Core(#[from] sfq_core::CoreError),
}
