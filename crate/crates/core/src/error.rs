use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("agent {index} out of range for a {n_agents}-agent network")]
    AgentOutOfRange { index: usize, n_agents: usize },

    #[error("network size {0} outside the supported range 1..=64")]
    NetworkSize(usize),

    #[error("dimension mismatch: network has {network} agents, social range matrix has {matrix}")]
    DimensionMismatch { network: usize, matrix: usize },

    #[error("invalid parameter `{field}`: {reason}")]
    InvalidParam { field: &'static str, reason: String },

    #[error("invalid social range matrix: {0}")]
    InvalidMatrix(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("outside the claim's regime: {0}")]
    Regime(String),

    #[error("enumeration over {n} agents exceeds the capacity of {max}")]
    Capacity { n: usize, max: usize },
}
