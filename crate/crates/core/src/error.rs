use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid new variable: {0}")]
    InvalidVariable(String),

    #[error("unknown benchmark `{0}` (expected cubic_cycle, cubic_bicycle, rf or scalar_power)")]
    UnknownBenchmark(String),

    #[error("benchmark `{name}` is not defined for n = {n}")]
    InvalidBenchmarkSize { name: String, n: usize },

    #[error("candidate pool of {pool} monomials needs more than {limit} subset checks")]
    PoolTooLarge { pool: usize, limit: u64 },

    #[error("exhaustive search is limited to n <= {max}, got n = {n}")]
    TooLargeForExhaustive { n: usize, max: usize },

    #[error("enumeration cancelled")]
    Cancelled,
}
