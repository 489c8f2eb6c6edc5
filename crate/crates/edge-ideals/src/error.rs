use thiserror::Error;

use crate::bitset::MAX_VERTICES;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The vertex count exceeds the single-word bitset capacity.
    #[error("vertex capacity exceeded: {requested} vertices requested, limit is {MAX_VERTICES}")]
    Capacity { requested: usize },

    /// An enumeration would visit more items than the configured ceiling allows.
    #[error("enumeration budget exceeded: {needed} items required, budget is {budget}")]
    Budget { needed: u64, budget: u64 },

    /// A documented precondition of an operation does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Malformed input data (graph files, FASTA, XYZ, CSV, JSON).
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
