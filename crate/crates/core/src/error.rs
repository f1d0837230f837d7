//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed caller input: bad vertex ids, unparsable files, violated
    /// preconditions.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An exponential search refused to run because the input exceeds the
    /// configured resource budget.
    #[error("{what} = {actual} exceeds the configured budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    /// An internal cross-check failed; this indicates a bug, not a user
    /// error.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
