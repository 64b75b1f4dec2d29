use std::fmt;

/// Errors raised by constructions, loaders and parsers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A freshly built object failed its own post-check.
    #[error("{what} failed verification: {reason}")]
    CheckFailed { what: String, reason: String },

    #[error("no construction applies: {0}")]
    NotApplicable(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A catalog record did not survive re-verification on load.
    #[error("catalog record {record} rejected: {msg}")]
    Catalog { record: String, msg: String },

    #[error("search budget exhausted after {0} candidates")]
    BudgetExhausted(u64),
}

impl Error {
    pub(crate) fn invalid(msg: impl fmt::Display) -> Self {
        Error::InvalidInput(msg.to_string())
    }

    pub(crate) fn check(what: impl fmt::Display, reason: impl fmt::Display) -> Self {
        Error::CheckFailed {
            what: what.to_string(),
            reason: reason.to_string(),
        }
    }

    pub(crate) fn parse(line: usize, msg: impl fmt::Display) -> Self {
        Error::Parse {
            line,
            msg: msg.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
