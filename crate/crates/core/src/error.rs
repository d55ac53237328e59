use thiserror::Error;

use crate::codes::Code;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("order mismatch: {left} vs {right} points")]
    OrderMismatch { left: usize, right: usize },

    #[error("symbol {symbol} out of range for alphabet size {q}")]
    SymbolOutOfRange { symbol: u16, q: u16 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid design: {0}")]
    InvalidDesign(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("search budget exhausted after {spent} moves: {what}")]
    BudgetExhausted { what: String, spent: u64 },

    /// A construction ran out of search budget before reaching its target size.
    /// The partial code is still fully verified.
    #[error("budget exhausted: reached {} of {target} codewords", .partial.len())]
    Partial { partial: Box<Code>, target: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }

    pub(crate) fn design(msg: impl Into<String>) -> Self {
        Error::InvalidDesign(msg.into())
    }
}
