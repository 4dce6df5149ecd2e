//! Error type shared by all engine layers.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Expression could not be parsed; `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("negative exponent at byte {0}")]
    NegativeExponent(usize),

    /// Two values from distinct variable contexts were combined.
    #[error("variable context mismatch: {0}")]
    ContextMismatch(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A precondition on the mathematical input failed (zero ideal where a
    /// nonzero one is required, dependent columns, level out of range, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// An invariant that holds for every valid input was violated; signals
    /// an inconsistent session rather than a user mistake.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn inconsistency(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}
