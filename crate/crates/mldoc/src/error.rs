//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by document construction and field updates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    /// A caller-supplied argument is unusable (e.g. an empty title).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The path does not address an answer slot of this document type.
    #[error("unknown path `{path}`: {reason}")]
    Path { path: String, reason: String },

    /// The supplied value kind does not match the field's declared kind.
    #[error("type mismatch at `{path}`: expected {expected}, got {got}")]
    Type {
        path: String,
        expected: String,
        got: String,
    },

    /// The value matches the field kind but violates a value invariant.
    #[error("invariant violation at `{path}`: {message}")]
    Invariant { path: String, message: String },
}

/// Errors raised by the risk engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RiskError {
    /// Risk analysis and coverage gaps are defined for model cards only.
    #[error("wrong document type: {0}")]
    WrongDocType(String),

    /// A threat model must declare at least one security goal.
    #[error("invalid threat model: {0}")]
    InvalidThreatModel(String),
}
