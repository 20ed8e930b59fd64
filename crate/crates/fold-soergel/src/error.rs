//! Error type shared by every module of the crate.

use alloc::string::String;

/// Errors raised by parsing, shape checking and exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed text input; `offset` is a byte offset into the input.
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    /// Boundaries or degrees of composed/added morphisms do not match.
    #[error("shape error: {0}")]
    Shape(String),
    /// A morphism failed a structural check (homogeneity, equivariance, ...).
    #[error("invalid morphism: {0}")]
    Invalid(String),
    /// A name (generator, object, relation id) is not known.
    #[error("unknown name: {0}")]
    Unknown(String),
    /// An exact division or series fit was impossible.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
}

/// Result alias with the crate error.
pub type Result<T> = core::result::Result<T, Error>;
