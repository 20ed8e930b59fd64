//! Errors of the command-line front end and their exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input text (expressions, words, catalog lines).
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input with incompatible boundaries or degrees.
    #[error("shape error: {0}")]
    Shape(String),
    /// A relation id or object name that does not exist.
    #[error("unknown: {0}")]
    Unknown(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
}

impl CliError {
    /// Every error is a parse or shape problem of the input: exit status 2.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl From<fold_soergel::Error> for CliError {
    fn from(e: fold_soergel::Error) -> Self {
        use fold_soergel::Error as E;
        match e {
            E::Syntax { offset, message } => CliError::Parse(format!("at byte {}: {}", offset, message)),
            E::Unknown(m) => CliError::Unknown(m),
            E::Shape(m) | E::Invalid(m) | E::Arithmetic(m) => CliError::Shape(m),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}
