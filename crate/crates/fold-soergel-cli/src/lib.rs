//! Standard-library companion of `fold-soergel`: the JSON-lines relation
//! catalog, JSON serialization of bimodule maps, run configuration and the
//! commands behind the `fold-soergel` binary.

pub mod catalog_file;
pub mod commands;
pub mod config;
pub mod error;
pub mod morphism_json;

pub use commands::{run, Command, Outcome};
pub use config::{Format, RunConfig};
pub use error::CliError;
