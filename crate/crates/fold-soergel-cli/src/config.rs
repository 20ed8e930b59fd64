//! Run configuration shared by all commands.

use std::path::PathBuf;

use fold_soergel::homsolve::DEFAULT_DEGREE_BOUND;

use crate::error::CliError;

/// Environment variable overriding the degree bound.
pub const DEGREE_BOUND_ENV: &str = "FOLD_SOERGEL_DEGREE_BOUND";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Truncation degree for graded dimensions.
    pub degree_bound: i32,
    /// Catalog file; `None` means the shipped catalog.
    pub catalog: Option<PathBuf>,
    pub format: Format,
    /// Worker threads; `0` lets the thread pool decide.
    pub workers: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { degree_bound: DEFAULT_DEGREE_BOUND, catalog: None, format: Format::Json, workers: 0 }
    }
}

/// Reads the degree bound from the environment, falling back to the default.
pub fn degree_bound_from_env() -> Result<i32, CliError> {
    match std::env::var(DEGREE_BOUND_ENV) {
        Ok(v) => parse_degree_bound(&v),
        Err(_) => Ok(DEFAULT_DEGREE_BOUND),
    }
}

pub fn parse_degree_bound(v: &str) -> Result<i32, CliError> {
    let d: i32 = v
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("{} must be an integer, got {:?}", DEGREE_BOUND_ENV, v)))?;
    if d < 0 {
        return Err(CliError::Config(format!("degree bound must be nonnegative, got {}", d)));
    }
    Ok(d)
}

impl RunConfig {
    /// Default configuration with the environment override applied.
    pub fn from_env() -> Result<RunConfig, CliError> {
        Ok(RunConfig { degree_bound: degree_bound_from_env()?, ..RunConfig::default() })
    }

    /// A thread pool with the configured number of workers.
    pub fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new().num_threads(self.workers).build().expect("thread pool")
    }
}
