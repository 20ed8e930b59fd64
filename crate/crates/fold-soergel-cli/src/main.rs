use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fold_soergel_cli::config::{parse_degree_bound, DEGREE_BOUND_ENV};
use fold_soergel_cli::{run, Command, Format, RunConfig};

/// Exact computations in the folded A1xA1 Hecke category.
#[derive(Debug, Parser)]
#[command(name = "fold-soergel", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Json, global = true)]
    format: OutFormat,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    workers: usize,
    /// Degree bound for graded dimensions.
    #[arg(long, env = DEGREE_BOUND_ENV, global = true)]
    degree_bound: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Check every relation of a catalog under the evaluation functor.
    Verify {
        /// JSON-lines catalog (defaults to the shipped one).
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Only check relations with this id.
        #[arg(long)]
        only: Option<String>,
    },
    /// Graded dimensions of Hom(src, dst) between tensor words like `Y`, `YZ`, `X*Z[1]`.
    Hom {
        /// Source object.
        #[arg(long)]
        src: String,
        /// Target object.
        #[arg(long)]
        dst: String,
        /// Highest degree computed (overrides the global degree bound).
        #[arg(long)]
        max_degree: Option<i32>,
        /// Include a basis of every degree.
        #[arg(long)]
        basis: bool,
    },
    /// Decompose a tensor word such as `Y*Z[2]` into shifted indecomposables.
    Decompose { word: String },
    /// Normal form of a Grothendieck ring expression.
    Ring {
        expr: String,
        /// Substitute X = +1 or X = -1.
        #[arg(long, allow_hyphen_values = true)]
        specialize: Option<i64>,
    },
    /// Evaluate a diagram expression to a matrix of bimodule maps.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let degree_bound = match cli.degree_bound.as_deref().map(parse_degree_bound).transpose() {
        Ok(d) => d.unwrap_or(RunConfig::default().degree_bound),
        Err(e) => {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    };
    let format = match cli.format {
        OutFormat::Json => Format::Json,
        OutFormat::Text => Format::Text,
    };
    let mut config = RunConfig { degree_bound, format, workers: cli.workers, catalog: None };
    let command = match cli.command {
        Cmd::Verify { catalog, only } => {
            config.catalog = catalog;
            Command::Verify { only }
        }
        Cmd::Hom { src, dst, max_degree, basis } => Command::Hom { src, dst, max_degree, basis },
        Cmd::Decompose { word } => Command::Decompose { word },
        Cmd::Ring { expr, specialize } => Command::Ring { expr, specialize },
        Cmd::Eval { expr } => Command::Eval { expr },
    };
    let out = run(&command, &config);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    ExitCode::from(out.code as u8)
}
