//! `weakll`: law suite runner, DSL evaluator and object dumper.
//!
//! Exit codes: 0 success, 1 law failure or type/eval error, 2 usage error.

mod commands;
mod polarity_laws;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "weakll", version, about = "Exact model of differential linear logic over weak spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the categorical law suites and print a JSON report.
    CheckLaws {
        /// Base dimensions, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        dims: Vec<usize>,
        /// Truncation degree D.
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Law family (e.g. `comonad`) or prefix of a law name (e.g. `seely.nat`).
        #[arg(long)]
        filter: Option<String>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate every `let` in a DSL file.
    Eval {
        file: PathBuf,
        /// JSON object binding each declared input to a value.
        #[arg(long)]
        bind: Option<PathBuf>,
    },
    /// Typecheck a DSL file and report shapes and polarities.
    Typecheck { file: PathBuf },
    /// List the canonical basis of a space expression, e.g. "bang(base 2, 3)".
    Dump { expr: String },
}

/// Outcome of a command that did not succeed.
pub enum Failure {
    /// Law failure, type or evaluation error.
    Failed,
    /// Bad configuration, unreadable file, malformed input.
    Usage(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::CheckLaws { dims, degree, seed, filter, out } => {
            commands::check_laws(&dims, degree, seed, filter.as_deref(), out.as_deref())
        }
        Command::Eval { file, bind } => commands::eval(&file, bind.as_deref()),
        Command::Typecheck { file } => commands::typecheck(&file),
        Command::Dump { expr } => commands::dump(&expr),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
