//! `dompoly`: exact domination polynomials, identity verification, coefficient
//! conditions and sampling from the command line.
//!
//! Every command prints one run report (JSON by default) on stdout and
//! diagnostics on stderr. Exit codes: 0 success, 1 a checked assertion or
//! inequality failed, 2 invalid input, 3 graph too large to enumerate.

mod batch;
mod compute;
mod conditions;
mod input;
mod report;
mod sample;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::{Failure, Outcome};

#[derive(Parser)]
#[command(name = "dompoly", version, about = "Exact domination polynomials and their coefficient bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for enumeration and sampling (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the coefficient vector of one graph and analyse it.
    Compute(compute::Args),
    /// Check a counting identity or the second-difference bound on one graph.
    Verify(verify::Args),
    /// Evaluate a coefficient condition or the construction chain exactly.
    CheckTheorem(conditions::Args),
    /// Analyse a newline-delimited graph6 stream from stdin.
    Batch(batch::Args),
    /// Estimate the dominating fraction of k-subsets by sampling.
    Sample(sample::Args),
}

/// Settings shared by every command.
pub struct Context {
    pub workers: usize,
}

impl Context {
    fn new(workers: Option<usize>) -> Self {
        let default = std::thread::available_parallelism().map_or(1, |n| n.get());
        Context { workers: workers.unwrap_or(default).max(1) }
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let ctx = Context::new(cli.workers);
    match cli.command {
        Command::Compute(args) => compute::run(&ctx, args),
        Command::Verify(args) => verify::run(&ctx, args),
        Command::CheckTheorem(args) => conditions::run(args),
        Command::Batch(args) => batch::run(&ctx, args),
        Command::Sample(args) => sample::run(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.render(format));
            ExitCode::from(outcome.exit_code())
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
