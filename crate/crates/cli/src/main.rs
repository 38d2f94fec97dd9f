//! `bcframe`: analyze bicomplex frames, duals, Gabor systems and the hyperbolic-plane system.
//!
//! Every command writes one JSON report to standard output (or `--output`) and a short
//! summary to standard error. Exit codes: 0 success, 1 bad input, 2 not a frame / not
//! invertible (or a failed self test).

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}: line {line}, column {column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] bcframe::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(bcframe::Error::NotAFrame { .. } | bcframe::Error::NotInvertible { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bcframe", version, about = "Bicomplex frame analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Request document: a path, `-` for stdin, or inline JSON.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true, env = "BCFRAME_SEED", default_value_t = bcframe::selftest::DEFAULT_SEED)]
    seed: u64,

    /// Reconstruction residual threshold for `dual` and `reconstruct`.
    #[arg(long, global = true, default_value_t = commands::DEFAULT_RESIDUAL_TOL)]
    tolerance: f64,

    /// Exit with status 2 when the family is not a frame.
    #[arg(long, global = true)]
    require_frame: bool,

    /// Smaller workload for `selftest`.
    #[arg(long, global = true)]
    quick: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Frame bounds, tightness, exactness and Riesz property of a family.
    Analyze,
    /// Canonical dual frame and reconstruction residual.
    Dual,
    /// Reconstruct signals through the canonical dual.
    Reconstruct,
    /// Discrete bicomplex Gabor system; `--input` may also name a preset.
    Gabor,
    /// Hyperbolic-plane system: Bessel constant and non-frame witnesses.
    Psi,
    /// Run the acceptance checks.
    Selftest,
    /// Reports for the stock fixtures.
    Demo,
}

/// Options that shape the result, echoed into every report.
#[derive(Clone, Debug, Serialize)]
pub struct Options {
    pub seed: u64,
    pub tolerance: f64,
    pub require_frame: bool,
    pub quick: bool,
}

#[derive(Serialize)]
struct Request<'a> {
    command: Command,
    source: Option<&'a str>,
    input: Option<Value>,
    #[serde(flatten)]
    options: &'a Options,
}

#[derive(Serialize)]
struct Report<'a> {
    tool: &'static str,
    version: &'static str,
    request: Request<'a>,
    tolerances: Value,
    payload: Value,
    wall_time_ms: f64,
}

/// What a command hands back: payload, summary line, and an exit status if the result itself
/// should fail the run.
pub struct Outcome {
    pub echo: Option<Value>,
    pub source: Option<String>,
    pub payload: Value,
    pub summary: String,
    pub status: u8,
}

fn run(cli: &Cli, opts: &Options) -> Result<Outcome, CliError> {
    let input = cli.input.as_deref();
    match cli.command {
        Command::Analyze => commands::analyze(input, opts),
        Command::Dual => commands::dual(input, opts),
        Command::Reconstruct => commands::reconstruct(input, opts),
        Command::Gabor => commands::gabor(input, opts),
        Command::Psi => commands::psi(input, opts),
        Command::Selftest => commands::selftest(opts),
        Command::Demo => commands::demo(opts),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        seed: cli.seed,
        tolerance: cli.tolerance,
        require_frame: cli.require_frame,
        quick: cli.quick,
    };
    let start = Instant::now();
    let outcome = match run(&cli, &opts) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let report = Report {
        tool: "bcframe",
        version: env!("CARGO_PKG_VERSION"),
        request: Request {
            command: cli.command,
            source: outcome.source.as_deref(),
            input: outcome.echo.clone(),
            options: &opts,
        },
        tolerances: commands::tolerances(&opts),
        payload: outcome.payload,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    let text = serde_json::to_string_pretty(&report).expect("reports serialize");
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => println!("{text}"),
    }
    eprintln!("{}", outcome.summary);
    ExitCode::from(outcome.status)
}
