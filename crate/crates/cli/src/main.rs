//! `phi-stieltjes`: evaluate Φ, tabulate its densities, run the verification
//! suites and scan the boundary-value inversion.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid configuration,
//! 3 a quadrature error budget was not met.

mod commands;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::table::Table;

/// Relative `--out` paths are resolved against this directory when set.
const OUT_DIR_ENV: &str = "PHI_STIELTJES_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "phi-stieltjes",
    version,
    about = "Evaluate and verify Φ(x) = Γ(x+1)^(1/x) (1+1/x)^x / x"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalMethod {
    Direct,
    Series,
    Stieltjes,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Phi,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cm,
    Lcm,
    Pick,
    Identity,
    Corpus,
    All,
}

/// Either explicit points or an arithmetic range.
#[derive(clap::Args, Clone, Debug)]
pub struct GridArgs {
    /// Grid points (repeat or separate with commas)
    #[arg(long = "x", value_delimiter = ',', allow_negative_numbers = true)]
    pub x: Vec<f64>,
    /// Range start
    #[arg(long, allow_negative_numbers = true)]
    pub from: Option<f64>,
    /// Range end (inclusive)
    #[arg(long, allow_negative_numbers = true)]
    pub to: Option<f64>,
    /// Range step
    #[arg(long)]
    pub step: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Φ and log Φ on a grid
    Eval {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value_t = EvalMethod::Direct)]
        method: EvalMethod,
        /// Absolute error target of the quadrature route
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Tabulate φ or h; integer points in the range are always included
    Density {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
    /// Run verification suites and report per-check verdicts
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Upper end of the identity grid [0, xmax]
        #[arg(long, default_value_t = 20.0)]
        xmax: f64,
        /// Sample count of the Pick suites
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Highest derivative order (default 6 for cm, 5 for lcm)
        #[arg(long)]
        order: Option<u32>,
    },
    /// Recover h from boundary values of Φ
    Invert {
        #[command(flatten)]
        grid: GridArgs,
        /// Decreasing y values (default 1e-2, 1e-3, ..., 1e-12)
        #[arg(long = "y", value_delimiter = ',')]
        y: Vec<f64>,
        /// Exit 1 if any extrapolation is unstable
        #[arg(long)]
        strict: bool,
    },
}

/// Why a command did not succeed.
pub enum Failure {
    Config(String),
    Budget(String),
}

impl From<phi_stieltjes::Error> for Failure {
    fn from(e: phi_stieltjes::Error) -> Self {
        match e {
            phi_stieltjes::Error::BudgetNotMet { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Config(e.to_string()),
        }
    }
}

/// What a command produced.
pub enum Output {
    Table(Table),
    Report { json: Value, csv: Table },
}

/// Command output and whether every check passed.
pub struct Outcome {
    pub output: Output,
    pub passed: bool,
    pub budget_met: bool,
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Eval { grid, method, tol } => commands::eval(grid, *method, *tol),
        Command::Density {
            which,
            from,
            to,
            step,
        } => commands::density(*which, *from, *to, *step),
        Command::Verify {
            suite,
            xmax,
            count,
            seed,
            order,
        } => commands::verify(*suite, *xmax, *count, *seed, *order),
        Command::Invert { grid, y, strict } => commands::invert(grid, y, *strict),
    }
}

fn output_path(out: &PathBuf) -> PathBuf {
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if out.is_relative() => PathBuf::from(dir).join(out),
        _ => out.clone(),
    }
}

fn emit(cli: &Cli, output: &Output) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(output_path(path))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match (cli.format, output) {
        (Format::Csv, Output::Table(t)) | (Format::Csv, Output::Report { csv: t, .. }) => {
            t.write_csv(&mut sink).map_err(io::Error::other)?
        }
        (Format::Json, Output::Table(t)) => {
            writeln!(sink, "{}", serde_json::to_string_pretty(&t.to_json())?)?
        }
        (Format::Json, Output::Report { json, .. }) => {
            writeln!(sink, "{}", serde_json::to_string_pretty(json)?)?
        }
    }
    sink.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    if let Err(e) = emit(&cli, &outcome.output) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if !outcome.budget_met {
        eprintln!("error: quadrature error budget not met");
        ExitCode::from(3)
    } else if !outcome.passed {
        eprintln!("verification failed");
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
