//! `maglap`: eigenvalue tables for the constant-field magnetic Laplacian on disks.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod output;

use output::Format;

#[derive(Parser)]
#[command(name = "maglap", version, about = "Magnetic Dirichlet Laplacian on disks", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to a file instead of stdout (CSV gets a `.manifest.json` sidecar)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Root tolerance
    #[arg(long, default_value_t = maglap::DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// One eigenvalue branch over a range of field strengths
    Branch(commands::BranchArgs),
    /// Sorted spectrum of a disk or a union of disks
    Spectrum(commands::SpectrumArgs),
    /// Pólya ratio scans and the critical field
    Polya {
        #[command(subcommand)]
        command: commands::PolyaCommand,
    },
    /// Riesz means against the classical constant
    Riesz(commands::RieszArgs),
    /// Strong-field remainder against its leading term
    Asympt(commands::AsymptArgs),
    /// Compare branch eigenvalues with the finite-difference solver
    OracleCheck(commands::OracleArgs),
}

/// Failure with its exit code: 2 usage, 3 numerics, 4 scan safety.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<maglap::Error> for Failure {
    fn from(e: maglap::Error) -> Self {
        use maglap::Error::*;
        let code = match &e {
            InvalidParam(_)
            | NonMagneticUnsupported
            | IndexOutOfRange { .. }
            | DomainTooSmall { .. }
            | AsymptoticRegime { .. } => 2,
            PrecisionExceeded { .. } | BracketNotFound { .. } | ConvergenceFailure { .. } => 3,
            TailUnsafe { .. } | BadBracket { .. } => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("output: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Branch(a) => commands::branch(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Polya { command } => commands::polya(command),
        Command::Riesz(a) => commands::riesz(a),
        Command::Asympt(a) => commands::asympt(a),
        Command::OracleCheck(a) => commands::oracle_check(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("maglap: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
