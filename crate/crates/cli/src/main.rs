//! `catwva` — tables for heralded spin cat states and weak-value amplification.

mod angles;
mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{CliError, CliResult};
use output::Format;

#[derive(Debug, Parser)]
#[command(name = "catwva", version, about = "Weak-value amplification with atomic spin cat states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spin Wigner functions of the heralded cat state on the Bloch sphere.
    Wigner(commands::wigner::WignerArgs),
    /// Phase distributions P(phi) over a list of post-selection angles.
    Phase(commands::phase::PhaseArgs),
    /// Scaled peak shift |phi_peak| / Omega against the post-selection angle.
    Shift(commands::shift::ShiftArgs),
    /// Quantum and classical Fisher information against the post-selection angle.
    Fisher(commands::fisher::FisherArgs),
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output directory (created if missing).
    #[arg(long, default_value = ".")]
    pub out: PathBuf,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Read every angle argument in degrees instead of radians.
    #[arg(long)]
    pub degrees: bool,
}

impl Common {
    pub fn angle(&self, raw: &str, what: &str) -> CliResult<f64> {
        let v = angles::parse_angle(raw).map_err(|e| CliError::Param(format!("--{what}: {e}")))?;
        Ok(angles::to_radians(v, self.degrees))
    }

    pub fn angle_list(&self, raw: &str, what: &str) -> CliResult<Vec<f64>> {
        let v = angles::parse_angle_list(raw).map_err(|e| CliError::Param(format!("--{what}: {e}")))?;
        Ok(v.into_iter().map(|x| angles::to_radians(x, self.degrees)).collect())
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Wigner(a) => commands::wigner::run(&a),
        Command::Phase(a) => commands::phase::run(&a),
        Command::Shift(a) => commands::shift::run(&a),
        Command::Fisher(a) => commands::fisher::run(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("catwva: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
