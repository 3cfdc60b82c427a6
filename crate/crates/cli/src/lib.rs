//! `bellf`: simulations, correlation comparisons, spectra and the
//! incompatibility check from the command line.

pub mod angles;
mod commands;
pub mod error;
pub mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::angles::Grid;
pub use crate::commands::run;
pub use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "bellf",
    version,
    about = "Singlet correlations, hidden-variable models and their Fourier spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Settings grid `ALPHAS:BETAS`; each side is a comma list of angles
    /// (`0.3`, `0.125pi`, `pi/8`) or ranges `START..END@COUNT` (END excluded).
    #[arg(long, global = true, value_parser = angles::parse_grid)]
    pub grid: Option<Grid>,
    /// Pair the grid lists element-wise instead of taking their product.
    #[arg(long, global = true)]
    pub zip: bool,
    /// Simulated pairs per setting.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_runs: Option<u64>,
    /// Seed for every stochastic command.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Coefficient window `[-N, N]`.
    #[arg(
        long = "fourier-window",
        value_name = "N",
        global = true,
        default_value_t = 64
    )]
    pub window: usize,
    /// Quadrature nodes per axis for 2D spectra, or reconstruction points.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub resolution: Option<u64>,
    /// Model file, or the built-in name `aspect` (use `./aspect` for a file
    /// of that name).
    #[arg(long, value_name = "FILE", global = true)]
    pub model: Option<String>,
    /// Atoms in the discretized built-in `aspect` model.
    #[arg(long, global = true, default_value_t = 1024, value_parser = clap::value_parser!(u64).range(1..))]
    pub atoms: u64,
    /// Output file; standard output when absent.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated, header row, 17 significant digits.
    Table,
    /// JSON document.
    Doc,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monte Carlo estimates of the singlet correlation (needs --grid, --seed).
    Simulate,
    /// Compare a model's exact correlation with the singlet over --grid.
    Correlate,
    /// Fourier coefficients of a built-in target or a model file.
    Fourier {
        /// `quantum`, `aspect` (2D spectra of the correlations); `fig2`,
        /// `square`, `constant` (step responses); anything else is read as a
        /// model file. `fig2` is eight equal pieces of width π/8 starting at
        /// +1; the equal spacing is an assumed reading of the figure.
        target: String,
        /// Where to write the (θ, F, F_N) table for step responses; defaults
        /// to `<out>.reconstruction.<ext>` when --out is given.
        #[arg(long, value_name = "FILE")]
        reconstruction: Option<PathBuf>,
    },
    /// Check a model's moment matrix against the singlet target.
    Theorem,
    /// CHSH score of the singlet and, with --model, of a model.
    Chsh {
        /// `a,a',b,b'`; defaults to 0,pi/4,pi/8,3pi/8.
        #[arg(long, value_parser = parse_four)]
        angles: Option<[f64; 4]>,
    },
    /// Write a model file.
    Model {
        #[command(subcommand)]
        kind: ModelKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModelKind {
    /// Aspect's model discretized on --atoms midpoint values of λ.
    Aspect,
    /// A random mixture (needs --seed).
    Random {
        #[arg(long, default_value_t = 8)]
        max_atoms: usize,
        #[arg(long, default_value_t = 12)]
        max_intervals: usize,
        #[arg(long, value_enum, default_value_t = PairingArg::AntiCorrelated)]
        pairing: PairingArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairingArg {
    Correlated,
    AntiCorrelated,
}

fn parse_four(s: &str) -> Result<[f64; 4], String> {
    let v = angles::parse_list(s)?;
    v.try_into()
        .map_err(|v: Vec<f64>| format!("expected four angles a,a',b,b', got {}", v.len()))
}
