use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "laplace-qho",
    version,
    about = "Exact harmonic-oscillator spectra and eigenfunctions via the Laplace transform"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels E_N = (N + 1/2)ħω for N = 0..=n-max.
    Spectrum {
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Samples of a normalized eigenfunction plus its exact construction data.
    Wavefunction {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long = "grid-half-width", default_value_t = 5.0)]
        grid_half_width: f64,
        #[arg(long = "grid-points", default_value_t = 201)]
        grid_points: usize,
        /// Relative tolerance of the normalization integral.
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Analytic transform Φ(s) against the numeric transform of φ(ξ).
    Laplace {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, value_delimiter = ',', default_value = "0.5,1,1.5,3", allow_hyphen_values = true)]
        s: Vec<f64>,
        /// Relative tolerance of the numeric transform.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Runs every consistency check and emits a report.
    Verify {
        #[arg(long = "n-max", default_value_t = 10)]
        n_max: u32,
        #[arg(long = "grid-half-width", default_value_t = 10.0)]
        grid_half_width: f64,
        #[arg(long = "grid-points", default_value_t = 2001)]
        grid_points: usize,
        /// Tolerance for orthonormality of the normalized states.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_delimiter = ',', default_value = "0.5,1,1.5,3", allow_hyphen_values = true)]
        s: Vec<f64>,
        /// Even-parity recurrence factor; `off-by-one` is a negative control.
        #[arg(long = "even-factor", value_enum, default_value_t = EvenFactorArg::Consistent)]
        even_factor: EvenFactorArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub mass: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub omega: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// A state either by its place on the global ladder or by (parity, n).
#[derive(Debug, Clone, Args, Serialize)]
pub struct StateArgs {
    /// Total index N = 2n + δ.
    #[arg(long = "N", conflicts_with_all = ["parity", "n"])]
    #[serde(rename = "N")]
    pub total: Option<u32>,
    #[arg(long, value_enum, requires = "n")]
    pub parity: Option<ParityArg>,
    /// Index within the parity class.
    #[arg(long, requires = "parity")]
    pub n: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvenFactorArg {
    Consistent,
    OffByOne,
}
