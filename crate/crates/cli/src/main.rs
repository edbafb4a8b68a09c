#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod config;
mod error;
mod output;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum { n_max, common } => commands::spectrum(n_max, &common),
        Command::Wavefunction { state, grid_half_width, grid_points, tol, common } => {
            commands::wavefunction(&state, grid_half_width, grid_points, tol, &common)
        }
        Command::Laplace { state, s, tol, common } => commands::laplace(&state, &s, tol, &common),
        Command::Verify { n_max, grid_half_width, grid_points, tol, s, even_factor, common } => {
            verify::verify(n_max, grid_half_width, grid_points, tol, &s, even_factor, &common)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help/--version
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("laplace-qho: {e}");
            e.exit_code()
        }
    }
}
