use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polarloss_cli::{cmd_compare, cmd_modes, cmd_sweep};

/// Polariton loss rates in the ultrastrong-coupling regime: Hamiltonian
/// formulas cross-checked against Maxwell boundary conditions.
#[derive(Parser)]
#[command(name = "polarloss", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured coupling sweep and write the CSV/JSON table.
    Sweep {
        /// Scenario file (TOML).
        #[arg(long)]
        config: PathBuf,
    },
    /// Print a one-point method-comparison table to standard output.
    Compare {
        /// Scenario file (TOML).
        #[arg(long)]
        config: PathBuf,
        /// Coupling ratio g/omega_x; defaults to the sweep upper bound.
        #[arg(long)]
        g: Option<f64>,
    },
    /// Print polariton eigenfrequencies and Hopfield coefficients.
    Modes {
        /// Scenario file (TOML).
        #[arg(long)]
        config: PathBuf,
        /// Coupling ratio g/omega_x; defaults to the sweep upper bound.
        #[arg(long)]
        g: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sweep { config } => cmd_sweep(config),
        Command::Compare { config, g } => cmd_compare(config, *g),
        Command::Modes { config, g } => cmd_modes(config, *g),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("polarloss: {e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}
