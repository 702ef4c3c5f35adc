//! Command-line front end: trajectory tables, hbar sweeps, cycle averages
//! and residual audits over the closed-form trajectory representation.

mod config;
mod output;
mod run;

use clap::{Parser, Subcommand};

use config::{CommonArgs, Resolved};

#[derive(Parser)]
#[command(
    name = "qshje",
    about = "Trajectory representation of 1D stationary quantum mechanics: \
             closed-form solutions and classical-limit (hbar -> 0) diagnostics",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate W, Wx, Wxx, Wxxx, the quantum term, Jacobi time, Hamilton's
    /// principal function and the QSHJE residual over an x grid.
    Trajectory(CommonArgs),
    /// Sweep an observable (or the turning-region width, or an eta-family
    /// envelope) over a geometric hbar grid at fixed x.
    Sweep(CommonArgs),
    /// Cycle averages of Wx, Wx^2 and the quantum term at fixed x, with
    /// closed-form references and deltas.
    Average(CommonArgs),
    /// Evaluate the QSHJE residual over random microstates and grids,
    /// reporting the worst |residual|/scale.
    #[command(name = "residual-audit")]
    ResidualAudit(CommonArgs),
}

/// Error kinds mapped to the stable exit-code scheme:
/// 0 success, 2 configuration, 3 numeric.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Numeric(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) | CliError::Numeric(m) => f.write_str(m),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl From<qshje::Error> for CliError {
    fn from(e: qshje::Error) -> Self {
        match e {
            qshje::Error::NonPositiveDefinite { .. }
            | qshje::Error::InvalidParameter(_)
            | qshje::Error::NoRealSolution(_)
            | qshje::Error::Domain(_) => CliError::Config(e.to_string()),
            qshje::Error::Range(_)
            | qshje::Error::Numerical(_)
            | qshje::Error::QuadratureNotConverged { .. } => CliError::Numeric(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Trajectory(args) => Resolved::from_args(args).and_then(|r| run::cmd_trajectory(&r)),
        Command::Sweep(args) => Resolved::from_args(args).and_then(|r| run::cmd_sweep(&r)),
        Command::Average(args) => Resolved::from_args(args).and_then(|r| run::cmd_average(&r)),
        Command::ResidualAudit(args) => {
            Resolved::from_args(args).and_then(|r| run::cmd_residual_audit(&r))
        }
    };
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
