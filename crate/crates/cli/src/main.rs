//! `spherelab` command-line driver.
//!
//! Exit codes: 0 on success, 2 for invalid configuration or input files,
//! 3 when the geometry violates a precondition or a solver fails.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod cone;
mod output;
mod params;
mod planar;

use params::Params;

#[derive(Debug, Parser)]
#[command(name = "spherelab", version, about = "Poncelet polygons, bisector harnesses and quadric tangent cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Poncelet polygon in the unit circle around `--body` from `--start`.
    Poncelet(Params),
    /// Inner-circle radius closing after `--k` steps, for centre offset `--offset`.
    Fer(Params),
    /// Bisector defect of `--body` about `--p`.
    Blanco(Params),
    /// Tangent cones of the quadric in `--quadric`.
    Cone {
        #[command(subcommand)]
        command: ConeCommand,
    },
}

#[derive(Debug, Subcommand)]
enum ConeCommand {
    /// Cone axes from each viewpoint.
    Axis(Params),
    /// Cone axes and their least-squares common point.
    Concurrency(Params),
    /// Bisector reports on random sections through `--p`.
    Babel(Params),
    /// Viewpoints on `--plane`: right circularity, concurrency, section checks.
    Mari(Params),
    /// Concurrency residual across a sweep of ellipsoid aspect ratios.
    ExploreGruber(Params),
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Io(String),
    Geometry(spherelab::Error),
}

impl From<spherelab::Error> for CliError {
    fn from(e: spherelab::Error) -> Self {
        CliError::Geometry(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Geometry(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Io(m) => write!(f, "output error: {m}"),
            CliError::Geometry(e) => write!(f, "geometric error: {e}"),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Poncelet(p) => planar::poncelet(p.resolve()?),
        Command::Fer(p) => planar::fer(p.resolve()?),
        Command::Blanco(p) => planar::blanco(p.resolve()?),
        Command::Cone { command } => match command {
            ConeCommand::Axis(p) => cone::axis(p.resolve()?, false),
            ConeCommand::Concurrency(p) => cone::axis(p.resolve()?, true),
            ConeCommand::Babel(p) => cone::babel(p.resolve()?),
            ConeCommand::Mari(p) => cone::mari(p.resolve()?),
            ConeCommand::ExploreGruber(p) => cone::explore_gruber(p.resolve()?),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("spherelab: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
