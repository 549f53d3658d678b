//! `hopf`: generate graphs, compute curvature and Morse indices, build
//! level hypersurfaces and check the index identities.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on bad
//! input.

mod analyze;
mod gen;
mod hypersurface;
mod input;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use input::InputError;

#[derive(Parser, Debug)]
#[command(name = "hopf", version, about = "Curvature, Morse indices and level hypersurfaces of finite simple graphs")]
pub struct Cli {
    /// Print JSON reports to stdout instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the output (JSON for reports) to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Master seed for random graphs and functions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Write a generated graph as JSON (or DOT).
    Gen(gen::GenArgs),
    /// f-vector, Euler characteristic, dimension, curvature and indices.
    Analyze(analyze::AnalyzeArgs),
    /// Check an identity and report both sides of every comparison.
    Verify(verify::VerifyArgs),
    /// The level hypersurface f = c, optionally completed.
    Hypersurface(hypersurface::HypersurfaceArgs),
    /// The unit sphere of a vertex.
    Sphere(hypersurface::SphereArgs),
}

pub enum Status {
    Pass,
    Fail,
}

fn run(cli: &Cli) -> Result<Status, InputError> {
    if let Some(n) = cli.threads {
        if n == 0 {
            input::bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| InputError(e.to_string()))?;
    }
    match &cli.command {
        Command::Gen(args) => gen::run(cli, args),
        Command::Analyze(args) => analyze::run(cli, args),
        Command::Verify(args) => verify::run(cli, args),
        Command::Hypersurface(args) => hypersurface::run(cli, args),
        Command::Sphere(args) => hypersurface::run_sphere(cli, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
