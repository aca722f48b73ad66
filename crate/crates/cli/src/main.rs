//! `sfqctl`: run control-sequence simulations, pattern optimizations,
//! coprocessor models, detector scans and budget reports from config files.

mod commands;
mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "sfqctl",
    about = "SFQ qubit-control simulation and interface budgeting",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate a pulse pattern and report gate fidelity and trajectory.
    Simulate(CommonArgs),
    /// Search binary pulse patterns with the genetic algorithm.
    Optimize(CommonArgs),
    /// Stream stored patterns through the pattern generator and count junctions.
    Pgu(CommonArgs),
    /// Closed-form and Monte Carlo photon-counter readout figures.
    Measure(CommonArgs),
    /// Power, wiring-heat and footprint budget roll-up.
    Budget(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args)]
pub struct CommonArgs {
    /// Config file (TOML, unit-suffixed keys).
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the config's rng_seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Directory for output files (created if missing).
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Cap on rayon worker threads; never changes results.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Format of the stdout summary.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Simulate(args) => setup(args).and_then(|_| commands::simulate::run(args)),
        Command::Optimize(args) => setup(args).and_then(|_| commands::optimize::run(args)),
        Command::Pgu(args) => setup(args).and_then(|_| commands::pgu::run(args)),
        Command::Measure(args) => setup(args).and_then(|_| commands::measure::run(args)),
        Command::Budget(args) => setup(args).and_then(|_| commands::budget::run(args)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            let payload = serde_json::json!({ "error": format!("{err:#}") });
            eprintln!("{payload}");
            ExitCode::FAILURE
        }
    }
}

fn setup(args: &CommonArgs) -> anyhow::Result<()> {
    if let Some(threads) = args.threads {
        // ignore the error if a pool already exists (tests invoke run() twice)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    std::fs::create_dir_all(&args.out)?;
    Ok(())
}
