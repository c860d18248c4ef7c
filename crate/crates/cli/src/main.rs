//! `cvd`: edge-color graphs with the CVD heuristic, verify colorings, and
//! run benchmark sweeps.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cvd::driver::{DEFAULT_ITERATION_LIMIT, DEFAULT_REPETITION_LIMIT};
use cvd::PrecolorMode;

#[derive(Parser, Debug)]
#[command(
    name = "cvd",
    version,
    about = "Conflicting-vertex-displacement edge coloring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct HeuristicArgs {
    /// Repetition limit: non-improving chain launches tolerated per pass
    #[arg(short = 'R', long, default_value_t = DEFAULT_REPETITION_LIMIT)]
    repetition_limit: usize,
    /// Iteration limit: maximum number of passes
    #[arg(short = 'L', long, default_value_t = DEFAULT_ITERATION_LIMIT)]
    iteration_limit: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Initial coloring of each pass
    #[arg(long, default_value_t = PrecolorMode::Greedy)]
    precolor: PrecolorMode,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Color an edge-list graph
    Color {
        input: PathBuf,
        /// Number of colors (defaults to the maximum degree)
        #[arg(short = 'D', long)]
        colors: Option<usize>,
        #[command(flatten)]
        heuristic: HeuristicArgs,
        /// Coloring output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Benchmark sweep over random regular graphs, written as CSV
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = cvd::bench::DEFAULT_INSTANCES)]
        instances: usize,
        #[command(flatten)]
        heuristic: HeuristicArgs,
        /// Worker threads
        #[arg(short, long, default_value_t = 1)]
        jobs: usize,
        /// CSV output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Color the odd graph O_k
    Oddgraph {
        k: usize,
        /// Number of colors (defaults to k)
        #[arg(short = 'D', long)]
        colors: Option<usize>,
        #[command(flatten)]
        heuristic: HeuristicArgs,
    },
    /// Check a coloring file against an edge-list graph
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Number of colors (defaults to the maximum degree)
        #[arg(short = 'D', long)]
        colors: Option<usize>,
    },
    /// Write a generated graph in edge-list format
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// Random d-regular graph on n vertices
    Regular {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Odd graph O_k
    Odd { k: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(status) => status.into(),
        Err(err) => {
            eprintln!("error: {err}");
            err.status().into()
        }
    }
}
