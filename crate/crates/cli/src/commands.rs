use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cvd::bench::{run_bench, BenchConfig, BenchError};
use cvd::io::{
    apply_coloring, parse_coloring, parse_edge_list, write_coloring, write_edge_list,
    ColoringError, FormatError,
};
use cvd::{
    apply_heuristic, check_edge_coloring, odd_graph, random_regular_graph, GenerateError, Graph,
    HeuristicParams, RunError, RunReport,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::{Command, Family, HeuristicArgs};

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    /// The heuristic gave up, or a checked coloring is improper.
    Failure = 1,
    Usage = 2,
    ParseOrIo = 3,
    /// A coloring file does not list each graph edge exactly once.
    ColoringMismatch = 4,
    ColorOutOfRange = 5,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Run(#[from] RunError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

impl CliError {
    pub fn status(&self) -> Status {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => Status::ParseOrIo,
            CliError::Run(RunError::Kempe(_)) => Status::Failure,
            CliError::Run(_) | CliError::Generate(_) => Status::Usage,
            CliError::Bench(BenchError::InvalidCell { .. } | BenchError::ThreadPool(_)) => {
                Status::Usage
            }
            CliError::Bench(BenchError::Io(_) | BenchError::Csv(_)) => Status::ParseOrIo,
            CliError::Bench(_) => Status::Failure,
            CliError::Coloring(ColoringError::ColorOutOfRange { .. }) => Status::ColorOutOfRange,
            CliError::Coloring(_) => Status::ColoringMismatch,
        }
    }
}

pub fn run(command: Command) -> Result<Status, CliError> {
    match command {
        Command::Color {
            input,
            colors,
            heuristic,
            output,
        } => color(&input, colors, heuristic, output.as_deref()),
        Command::Bench {
            degrees,
            sizes,
            instances,
            heuristic,
            jobs,
            output,
        } => {
            let config = BenchConfig {
                instances,
                repetition_limit: heuristic.repetition_limit,
                iteration_limit: heuristic.iteration_limit,
                seed: heuristic.seed,
                precolor: heuristic.precolor,
                jobs,
                ..BenchConfig::new(degrees, sizes)
            };
            bench(&config, output.as_deref())
        }
        Command::Oddgraph {
            k,
            colors,
            heuristic,
        } => oddgraph(k, colors, heuristic),
        Command::Verify {
            graph,
            coloring,
            colors,
        } => verify(&graph, &coloring, colors),
        Command::Generate { family, output } => {
            let graph = match family {
                Family::Regular { n, d, seed } => {
                    random_regular_graph(n, d, &mut ChaCha8Rng::seed_from_u64(seed))?
                }
                Family::Odd { k } => odd_graph(k)?,
            };
            emit(output.as_deref(), write_edge_list(&graph).as_bytes())?;
            Ok(Status::Success)
        }
    }
}

fn params(colors: usize, args: HeuristicArgs) -> HeuristicParams {
    HeuristicParams::new(colors)
        .with_seed(args.seed)
        .with_limits(args.repetition_limit, args.iteration_limit)
        .with_precolor(args.precolor)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    let result = match path {
        Some(p) => fs::write(p, bytes),
        None => io::stdout().write_all(bytes),
    };
    result.map_err(|source| CliError::Io {
        path: path.unwrap_or(Path::new("<stdout>")).to_path_buf(),
        source,
    })
}

fn print_report(graph: &Graph, colors: usize, report: &RunReport) {
    eprintln!("vertices={}", graph.vertex_count());
    eprintln!("edges={}", graph.edge_count());
    eprintln!("colors={colors}");
    eprintln!("success={}", report.success);
    eprintln!("passes={}", report.passes);
    eprintln!("wall_time_s={:.6}", report.wall_seconds());
    eprintln!("final_conflictivity={}", report.final_conflictivity);
    eprintln!("seed={}", report.seed);
}

fn color(
    input: &Path,
    colors: Option<usize>,
    args: HeuristicArgs,
    output: Option<&Path>,
) -> Result<Status, CliError> {
    let mut graph = read_graph(input)?;
    let colors = colors.unwrap_or_else(|| graph.max_degree());
    let report = apply_heuristic(&mut graph, &params(colors, args))?;
    print_report(&graph, colors, &report);
    if !report.success {
        return Ok(Status::Failure);
    }
    let text = write_coloring(&graph).expect("a successful run leaves every edge colored");
    emit(output, text.as_bytes())?;
    Ok(Status::Success)
}

fn bench(config: &BenchConfig, output: Option<&Path>) -> Result<Status, CliError> {
    let results = run_bench(config)?;
    let mut csv = Vec::new();
    results.write_csv(&mut csv)?;
    emit(output, &csv)?;
    for s in &results.summaries {
        eprintln!(
            "d={} n={} success={}/{} avg_time_s={:.6} avg_passes={:.2}",
            s.d, s.n, s.successes, s.instances, s.time.avg, s.passes.avg
        );
    }
    Ok(Status::Success)
}

fn oddgraph(k: usize, colors: Option<usize>, args: HeuristicArgs) -> Result<Status, CliError> {
    let mut graph = odd_graph(k)?;
    let colors = colors.unwrap_or(k);
    let report = apply_heuristic(&mut graph, &params(colors, args))?;
    println!("k={k}");
    println!("vertices={}", graph.vertex_count());
    println!("edges={}", graph.edge_count());
    println!("colors={colors}");
    println!("success={}", report.success);
    println!("passes={}", report.passes);
    println!("wall_time_s={:.6}", report.wall_seconds());
    Ok(if report.success {
        Status::Success
    } else {
        Status::Failure
    })
}

fn verify(
    graph_path: &Path,
    coloring_path: &Path,
    colors: Option<usize>,
) -> Result<Status, CliError> {
    let mut graph = read_graph(graph_path)?;
    let entries = parse_coloring(&read(coloring_path)?).map_err(|source| CliError::Parse {
        path: coloring_path.to_path_buf(),
        source,
    })?;
    let colors = colors.unwrap_or_else(|| graph.max_degree());
    apply_coloring(&mut graph, &entries, colors)?;
    let proper = check_edge_coloring(&graph, colors).expect("coloring covers every edge");
    println!("proper={proper}");
    Ok(if proper {
        Status::Success
    } else {
        Status::Failure
    })
}
