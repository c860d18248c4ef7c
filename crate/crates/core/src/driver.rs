//! The CVD main loop and its restart control.
//!
//! A pass starts from a fresh pre-coloring and repeatedly launches a Kempe
//! chain from a random vertex of highest conflict level. A repetition
//! counter tracks consecutive choices that fail to push the conflictivity
//! below the best value of the pass; once it exceeds the repetition limit the
//! pass is abandoned. At most `iteration_limit` passes are run.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::conflict::{ConflictDictionary, ConflictError};
use crate::graph::Graph;
use crate::kempe::{kempe_start, KempeError};
use crate::precolor::{precolor, PrecolorMode};

pub const DEFAULT_REPETITION_LIMIT: usize = 50;
pub const DEFAULT_ITERATION_LIMIT: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RunError {
    #[error("{colors} colors cannot properly color a graph of maximum degree {max_degree}")]
    TooFewColors { colors: usize, max_degree: usize },
    #[error("iteration limit must be at least 1")]
    ZeroIterationLimit,
    #[error(transparent)]
    Kempe(#[from] KempeError),
}

impl From<ConflictError> for RunError {
    fn from(e: ConflictError) -> Self {
        RunError::Kempe(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeuristicParams {
    /// Number of colors `D`.
    pub colors: usize,
    pub repetition_limit: usize,
    /// Maximum number of passes.
    pub iteration_limit: usize,
    pub seed: u64,
    pub precolor: PrecolorMode,
}

impl HeuristicParams {
    pub fn new(colors: usize) -> Self {
        HeuristicParams {
            colors,
            repetition_limit: DEFAULT_REPETITION_LIMIT,
            iteration_limit: DEFAULT_ITERATION_LIMIT,
            seed: 0,
            precolor: PrecolorMode::Greedy,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_limits(mut self, repetition_limit: usize, iteration_limit: usize) -> Self {
        self.repetition_limit = repetition_limit;
        self.iteration_limit = iteration_limit;
        self
    }

    pub fn with_precolor(mut self, mode: PrecolorMode) -> Self {
        self.precolor = mode;
        self
    }

    fn validate(&self, graph: &Graph) -> Result<(), RunError> {
        let max_degree = graph.max_degree();
        if self.colors < max_degree {
            return Err(RunError::TooFewColors {
                colors: self.colors,
                max_degree,
            });
        }
        if self.iteration_limit == 0 {
            return Err(RunError::ZeroIterationLimit);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PassStats {
    pub success: bool,
    pub initial_conflictivity: u64,
    pub best_conflictivity: u64,
    pub final_conflictivity: u64,
    /// Kempe chains launched.
    pub chains: usize,
    /// Edges recolored by those chains.
    pub recolorings: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub success: bool,
    pub passes: usize,
    pub wall_time: Duration,
    /// Conflictivity at the end of the last pass; zero on success.
    pub final_conflictivity: u64,
    pub seed: u64,
    pub pass_stats: Vec<PassStats>,
}

impl RunReport {
    pub fn wall_seconds(&self) -> f64 {
        self.wall_time.as_secs_f64()
    }

    pub fn time_per_pass(&self) -> f64 {
        self.wall_seconds() / self.passes as f64
    }
}

/// One pass over an already pre-colored graph.
pub fn heuristic_pass<R: Rng + ?Sized>(
    graph: &mut Graph,
    colors: usize,
    repetition_limit: usize,
    rng: &mut R,
) -> Result<PassStats, RunError> {
    let mut cd = ConflictDictionary::new(graph, colors)?;
    let mut stats = PassStats {
        initial_conflictivity: cd.total(),
        best_conflictivity: cd.total(),
        final_conflictivity: cd.total(),
        ..PassStats::default()
    };
    let mut best = cd.total();
    let mut repetitions = 0;
    while best > 0 {
        let v = cd
            .sample_max_level(rng)
            .expect("positive conflictivity implies a conflicting vertex");
        stats.recolorings += kempe_start(graph, &mut cd, v, rng)?;
        stats.chains += 1;
        let current = cd.total();
        stats.final_conflictivity = current;
        if current == 0 {
            break;
        }
        if current >= best {
            repetitions += 1;
            if repetitions > repetition_limit {
                stats.best_conflictivity = best;
                return Ok(stats);
            }
        } else {
            repetitions = 0;
        }
        best = best.min(current);
    }
    stats.best_conflictivity = 0;
    stats.success = true;
    Ok(stats)
}

/// Runs up to `iteration_limit` passes, each from a fresh pre-coloring, and
/// stops at the first success. The graph keeps the last coloring produced.
pub fn apply_heuristic(graph: &mut Graph, params: &HeuristicParams) -> Result<RunReport, RunError> {
    params.validate(graph)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let started = Instant::now();
    let mut pass_stats = Vec::new();
    for _ in 0..params.iteration_limit {
        precolor(graph, params.colors, params.precolor, &mut rng);
        let stats = heuristic_pass(graph, params.colors, params.repetition_limit, &mut rng)?;
        pass_stats.push(stats);
        if stats.success {
            break;
        }
    }
    let wall_time = started.elapsed();
    let last = pass_stats.last().copied().unwrap_or_default();
    debug_assert!(
        !last.success || crate::verifier::check_edge_coloring(graph, params.colors) == Ok(true)
    );
    Ok(RunReport {
        success: last.success,
        passes: pass_stats.len(),
        wall_time,
        final_conflictivity: last.final_conflictivity,
        seed: params.seed,
        pass_stats,
    })
}
