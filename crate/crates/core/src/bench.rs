//! Benchmark sweeps over random regular graphs.
//!
//! For each `(d, n)` cell a number of random `d`-regular instances is
//! generated and colored with `D = d`. Every instance gets its own seed,
//! derived from the base seed and its coordinates, so any subset of a sweep
//! can be rerun on its own. Only the heuristic itself is timed.

use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::driver::{
    apply_heuristic, HeuristicParams, RunError, DEFAULT_ITERATION_LIMIT, DEFAULT_REPETITION_LIMIT,
};
use crate::generators::{random_regular_graph, GenerateError};
use crate::precolor::PrecolorMode;
use crate::verifier::check_edge_coloring;

pub const DEFAULT_INSTANCES: usize = 30;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("invalid cell d = {d}, n = {n}: {source}")]
    InvalidCell {
        d: usize,
        n: usize,
        source: GenerateError,
    },
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Run(#[from] RunError),
    #[error("instance {instance} of d = {d}, n = {n} reported success on an improper coloring")]
    Unverified { d: usize, n: usize, instance: usize },
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub degrees: Vec<usize>,
    pub sizes: Vec<usize>,
    pub instances: usize,
    pub repetition_limit: usize,
    pub iteration_limit: usize,
    pub seed: u64,
    pub precolor: PrecolorMode,
    /// Worker threads; 1 runs everything on the calling thread.
    pub jobs: usize,
}

impl BenchConfig {
    pub fn new(degrees: Vec<usize>, sizes: Vec<usize>) -> Self {
        BenchConfig {
            degrees,
            sizes,
            instances: DEFAULT_INSTANCES,
            repetition_limit: DEFAULT_REPETITION_LIMIT,
            iteration_limit: DEFAULT_ITERATION_LIMIT,
            seed: 0,
            precolor: PrecolorMode::Greedy,
            jobs: 1,
        }
    }

    /// Cells in sweep order: ascending degree, then ascending size.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut degrees = self.degrees.clone();
        let mut sizes = self.sizes.clone();
        degrees.sort_unstable();
        degrees.dedup();
        sizes.sort_unstable();
        sizes.dedup();
        degrees
            .iter()
            .flat_map(|&d| sizes.iter().map(move |&n| (d, n)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub d: usize,
    pub n: usize,
    pub instance: usize,
    pub seed: u64,
    pub success: bool,
    pub passes: usize,
    pub wall_time_seconds: f64,
    pub time_per_pass: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinAvgMax {
    pub min: f64,
    pub avg: f64,
    pub max: f64,
}

impl MinAvgMax {
    pub fn of(values: impl IntoIterator<Item = f64>) -> Option<Self> {
        let mut count = 0usize;
        let (mut min, mut max, mut sum) = (f64::INFINITY, f64::NEG_INFINITY, 0.0);
        for v in values {
            count += 1;
            min = min.min(v);
            max = max.max(v);
            sum += v;
        }
        (count > 0).then(|| MinAvgMax {
            min,
            avg: sum / count as f64,
            max,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub d: usize,
    pub n: usize,
    pub instances: usize,
    pub successes: usize,
    pub time: MinAvgMax,
    pub passes: MinAvgMax,
    pub time_per_pass: MinAvgMax,
}

impl CellSummary {
    pub fn success_rate(&self) -> f64 {
        self.successes as f64 / self.instances as f64
    }

    fn from_records(d: usize, n: usize, records: &[BenchRecord]) -> Option<Self> {
        Some(CellSummary {
            d,
            n,
            instances: records.len(),
            successes: records.iter().filter(|r| r.success).count(),
            time: MinAvgMax::of(records.iter().map(|r| r.wall_time_seconds))?,
            passes: MinAvgMax::of(records.iter().map(|r| r.passes as f64))?,
            time_per_pass: MinAvgMax::of(records.iter().map(|r| r.time_per_pass))?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BenchResults {
    /// Sorted by `(d, n, instance)`.
    pub records: Vec<BenchRecord>,
    /// One per cell, in sweep order.
    pub summaries: Vec<CellSummary>,
}

impl BenchResults {
    pub fn summary(&self, d: usize, n: usize) -> Option<&CellSummary> {
        self.summaries.iter().find(|s| s.d == d && s.n == n)
    }

    /// Writes record rows, each cell followed by its summary row.
    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), BenchError> {
        let mut out = csv::Writer::from_writer(writer);
        for summary in &self.summaries {
            for r in self
                .records
                .iter()
                .filter(|r| r.d == summary.d && r.n == summary.n)
            {
                out.serialize(CsvRow::record(r))?;
            }
            out.serialize(CsvRow::summary(summary))?;
        }
        out.flush()?;
        Ok(())
    }
}

#[derive(Debug, Serialize)]
struct CsvRow {
    kind: &'static str,
    d: usize,
    n: usize,
    instance: Option<usize>,
    seed: Option<u64>,
    success: Option<bool>,
    passes: Option<usize>,
    wall_time_s: Option<f64>,
    time_per_pass_s: Option<f64>,
    instances: Option<usize>,
    success_rate: Option<f64>,
    time_min_s: Option<f64>,
    time_avg_s: Option<f64>,
    time_max_s: Option<f64>,
    passes_min: Option<f64>,
    passes_avg: Option<f64>,
    passes_max: Option<f64>,
    time_per_pass_min_s: Option<f64>,
    time_per_pass_avg_s: Option<f64>,
    time_per_pass_max_s: Option<f64>,
}

impl CsvRow {
    fn record(r: &BenchRecord) -> Self {
        CsvRow {
            kind: "record",
            d: r.d,
            n: r.n,
            instance: Some(r.instance),
            seed: Some(r.seed),
            success: Some(r.success),
            passes: Some(r.passes),
            wall_time_s: Some(r.wall_time_seconds),
            time_per_pass_s: Some(r.time_per_pass),
            instances: None,
            success_rate: None,
            time_min_s: None,
            time_avg_s: None,
            time_max_s: None,
            passes_min: None,
            passes_avg: None,
            passes_max: None,
            time_per_pass_min_s: None,
            time_per_pass_avg_s: None,
            time_per_pass_max_s: None,
        }
    }

    fn summary(s: &CellSummary) -> Self {
        CsvRow {
            kind: "summary",
            d: s.d,
            n: s.n,
            instance: None,
            seed: None,
            success: None,
            passes: None,
            wall_time_s: None,
            time_per_pass_s: None,
            instances: Some(s.instances),
            success_rate: Some(s.success_rate()),
            time_min_s: Some(s.time.min),
            time_avg_s: Some(s.time.avg),
            time_max_s: Some(s.time.max),
            passes_min: Some(s.passes.min),
            passes_avg: Some(s.passes.avg),
            passes_max: Some(s.passes.max),
            time_per_pass_min_s: Some(s.time_per_pass.min),
            time_per_pass_avg_s: Some(s.time_per_pass.avg),
            time_per_pass_max_s: Some(s.time_per_pass.max),
        }
    }
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of one instance, independent of the sweep it belongs to.
pub fn instance_seed(base: u64, d: usize, n: usize, instance: usize) -> u64 {
    [d as u64, n as u64, instance as u64]
        .into_iter()
        .fold(mix(base), |acc, x| mix(acc ^ x))
}

/// Generates and colors one instance. A reported success is re-checked by
/// the verifier before the record is returned.
pub fn run_instance(
    config: &BenchConfig,
    d: usize,
    n: usize,
    instance: usize,
) -> Result<BenchRecord, BenchError> {
    let seed = instance_seed(config.seed, d, n, instance);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graph = random_regular_graph(n, d, &mut rng)?;
    let params = HeuristicParams::new(d)
        .with_seed(mix(seed))
        .with_limits(config.repetition_limit, config.iteration_limit)
        .with_precolor(config.precolor);
    let report = apply_heuristic(&mut graph, &params)?;
    if report.success && check_edge_coloring(&graph, d) != Ok(true) {
        return Err(BenchError::Unverified { d, n, instance });
    }
    Ok(BenchRecord {
        d,
        n,
        instance,
        seed,
        success: report.success,
        passes: report.passes,
        wall_time_seconds: report.wall_seconds(),
        time_per_pass: report.time_per_pass(),
    })
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchResults, BenchError> {
    let cells = config.cells();
    for &(d, n) in &cells {
        if (n * d) % 2 != 0 || d >= n {
            let source = if (n * d) % 2 != 0 {
                GenerateError::OddDegreeSum { n, d }
            } else {
                GenerateError::DegreeTooLarge { n, d }
            };
            return Err(BenchError::InvalidCell { d, n, source });
        }
    }
    let tasks: Vec<_> = cells
        .iter()
        .flat_map(|&(d, n)| (0..config.instances).map(move |i| (d, n, i)))
        .collect();

    let records: Vec<BenchRecord> = if config.jobs <= 1 {
        tasks
            .iter()
            .map(|&(d, n, i)| run_instance(config, d, n, i))
            .collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| BenchError::ThreadPool(e.to_string()))?;
        pool.install(|| {
            tasks
                .par_iter()
                .map(|&(d, n, i)| run_instance(config, d, n, i))
                .collect::<Result<_, _>>()
        })?
    };

    let summaries = cells
        .iter()
        .filter_map(|&(d, n)| {
            let start = records.partition_point(|r| (r.d, r.n) < (d, n));
            let end = records.partition_point(|r| (r.d, r.n) <= (d, n));
            CellSummary::from_records(d, n, &records[start..end])
        })
        .collect();
    Ok(BenchResults { records, summaries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_depend_on_every_coordinate() {
        let s = instance_seed(1, 3, 100, 0);
        assert_eq!(s, instance_seed(1, 3, 100, 0));
        assert_ne!(s, instance_seed(2, 3, 100, 0));
        assert_ne!(s, instance_seed(1, 7, 100, 0));
        assert_ne!(s, instance_seed(1, 3, 102, 0));
        assert_ne!(s, instance_seed(1, 3, 100, 1));
        assert_ne!(instance_seed(0, 3, 100, 0), instance_seed(0, 100, 3, 0));
    }

    #[test]
    fn min_avg_max() {
        let s = MinAvgMax::of([3.0, 1.0, 2.0]).unwrap();
        assert_eq!(
            s,
            MinAvgMax {
                min: 1.0,
                avg: 2.0,
                max: 3.0
            }
        );
        assert_eq!(MinAvgMax::of([]), None);
    }

    #[test]
    fn cells_are_sorted_and_deduplicated() {
        let c = BenchConfig::new(vec![7, 3, 3], vec![100, 50]);
        assert_eq!(c.cells(), vec![(3, 50), (3, 100), (7, 50), (7, 100)]);
    }

    #[test]
    fn invalid_cell_is_rejected_up_front() {
        let c = BenchConfig::new(vec![3], vec![11]);
        assert!(matches!(
            run_bench(&c),
            Err(BenchError::InvalidCell { d: 3, n: 11, .. })
        ));
        let c = BenchConfig::new(vec![7], vec![6]);
        assert!(matches!(run_bench(&c), Err(BenchError::InvalidCell { .. })));
    }

    #[test]
    fn small_sweep_counts() {
        let mut c = BenchConfig::new(vec![3], vec![50, 100]);
        c.instances = 2;
        let res = run_bench(&c).unwrap();
        assert_eq!(res.records.len(), 4);
        assert_eq!(res.summaries.len(), 2);
        for r in &res.records {
            assert!(r.passes >= 1);
            assert!((r.time_per_pass - r.wall_time_seconds / r.passes as f64).abs() < 1e-12);
        }
        let mut csv = Vec::new();
        res.write_csv(&mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 1 + 4 + 2);
        assert!(lines[0].starts_with("kind,d,n,instance,seed,success,passes"));
        assert_eq!(
            lines.iter().filter(|l| l.starts_with("summary,")).count(),
            2
        );
        assert!(lines[3].starts_with("summary,3,50,"));
    }

    #[test]
    fn parallel_matches_sequential_order() {
        let mut c = BenchConfig::new(vec![3, 4], vec![20, 30]);
        c.instances = 3;
        let seq = run_bench(&c).unwrap();
        c.jobs = 4;
        let par = run_bench(&c).unwrap();
        let key = |r: &BenchRecord| (r.d, r.n, r.instance, r.seed, r.success, r.passes);
        assert_eq!(
            seq.records.iter().map(key).collect::<Vec<_>>(),
            par.records.iter().map(key).collect::<Vec<_>>()
        );
    }
}
