//! Conflicting-vertex-displacement (CVD) heuristic for Δ-edge-coloring.
//!
//! The heuristic starts from a greedy or random coloring with `D` colors and
//! repeatedly picks a vertex of highest conflict level (degree minus the
//! number of distinct incident colors). From it, a Kempe chain swaps two
//! alternating colors along a path, pushing the conflict away until it
//! cancels against another one. A pass that stops improving is abandoned and
//! restarted from a fresh pre-coloring.
//!
//! ```
//! use cvd::{apply_heuristic, check_edge_coloring, complete, HeuristicParams};
//!
//! let mut k4 = complete(4);
//! let report = apply_heuristic(&mut k4, &HeuristicParams::new(3).with_seed(1)).unwrap();
//! assert!(report.success);
//! assert_eq!(check_edge_coloring(&k4, 3), Ok(true));
//! ```

pub mod bench;
pub mod colorset;
pub mod conflict;
pub mod driver;
pub mod generators;
pub mod graph;
pub mod io;
pub mod kempe;
pub mod precolor;
pub mod verifier;

pub use conflict::{conflict_level, ConflictDictionary, ConflictError};
pub use driver::{
    apply_heuristic, heuristic_pass, HeuristicParams, PassStats, RunError, RunReport,
};
pub use generators::{odd_graph, random_regular_graph, GenerateError};
pub use graph::{complete, petersen, Color, EdgeId, Graph, GraphError, VertexId};
pub use kempe::{kempe_next, kempe_process, kempe_start, kempe_step, KempeError, KempeStepResult};
pub use precolor::{greedy_precolor, random_precolor, PrecolorMode};
pub use verifier::{brute_force_chromatic_index, check_edge_coloring, properly_colored};
