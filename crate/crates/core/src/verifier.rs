//! Independent checks on edge colorings.
//!
//! Nothing here reads a [`ConflictDictionary`](crate::conflict::ConflictDictionary);
//! the checks recompute everything from the graph.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};

/// Default edge cap for [`brute_force_chromatic_index`].
pub const DEFAULT_EDGE_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{edges} edges exceed the brute-force cap of {cap}")]
    TooManyEdges { edges: usize, cap: usize },
}

/// Whether the edges at `v` carry pairwise distinct colors, all below `colors`.
pub fn properly_colored(graph: &Graph, v: VertexId, colors: usize) -> Result<bool, GraphError> {
    let incident = graph.incident(v);
    let mut seen = Vec::with_capacity(incident.len());
    for &(w, e) in incident {
        let c = graph.color_of(e).ok_or(GraphError::UncoloredEdge(v, w))?;
        seen.push(c);
    }
    graph.degree(v)?;
    let in_range = seen.iter().all(|c| c.index() < colors);
    seen.sort_unstable();
    seen.dedup();
    Ok(in_range && seen.len() == incident.len())
}

pub fn check_edge_coloring(graph: &Graph, colors: usize) -> Result<bool, GraphError> {
    for v in 0..graph.vertex_count() {
        if !properly_colored(graph, v, colors)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact backtracking test for a proper edge coloring with `colors` colors.
/// Edges are assigned in storage order; each edge tries colors ascending but
/// never more than one beyond the largest color used so far, so the first
/// edge is always color 0.
///
/// # Panics
///
/// If the search would need more than 64 colors, i.e. `min(colors, m) > 64`.
pub fn is_edge_colorable(graph: &Graph, colors: usize) -> bool {
    if graph.max_degree() > colors {
        return false;
    }
    // a proper coloring never uses more colors than there are edges
    let colors = colors.min(graph.edge_count());
    assert!(colors <= 64, "backtracking search is limited to 64 colors");
    let mut used = vec![0u64; graph.vertex_count()];
    assign(graph, 0, colors, 0, &mut used)
}

fn assign(graph: &Graph, e: usize, colors: usize, opened: usize, used: &mut [u64]) -> bool {
    if e == graph.edge_count() {
        return true;
    }
    let (u, v) = graph.endpoints(e);
    let limit = colors.min(opened + 1);
    for c in 0..limit {
        let bit = 1u64 << c;
        if (used[u] | used[v]) & bit != 0 {
            continue;
        }
        used[u] |= bit;
        used[v] |= bit;
        if assign(graph, e + 1, colors, opened.max(c + 1), used) {
            return true;
        }
        used[u] &= !bit;
        used[v] &= !bit;
    }
    false
}

/// Exact chromatic index for graphs with at most [`DEFAULT_EDGE_CAP`] edges.
pub fn brute_force_chromatic_index(graph: &Graph) -> Result<usize, VerifyError> {
    brute_force_chromatic_index_with_cap(graph, DEFAULT_EDGE_CAP)
}

pub fn brute_force_chromatic_index_with_cap(
    graph: &Graph,
    cap: usize,
) -> Result<usize, VerifyError> {
    if graph.edge_count() > cap {
        return Err(VerifyError::TooManyEdges {
            edges: graph.edge_count(),
            cap,
        });
    }
    let delta = graph.max_degree();
    Ok((delta..=delta + 1)
        .find(|&colors| is_edge_colorable(graph, colors))
        .expect("every simple graph is (max degree + 1)-edge-colorable"))
}
