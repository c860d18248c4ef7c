//! Kempe-chain conflict displacement.
//!
//! A chain starts at a conflicting vertex on one of its repeated-color edges
//! and recolors edges alternately with a pair of colors, moving the conflict
//! along the path. A walk stops when the conflict cancels at the current
//! vertex, when the chain cannot be extended, or when it returns to a vertex
//! it already left from.

use std::collections::HashSet;

use rand::Rng;
use thiserror::Error;

use crate::colorset::ColorSet;
use crate::conflict::{ConflictDictionary, ConflictError};
use crate::graph::{Color, Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KempeError {
    #[error(transparent)]
    Conflict(#[from] ConflictError),
    #[error("vertex {0} has no color left to start a chain (degree exceeds the color count)")]
    NoAvailableColor(VertexId),
}

impl From<GraphError> for KempeError {
    fn from(e: GraphError) -> Self {
        KempeError::Conflict(e.into())
    }
}

/// Outcome of recoloring one chain edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KempeNext {
    /// Level change at the head vertex.
    pub variation: isize,
    /// Color of the edge before it was recolored.
    pub old_color: Color,
    pub next: Option<VertexId>,
}

/// Where the chain stands after one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KempeStepResult {
    pub last: VertexId,
    /// Next head and the color its edge will receive; `None` ends the chain.
    pub next: Option<(VertexId, Color)>,
}

impl KempeStepResult {
    pub fn is_terminal(&self) -> bool {
        self.next.is_none()
    }
}

/// Recolors `{last, node}` to `new_color` after picking, uniformly at random,
/// the next chain vertex among the neighbors of `node` (other than `last`)
/// whose edge already carries `new_color`.
pub fn kempe_next<R: Rng + ?Sized>(
    graph: &mut Graph,
    cd: &mut ConflictDictionary,
    last: VertexId,
    node: VertexId,
    new_color: Color,
    rng: &mut R,
) -> Result<KempeNext, KempeError> {
    let e = graph.edge_id(last, node)?;
    let old_color = graph
        .color_of(e)
        .ok_or(GraphError::UncoloredEdge(last, node))?;

    let is_candidate =
        |&&(w, f): &&(VertexId, usize)| w != last && graph.color_of(f) == Some(new_color);
    let count = graph.incident(node).iter().filter(is_candidate).count();
    let next = if count == 0 {
        None
    } else {
        let k = rng.gen_range(0..count);
        graph
            .incident(node)
            .iter()
            .filter(is_candidate)
            .nth(k)
            .map(|&(w, _)| w)
    };

    let variation = cd.recolor(graph, e, last, node, new_color)?;
    Ok(KempeNext {
        variation,
        old_color,
        next,
    })
}

/// One chain step. Terminal when the conflict level at `node` dropped or no
/// continuation exists; otherwise the edge's old color is carried forward.
pub fn kempe_step<R: Rng + ?Sized>(
    graph: &mut Graph,
    cd: &mut ConflictDictionary,
    last: VertexId,
    node: VertexId,
    new_color: Color,
    rng: &mut R,
) -> Result<KempeStepResult, KempeError> {
    let KempeNext {
        variation,
        old_color,
        next,
    } = kempe_next(graph, cd, last, node, new_color, rng)?;
    let next = match next {
        Some(w) if variation >= 0 => Some((w, old_color)),
        _ => None,
    };
    Ok(KempeStepResult { last: node, next })
}

/// Walks the chain that begins with edge `{start, node}` recolored to
/// `new_color`. Returns the number of edges recolored, which never exceeds
/// the vertex count.
pub fn kempe_process<R: Rng + ?Sized>(
    graph: &mut Graph,
    cd: &mut ConflictDictionary,
    start: VertexId,
    node: VertexId,
    new_color: Color,
    rng: &mut R,
) -> Result<usize, KempeError> {
    let mut visited = HashSet::new();
    let (mut tail, mut head, mut color) = (start, node, new_color);
    let mut recolored = 0;
    while visited.insert(tail) {
        let step = kempe_step(graph, cd, tail, head, color, rng)?;
        recolored += 1;
        tail = step.last;
        match step.next {
            Some((w, c)) => {
                head = w;
                color = c;
            }
            None => break,
        }
    }
    Ok(recolored)
}

/// Launches a chain from `v` along one of its repeated-color edges (chosen
/// uniformly), using a color missing at `v` (also chosen uniformly). A vertex
/// with no repeated color is left untouched and `Ok(0)` is returned.
pub fn kempe_start<R: Rng + ?Sized>(
    graph: &mut Graph,
    cd: &mut ConflictDictionary,
    v: VertexId,
    rng: &mut R,
) -> Result<usize, KempeError> {
    let colors: Vec<(VertexId, Color)> = graph
        .incident(v)
        .iter()
        .map(|&(w, e)| {
            graph
                .color_of(e)
                .map(|c| (w, c))
                .ok_or(GraphError::UncoloredEdge(v, w))
        })
        .collect::<Result<_, _>>()?;
    let mut available = ColorSet::full(cd.colors());
    for &(_, c) in &colors {
        available.remove(c);
    }
    // Edges whose color repeats at v (every occurrence) or lies outside 0..D.
    let repeated: Vec<VertexId> = colors
        .iter()
        .filter(|&&(w, c)| {
            c.index() >= cd.colors() || colors.iter().any(|&(x, d)| d == c && x != w)
        })
        .map(|&(w, _)| w)
        .collect();
    if repeated.is_empty() {
        return Ok(0);
    }
    let node = repeated[rng.gen_range(0..repeated.len())];
    let new_color = available
        .choose(rng)
        .ok_or(KempeError::NoAvailableColor(v))?;
    kempe_process(graph, cd, v, node, new_color, rng)
}
