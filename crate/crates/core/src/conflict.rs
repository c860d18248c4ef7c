//! Conflict levels and the level → vertex-set dictionary.
//!
//! The conflict level of a vertex is its degree minus the number of distinct
//! colors on its incident edges. [`ConflictDictionary`] keeps every vertex of
//! positive level in exactly one bucket, supports O(1) insert/remove and
//! uniform sampling inside a bucket, and caches the total conflictivity.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use thiserror::Error;

use crate::graph::{Color, EdgeId, Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConflictError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("color {color} outside [0, {colors})")]
    ColorOutOfRange { color: Color, colors: usize },
}

/// `degree(v) - distinct_incident_colors(v)`; zero for isolated vertices.
pub fn conflict_level(graph: &Graph, v: VertexId) -> Result<usize, GraphError> {
    let distinct = graph.distinct_incident_colors(v)?;
    Ok(graph.degree(v)? - distinct)
}

const NOT_PRESENT: usize = usize::MAX;

#[derive(Debug, Clone)]
pub struct ConflictDictionary {
    colors: usize,
    /// `buckets[l]` holds the vertices at level `l`; `buckets[0]` stays empty.
    buckets: Vec<Vec<VertexId>>,
    level: Vec<usize>,
    /// Index of each vertex inside its bucket, `NOT_PRESENT` at level 0.
    slot: Vec<usize>,
    total: u64,
}

impl ConflictDictionary {
    /// Builds the dictionary from scratch for a totally colored graph, with
    /// `colors` the number of usable colors `D`.
    pub fn new(graph: &Graph, colors: usize) -> Result<Self, ConflictError> {
        let n = graph.vertex_count();
        let mut dict = ConflictDictionary {
            colors,
            buckets: vec![Vec::new(); graph.max_degree().max(1)],
            level: vec![0; n],
            slot: vec![NOT_PRESENT; n],
            total: 0,
        };
        for v in 0..n {
            let level = conflict_level(graph, v)?;
            dict.place(v, level);
        }
        Ok(dict)
    }

    #[inline]
    pub fn colors(&self) -> usize {
        self.colors
    }

    /// Cached conflictivity: the sum of all vertex levels.
    #[inline]
    pub fn total(&self) -> u64 {
        self.total
    }

    #[inline]
    pub fn level(&self, v: VertexId) -> usize {
        self.level[v]
    }

    /// Vertices currently at `level`, in no particular order. Level 0 is
    /// never tracked and always reads empty.
    pub fn bucket(&self, level: usize) -> &[VertexId] {
        match level {
            0 => &[],
            l => self.buckets.get(l).map_or(&[], Vec::as_slice),
        }
    }

    /// Highest level with a nonempty bucket, or `None` if no vertex conflicts.
    pub fn max_level(&self) -> Option<usize> {
        (1..self.buckets.len())
            .rev()
            .find(|&l| !self.buckets[l].is_empty())
    }

    /// A uniformly random vertex among those at the highest level.
    pub fn sample_max_level<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<VertexId> {
        let bucket = &self.buckets[self.max_level()?];
        Some(bucket[rng.gen_range(0..bucket.len())])
    }

    /// Recolors edge `{u, v}` to `color`, updating both endpoints. Returns
    /// the level variation at `v` (new minus old).
    pub fn color_edge_and_update(
        &mut self,
        graph: &mut Graph,
        u: VertexId,
        v: VertexId,
        color: Color,
    ) -> Result<isize, ConflictError> {
        let e = graph.edge_id(u, v)?;
        self.recolor(graph, e, u, v, color)
    }

    /// Same as [`Self::color_edge_and_update`] with the edge id already known.
    pub(crate) fn recolor(
        &mut self,
        graph: &mut Graph,
        e: EdgeId,
        u: VertexId,
        v: VertexId,
        color: Color,
    ) -> Result<isize, ConflictError> {
        if color.index() >= self.colors {
            return Err(ConflictError::ColorOutOfRange {
                color,
                colors: self.colors,
            });
        }
        graph.set_color(e, color);
        self.refresh(graph, u)?;
        self.refresh(graph, v)
    }

    /// Recomputes the level of `v` and moves it between buckets.
    fn refresh(&mut self, graph: &Graph, v: VertexId) -> Result<isize, ConflictError> {
        let old = self.level[v];
        let new = conflict_level(graph, v)?;
        if new != old {
            self.unplace(v);
            self.place(v, new);
        }
        Ok(new as isize - old as isize)
    }

    fn place(&mut self, v: VertexId, level: usize) {
        self.level[v] = level;
        self.total += level as u64;
        if level > 0 {
            let bucket = &mut self.buckets[level];
            self.slot[v] = bucket.len();
            bucket.push(v);
        }
    }

    fn unplace(&mut self, v: VertexId) {
        let level = self.level[v];
        self.total -= level as u64;
        if level > 0 {
            let idx = self.slot[v];
            let bucket = &mut self.buckets[level];
            bucket.swap_remove(idx);
            if let Some(&moved) = bucket.get(idx) {
                self.slot[moved] = idx;
            }
            self.slot[v] = NOT_PRESENT;
        }
        self.level[v] = 0;
    }

    /// Buckets as ordered sets, for comparisons that ignore storage order.
    pub fn snapshot(&self) -> BTreeMap<usize, BTreeSet<VertexId>> {
        self.buckets
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_empty())
            .map(|(l, b)| (l, b.iter().copied().collect()))
            .collect()
    }

    /// Whether this dictionary agrees with one rebuilt from `graph`, both in
    /// bucket membership and in the cached total.
    pub fn is_consistent_with(&self, graph: &Graph) -> bool {
        let Ok(scratch) = ConflictDictionary::new(graph, self.colors) else {
            return false;
        };
        let summed: u64 = scratch
            .snapshot()
            .iter()
            .map(|(l, set)| *l as u64 * set.len() as u64)
            .sum();
        scratch.snapshot() == self.snapshot() && summed == self.total
    }
}
