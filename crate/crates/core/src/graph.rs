//! Simple undirected graphs with one color slot per edge.
//!
//! Vertices are dense indices `0..n`. Every unordered edge owns a single
//! color slot, so both orientations `(u, v)` and `(v, u)` always read the
//! same value. Edges are stored in ascending `(min, max)` order, which is
//! also the enumeration order used by [`Graph::edges`].

use std::fmt;

use thiserror::Error;

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Position of an edge in [`Graph::edges`].
pub type EdgeId = usize;

/// An edge color, always interpreted relative to a color count `D` as a
/// value in `[0, D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub u32);

impl Color {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for Color {
    fn from(value: u32) -> Self {
        Color(value)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) has an endpoint outside [0, {n})")]
    EdgeOutOfRange { u: VertexId, v: VertexId, n: usize },
    #[error("vertex {v} outside [0, {n})")]
    VertexOutOfRange { v: VertexId, n: usize },
    #[error("no edge ({0}, {1})")]
    NoSuchEdge(VertexId, VertexId),
    #[error("edge ({0}, {1}) is uncolored")]
    UncoloredEdge(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    /// Per vertex: `(neighbor, edge id)` pairs in ascending neighbor order.
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    /// Canonical `(min, max)` endpoints, sorted ascending.
    edges: Vec<(VertexId, VertexId)>,
    colors: Vec<Option<Color>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge orientation in the input does not
    /// matter; all colors start unset.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut canonical = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for (id, &(u, v)) in canonical.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let m = canonical.len();
        Ok(Graph {
            adjacency,
            edges: canonical,
            colors: vec![None; m],
        })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as canonical `(min, max)` pairs in ascending order.
    #[inline]
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbor, edge id)` pairs incident to `v`.
    #[inline]
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .ok_or(GraphError::NoSuchEdge(u, v))
    }

    pub fn edge_color(&self, u: VertexId, v: VertexId) -> Result<Option<Color>, GraphError> {
        Ok(self.colors[self.edge_id(u, v)?])
    }

    #[inline]
    pub fn color_of(&self, e: EdgeId) -> Option<Color> {
        self.colors[e]
    }

    pub fn set_edge_color(
        &mut self,
        u: VertexId,
        v: VertexId,
        color: Color,
    ) -> Result<(), GraphError> {
        let e = self.edge_id(u, v)?;
        self.colors[e] = Some(color);
        Ok(())
    }

    #[inline]
    pub fn set_color(&mut self, e: EdgeId, color: Color) {
        self.colors[e] = Some(color);
    }

    pub fn clear_colors(&mut self) {
        self.colors.iter_mut().for_each(|c| *c = None);
    }

    /// Per-edge colors, aligned with [`Graph::edges`].
    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn is_totally_colored(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of different colors on the edges incident to `v`.
    pub fn distinct_incident_colors(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        let mut low: u64 = 0;
        let mut high: Vec<u32> = Vec::new();
        for &(w, e) in &self.adjacency[v] {
            let c = self.colors[e].ok_or(GraphError::UncoloredEdge(v, w))?;
            if c.0 < 64 {
                low |= 1 << c.0;
            } else {
                high.push(c.0);
            }
        }
        high.sort_unstable();
        high.dedup();
        Ok(low.count_ones() as usize + high.len())
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                v,
                n: self.vertex_count(),
            })
        }
    }
}

/// Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, &edges).expect("petersen edges are simple")
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("complete graph edges are simple")
}
