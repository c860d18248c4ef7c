//! Plain-text graph and coloring formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based vertex
//! ids. Coloring: one line `u v c` per edge. Fields are ASCII decimal
//! separated by whitespace; output uses single spaces and LF line endings.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Color, Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: expected {expected} integers, found `{text}`")]
    Malformed {
        line: usize,
        expected: usize,
        text: String,
    },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring lists ({0}, {1}), which is not an edge of the graph")]
    UnknownEdge(VertexId, VertexId),
    #[error("coloring lists edge ({0}, {1}) more than once")]
    RepeatedEdge(VertexId, VertexId),
    #[error("coloring does not cover edge ({0}, {1})")]
    MissingEdge(VertexId, VertexId),
    #[error("edge ({u}, {v}) has color {color} outside [0, {colors})")]
    ColorOutOfRange {
        u: VertexId,
        v: VertexId,
        color: Color,
        colors: usize,
    },
}

fn numbered_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[usize; N], FormatError> {
    let malformed = || FormatError::Malformed {
        line,
        expected: N,
        text: text.to_string(),
    };
    let mut out = [0usize; N];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        *slot = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(malformed)?;
    }
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = numbered_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let [n, m] = parse_fields::<2>(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = parse_fields::<2>(line, text)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One `u v c` line per edge, in edge order.
pub fn write_coloring(graph: &Graph) -> Result<String, GraphError> {
    let mut out = String::new();
    for (&(u, v), c) in graph.edges().iter().zip(graph.colors()) {
        let c = c.ok_or(GraphError::UncoloredEdge(u, v))?;
        writeln!(out, "{u} {v} {c}").unwrap();
    }
    Ok(out)
}

pub fn parse_coloring(text: &str) -> Result<Vec<(VertexId, VertexId, Color)>, FormatError> {
    numbered_lines(text)
        .map(|(line, text)| {
            let [u, v, c] = parse_fields::<3>(line, text)?;
            let c = u32::try_from(c).map_err(|_| FormatError::Malformed {
                line,
                expected: 3,
                text: text.to_string(),
            })?;
            Ok((u, v, Color(c)))
        })
        .collect()
}

/// Installs a parsed coloring on `graph`. Every edge must appear exactly
/// once, in either orientation, with a color below `colors`.
pub fn apply_coloring(
    graph: &mut Graph,
    entries: &[(VertexId, VertexId, Color)],
    colors: usize,
) -> Result<(), ColoringError> {
    graph.clear_colors();
    for &(u, v, c) in entries {
        let e = graph
            .edge_id(u, v)
            .map_err(|_| ColoringError::UnknownEdge(u, v))?;
        if graph.color_of(e).is_some() {
            return Err(ColoringError::RepeatedEdge(u, v));
        }
        graph.set_color(e, c);
    }
    for (&(u, v), c) in graph.edges().iter().zip(graph.colors()) {
        match c {
            None => return Err(ColoringError::MissingEdge(u, v)),
            Some(c) if c.index() >= colors => {
                return Err(ColoringError::ColorOutOfRange {
                    u,
                    v,
                    color: *c,
                    colors,
                })
            }
            Some(_) => {}
        }
    }
    Ok(())
}
