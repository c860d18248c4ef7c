//! Initial colorings for each pass of the heuristic.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::colorset::ColorSet;
use crate::graph::{Color, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrecolorMode {
    /// Each edge takes a color unused at both endpoints when one exists.
    #[default]
    Greedy,
    /// Independent uniform colors.
    Random,
}

impl FromStr for PrecolorMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" => Ok(PrecolorMode::Greedy),
            "random" => Ok(PrecolorMode::Random),
            other => Err(format!(
                "unknown precolor mode `{other}` (expected greedy or random)"
            )),
        }
    }
}

impl fmt::Display for PrecolorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrecolorMode::Greedy => "greedy",
            PrecolorMode::Random => "random",
        })
    }
}

pub fn precolor<R: Rng + ?Sized>(
    graph: &mut Graph,
    colors: usize,
    mode: PrecolorMode,
    rng: &mut R,
) {
    match mode {
        PrecolorMode::Greedy => greedy_precolor(graph, colors, rng),
        PrecolorMode::Random => random_precolor(graph, colors, rng),
    }
}

/// Clears the coloring, then visits edges in ascending `(min, max)` order
/// giving each a uniform color among those absent at both endpoints, or a
/// uniform color from `0..colors` when every color is taken.
///
/// # Panics
///
/// If `colors == 0` and the graph has edges.
pub fn greedy_precolor<R: Rng + ?Sized>(graph: &mut Graph, colors: usize, rng: &mut R) {
    graph.clear_colors();
    for e in 0..graph.edge_count() {
        let (u, v) = graph.endpoints(e);
        let mut available = ColorSet::full(colors);
        for &(_, f) in graph.incident(u).iter().chain(graph.incident(v)) {
            if let Some(c) = graph.color_of(f) {
                available.remove(c);
            }
        }
        let color = match available.choose(rng) {
            Some(c) => {
                debug_assert!(!incident_colors_contain(graph, u, c));
                debug_assert!(!incident_colors_contain(graph, v, c));
                c
            }
            None => uniform_color(colors, rng),
        };
        graph.set_color(e, color);
    }
}

/// Assigns every edge an independent uniform color from `0..colors`.
///
/// # Panics
///
/// If `colors == 0` and the graph has edges.
pub fn random_precolor<R: Rng + ?Sized>(graph: &mut Graph, colors: usize, rng: &mut R) {
    for e in 0..graph.edge_count() {
        graph.set_color(e, uniform_color(colors, rng));
    }
}

fn uniform_color<R: Rng + ?Sized>(colors: usize, rng: &mut R) -> Color {
    Color(rng.gen_range(0..colors as u32))
}

fn incident_colors_contain(graph: &Graph, v: usize, c: Color) -> bool {
    graph
        .incident(v)
        .iter()
        .any(|&(_, f)| graph.color_of(f) == Some(c))
}
