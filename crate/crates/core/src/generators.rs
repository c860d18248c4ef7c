//! Test-graph generators: random regular graphs and odd graphs.

use std::collections::{BTreeMap, HashSet};

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("n * d must be even (n = {n}, d = {d})")]
    OddDegreeSum { n: usize, d: usize },
    #[error("degree {d} must be smaller than the vertex count {n}")]
    DegreeTooLarge { n: usize, d: usize },
    #[error("no simple {d}-regular graph on {n} vertices after {attempts} attempts")]
    Exhausted { n: usize, d: usize, attempts: usize },
    #[error("odd graph parameter k = {0} outside [2, 16]")]
    OddGraphOrder(usize),
}

/// Samples a simple `d`-regular graph on `n` vertices.
///
/// Stubs are paired in rounds: each round shuffles the remaining stubs and
/// pairs them consecutively, keeping every pair that forms a new simple edge.
/// Stubs from rejected pairs go into the next round. An attempt restarts from
/// scratch when the leftover stubs can no longer form any new edge; at most
/// `10 * n` attempts are made.
pub fn random_regular_graph<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
) -> Result<Graph, GenerateError> {
    if !(n * d).is_multiple_of(2) {
        return Err(GenerateError::OddDegreeSum { n, d });
    }
    if d >= n {
        return Err(GenerateError::DegreeTooLarge { n, d });
    }
    let attempts = 10 * n.max(1);
    for _ in 0..attempts {
        if let Some(edges) = try_pairing(n, d, rng) {
            let graph = Graph::new(n, &edges).expect("pairing only keeps simple edges");
            debug_assert!((0..n).all(|v| graph.degree(v) == Ok(d)));
            return Ok(graph);
        }
    }
    Err(GenerateError::Exhausted { n, d, attempts })
}

fn try_pairing<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
) -> Option<Vec<(VertexId, VertexId)>> {
    let mut edges = Vec::with_capacity(n * d / 2);
    let mut present = HashSet::with_capacity(n * d / 2);
    let mut stubs: Vec<VertexId> = (0..d).flat_map(|_| 0..n).collect();
    while !stubs.is_empty() {
        let mut leftover: BTreeMap<VertexId, usize> = BTreeMap::new();
        stubs.shuffle(rng);
        for pair in stubs.chunks_exact(2) {
            let (a, b) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if a != b && present.insert((a, b)) {
                edges.push((a, b));
            } else {
                *leftover.entry(a).or_default() += 1;
                *leftover.entry(b).or_default() += 1;
            }
        }
        if !can_extend(&present, &leftover) {
            return None;
        }
        stubs = leftover
            .into_iter()
            .flat_map(|(v, k)| std::iter::repeat_n(v, k))
            .collect();
    }
    Some(edges)
}

/// Whether some pair of distinct leftover vertices is not yet adjacent.
fn can_extend(
    present: &HashSet<(VertexId, VertexId)>,
    leftover: &BTreeMap<VertexId, usize>,
) -> bool {
    if leftover.is_empty() {
        return true;
    }
    let vertices: Vec<_> = leftover.keys().copied().collect();
    vertices.iter().enumerate().any(|(i, &a)| {
        vertices[i + 1..]
            .iter()
            .any(|&b| !present.contains(&(a, b)))
    })
}

/// The `(k-1)`-subsets of `{0, .., 2k-2}` as bitmasks, in colexicographic
/// order. Index `i` of the result is vertex `i` of [`odd_graph`].
pub fn odd_graph_subsets(k: usize) -> Result<Vec<u32>, GenerateError> {
    if !(2..=16).contains(&k) {
        return Err(GenerateError::OddGraphOrder(k));
    }
    let ground = 2 * k - 1;
    let mut subsets = Vec::new();
    // increasing integer order of fixed-weight masks is colex order
    let mut mask: u32 = (1 << (k - 1)) - 1;
    while mask < (1 << ground) {
        subsets.push(mask);
        // next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    Ok(subsets)
}

/// Colex rank of a fixed-weight mask: `sum C(position_i, i + 1)`.
fn colex_rank(mask: u32, binom: &[Vec<usize>]) -> usize {
    let mut rank = 0;
    let mut bits = mask;
    let mut i = 0;
    while bits != 0 {
        let p = bits.trailing_zeros() as usize;
        rank += binom[p][i + 1];
        bits &= bits - 1;
        i += 1;
    }
    rank
}

/// The odd graph O_k: vertices are the `(k-1)`-subsets of a `(2k-1)`-set,
/// adjacent when disjoint. It is `k`-regular on `C(2k-1, k-1)` vertices.
pub fn odd_graph(k: usize) -> Result<Graph, GenerateError> {
    let subsets = odd_graph_subsets(k)?;
    let ground = 2 * k - 1;
    let mut binom = vec![vec![0usize; ground + 1]; ground + 1];
    for a in 0..=ground {
        binom[a][0] = 1;
        for b in 1..=a {
            binom[a][b] = binom[a - 1][b - 1] + binom[a - 1][b];
        }
    }
    let full: u32 = (1 << ground) - 1;
    let mut edges = Vec::with_capacity(subsets.len() * k / 2);
    for (u, &mask) in subsets.iter().enumerate() {
        let complement = full ^ mask;
        let mut bits = complement;
        while bits != 0 {
            let b = bits & bits.wrapping_neg();
            bits ^= b;
            let v = colex_rank(complement ^ b, &binom);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(subsets.len(), &edges).expect("disjointness is symmetric and irreflexive"))
}
