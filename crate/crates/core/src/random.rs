//! Seeded random instances for sampled theorem checks and benchmarks.
//!
//! All generators draw from `ChaCha8Rng::seed_from_u64(seed)`, so a given
//! `(parameters, seed)` always produces the same graph.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

/// Attempts made by [`random_strong_digraph`] before giving up.
pub const MAX_ATTEMPTS: u32 = 10_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejection sampling: each attempt includes every ordered pair `(u, v)`,
/// `u ≠ v`, visited in row-major order, independently with probability `p`;
/// the first strongly connected sample is returned.
pub fn random_strong_digraph(n: usize, p: f64, seed: u64) -> Result<Digraph> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "arc probability {p} outside (0, 1)"
        )));
    }
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mut rng = rng(seed);
    for _ in 0..MAX_ATTEMPTS {
        let d = bernoulli_digraph(n, p, &mut rng);
        if d.is_strongly_connected() {
            return Ok(d);
        }
    }
    Err(Error::RetriesExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

/// One draw of the `G(n, p)` digraph model, strong or not.
pub fn bernoulli_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_sorted_arcs(n, &arcs)
}

/// A strong digraph with `n · avg_out_degree` arcs: a Hamiltonian cycle
/// through a random vertex permutation, topped up with uniformly random
/// extra arcs (no loops, no repeats).
pub fn random_strong_sparse(n: usize, avg_out_degree: usize, seed: u64) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "sparse generator needs n >= 2".into(),
        ));
    }
    if avg_out_degree == 0 || avg_out_degree > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "average out-degree {avg_out_degree} outside 1..={}",
            n - 1
        )));
    }
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut arcs: HashSet<(usize, usize)> =
        (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    let target = n * avg_out_degree;
    while arcs.len() < target {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            arcs.insert((u, v));
        }
    }
    let mut arcs: Vec<_> = arcs.into_iter().collect();
    arcs.sort_unstable();
    Ok(Digraph::from_sorted_arcs(n, &arcs))
}

/// A connected graph: a random recursive tree over a shuffled vertex order,
/// plus every remaining pair independently with probability `extra_p`.
pub fn random_connected_graph(n: usize, extra_p: f64, seed: u64) -> Result<UndirectedGraph> {
    if !(0.0..=1.0).contains(&extra_p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {extra_p} outside [0, 1]"
        )));
    }
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = HashSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_p) {
                edges.insert((u, v));
            }
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.sort_unstable();
    UndirectedGraph::new(n, edges)
}
