//! Instance generators: threshold graphs from construction sequences,
//! perturbed graphs with a known modulator, and seeded random helpers used
//! by the test corpora and the bench command.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};
use crate::Error;

/// One step of a threshold construction sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdStep {
    /// Add a vertex with no edges to the current graph.
    Isolated,
    /// Add a vertex adjacent to every current vertex.
    Universal,
}

/// Builds a threshold graph from a construction sequence. Vertex `i` is the
/// `i`-th step; the first step is the one-vertex start regardless of its tag.
pub fn gen_threshold(seq: &[ThresholdStep]) -> Result<Graph, Error> {
    if seq.is_empty() {
        return Err(Error::InvalidInstance(
            "threshold construction sequence is empty".into(),
        ));
    }
    let mut g = Graph::new(seq.len());
    for (v, step) in seq.iter().enumerate().skip(1) {
        if *step == ThresholdStep::Universal {
            for u in 0..v {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Adds `d` fresh vertices to `base`, each adjacent to every vertex already
/// present (base and earlier fresh vertices) independently with probability
/// `edge_prob`. Returns the grown graph and the fresh vertices, which form a
/// valid deletion set back to `base`. Deterministic in `seed`.
pub fn gen_perturbed(
    base: &Graph,
    d: usize,
    edge_prob: f64,
    seed: u64,
) -> (Graph, BTreeSet<Vertex>) {
    let n = base.vertex_count();
    let mut g = Graph::new(n + d);
    for (u, v) in base.edges() {
        g.add_edge(u, v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut modulator = BTreeSet::new();
    for v in n..(n + d) {
        for u in 0..v {
            if rng.random_bool(edge_prob) {
                g.add_edge(u, v);
            }
        }
        modulator.insert(v);
    }
    (g, modulator)
}

/// Random threshold construction sequence of length `n`. With
/// `force_connected`, the last step is universal so the result has a
/// universal vertex.
pub fn random_threshold_steps(n: usize, seed: u64, force_connected: bool) -> Vec<ThresholdStep> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq: Vec<ThresholdStep> = (0..n)
        .map(|_| {
            if rng.random_bool(0.5) {
                ThresholdStep::Isolated
            } else {
                ThresholdStep::Universal
            }
        })
        .collect();
    if force_connected && n > 1 {
        *seq.last_mut().unwrap() = ThresholdStep::Universal;
    }
    seq
}

/// Random graph on `n` vertices with independent edge probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random split graph: `clique_size` mutually adjacent vertices, the rest
/// independent, with each clique-independent pair joined with probability
/// `cross_prob`. Clique vertices take the low ids.
pub fn random_split_graph(
    clique_size: usize,
    independent_size: usize,
    cross_prob: f64,
    seed: u64,
) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = clique_size + independent_size;
    let mut g = Graph::new(n);
    for u in 0..clique_size {
        for v in (u + 1)..clique_size {
            g.add_edge(u, v);
        }
    }
    for u in 0..clique_size {
        for v in clique_size..n {
            if rng.random_bool(cross_prob) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// All threshold construction sequences of length `n` (the first step is
/// fixed). 2^(n-1) sequences.
pub fn all_threshold_sequences(n: usize) -> Vec<Vec<ThresholdStep>> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0u64..(1 << (n - 1)) {
        let mut seq = vec![ThresholdStep::Isolated];
        for i in 0..(n - 1) {
            seq.push(if (mask >> i) & 1 == 1 {
                ThresholdStep::Universal
            } else {
                ThresholdStep::Isolated
            });
        }
        out.push(seq);
    }
    out
}

/// Uniform usize in `0..bound` from a caller-owned rng (convenience for
/// corpus builders).
pub fn rng_below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    rng.random_range(0..bound)
}
