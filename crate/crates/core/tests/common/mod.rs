//! Shared corpus builders and independent reference checks for the
//! integration tests. Everything here is seeded and deterministic.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fptcolor::generate::{all_threshold_sequences, gen_perturbed, gen_threshold, random_graph};
use fptcolor::graph::{Color, Graph, ListAssignment, Vertex};
use fptcolor::io::parse_dimacs;
use fptcolor::precolor::PrecolorInstance;
use fptcolor::recognize::SplitPartition;
use fptcolor::EquitableInstance;

pub const FIG_DIMACS: &str = "p edge 7 12\n\
e 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n\
e 5 1\ne 6 1\ne 6 2\ne 7 1\ne 7 2\ne 7 3\n";

pub fn fig_graph() -> Graph {
    parse_dimacs(FIG_DIMACS).unwrap()
}

/// Every threshold construction sequence of length 1..=n, realized.
pub fn all_threshold_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|m| {
            all_threshold_sequences(m)
                .into_iter()
                .map(|seq| gen_threshold(&seq).unwrap())
        })
        .collect()
}

/// Mixed random-graph corpus: all labeled graphs on up to 4 vertices plus
/// seeded random graphs on 1..=8 vertices across several densities.
pub fn recognition_corpus(random_count: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges));
        }
    }
    let densities = [0.15, 0.3, 0.5, 0.7, 0.85];
    let mut seed = 1000;
    let mut randoms = 0usize;
    while randoms < random_count {
        for n in 1..=8 {
            for &p in &densities {
                out.push(random_graph(n, p, seed));
                seed += 1;
                randoms += 1;
            }
        }
    }
    out
}

/// Independent forbidden-subgraph scan: checks every 4-subset against the
/// three bad shapes via a precomputed table of edge masks (all orderings of
/// P4, C4 and 2K2 on four labeled vertices).
pub struct ForbiddenScan {
    bad_masks: BTreeSet<u8>,
}

impl ForbiddenScan {
    pub fn new() -> Self {
        let patterns: [&[(usize, usize)]; 3] = [
            &[(0, 1), (1, 2), (2, 3)],         // path
            &[(0, 1), (1, 2), (2, 3), (3, 0)], // cycle
            &[(0, 1), (2, 3)],                 // two disjoint edges
        ];
        let perms = permutations_of_four();
        let mut bad_masks = BTreeSet::new();
        for pat in patterns {
            for perm in &perms {
                let mut mask = 0u8;
                for &(a, b) in pat {
                    mask |= 1 << pair_bit(perm[a], perm[b]);
                }
                bad_masks.insert(mask);
            }
        }
        ForbiddenScan { bad_masks }
    }

    /// True iff `g` contains an induced P4, C4 or 2K2.
    pub fn has_forbidden(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let q = [a, b, c, d];
                        let mut mask = 0u8;
                        for i in 0..4 {
                            for j in (i + 1)..4 {
                                if g.has_edge(q[i], q[j]) {
                                    mask |= 1 << pair_bit(i, j);
                                }
                            }
                        }
                        if self.bad_masks.contains(&mask) {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

fn pair_bit(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!(),
    }
}

fn permutations_of_four() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Pairwise neighborhood containment: N(x) ⊆ N[y] or N(y) ⊆ N[x].
pub fn containment_property_holds(g: &Graph) -> bool {
    let n = g.vertex_count();
    let closed = |v: Vertex| -> BTreeSet<Vertex> {
        let mut s: BTreeSet<Vertex> = g.neighbors(v).iter().copied().collect();
        s.insert(v);
        s
    };
    for x in 0..n {
        for y in (x + 1)..n {
            let nx: BTreeSet<Vertex> = g.neighbors(x).iter().copied().collect();
            let ny: BTreeSet<Vertex> = g.neighbors(y).iter().copied().collect();
            if !nx.is_subset(&closed(y)) && !ny.is_subset(&closed(x)) {
                return false;
            }
        }
    }
    true
}

/// Random precoloring-extension instance: a perturbed clique with a known
/// modulator, a random budget and a random proper precoloring.
pub fn random_precolor_instance(seed: u64) -> PrecolorInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = rng.random_range(1..=8usize);
    let k = rng.random_range(0..=3usize);
    let p = [0.3, 0.6, 0.9][rng.random_range(0..3usize)];
    let (g, x) = gen_perturbed(&Graph::complete(base_n), k, p, rng.random());
    let n = g.vertex_count();
    let r = rng.random_range(1..=n);
    let mut precolor: BTreeMap<Vertex, Color> = BTreeMap::new();
    for v in 0..n {
        if rng.random_bool(0.35) {
            let blocked: BTreeSet<Color> = g
                .neighbors(v)
                .iter()
                .filter_map(|u| precolor.get(u).copied())
                .collect();
            let open: Vec<Color> = (1..=r).filter(|c| !blocked.contains(c)).collect();
            if !open.is_empty() {
                let c = open[rng.random_range(0..open.len())];
                precolor.insert(v, c);
            }
        }
    }
    PrecolorInstance::new(g, x, r, precolor).unwrap()
}

/// Random equitable instance over a perturbed threshold base. Bases mix
/// connected and disconnected threshold graphs.
pub fn random_equitable_instance(seed: u64, force_connected_base: bool) -> EquitableInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base_n = rng.random_range(3..=6usize);
    let k = rng.random_range(0..=2usize);
    let p = [0.2, 0.5, 0.8][rng.random_range(0..3usize)];
    let mut steps = fptcolor::generate::random_threshold_steps(
        base_n,
        rng.random(),
        force_connected_base,
    );
    if force_connected_base && base_n > 1 {
        *steps.last_mut().unwrap() = fptcolor::ThresholdStep::Universal;
    }
    let base = gen_threshold(&steps).unwrap();
    let (g, x) = gen_perturbed(&base, k, p, rng.random());
    let n = g.vertex_count();
    let r = rng.random_range(1..=n);
    EquitableInstance::new(g, r, x).unwrap()
}

/// Random split-graph list instance with palette 1..=4.
pub fn random_split_list_instance(seed: u64) -> (Graph, SplitPartition, ListAssignment, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c_size = rng.random_range(1..=4usize);
    let i_size = rng.random_range(0..=(8 - c_size).min(5));
    let p = [0.3, 0.6][rng.random_range(0..2usize)];
    let g = fptcolor::generate::random_split_graph(c_size, i_size, p, rng.random());
    let n = g.vertex_count();
    let lists: Vec<BTreeSet<Color>> = (0..n)
        .map(|_| {
            let mut l = BTreeSet::new();
            while l.is_empty() {
                for c in 1..=4usize {
                    if rng.random_bool(0.5) {
                        l.insert(c);
                    }
                }
            }
            l
        })
        .collect();
    let partition = SplitPartition {
        clique: (0..c_size).collect(),
        independent: (c_size..n).collect(),
    };
    (g, partition, ListAssignment::new(lists), 4)
}
