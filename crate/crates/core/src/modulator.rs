//! Bounded-search-tree computation of deletion sets (modulators) into the
//! threshold and clique graph classes.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};
use crate::recognize::{find_forbidden_witness, recognize_threshold};

/// Graph class a modulator deletes into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetClass {
    Threshold,
    Clique,
}

/// A vertex set whose deletion lands in `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Modulator {
    pub vertices: BTreeSet<Vertex>,
    pub target: TargetClass,
}

impl Modulator {
    /// Re-checks that deleting the set yields the target class.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (sub, _) = g.remove_vertices(&self.vertices);
        match self.target {
            TargetClass::Threshold => recognize_threshold(&sub).is_accept(),
            TargetClass::Clique => {
                let vs: Vec<Vertex> = sub.vertices().collect();
                sub.is_clique(&vs)
            }
        }
    }
}

/// Finds a set of at most `k` vertices whose deletion leaves a threshold
/// graph, or `None` if no such set exists. Branches on the four vertices of
/// the lexicographically first forbidden witness; the result is valid but
/// not necessarily minimum.
pub fn threshold_modulator(g: &Graph, k: usize) -> Option<Modulator> {
    fn search(g: &Graph, removed: &mut BTreeSet<Vertex>, budget: usize) -> bool {
        let alive: Vec<Vertex> = g.vertices().filter(|v| !removed.contains(v)).collect();
        let witness = match find_forbidden_witness_alive(g, &alive) {
            None => return true,
            Some(w) => w,
        };
        if budget == 0 {
            return false;
        }
        for &v in &witness {
            removed.insert(v);
            if search(g, removed, budget - 1) {
                return true;
            }
            removed.remove(&v);
        }
        false
    }

    // Branching needs the witness in scan order, not shape order, so the
    // search tree is reproducible.
    fn find_forbidden_witness_alive(g: &Graph, alive: &[Vertex]) -> Option<[Vertex; 4]> {
        find_forbidden_witness(g, alive).map(|w| {
            let mut vs = w.vertices;
            vs.sort_unstable();
            vs
        })
    }

    // budgets in increasing order, so the result is smallest possible
    for budget in 0..=k {
        let mut removed = BTreeSet::new();
        if search(g, &mut removed, budget) {
            return Some(Modulator {
                vertices: removed,
                target: TargetClass::Threshold,
            });
        }
    }
    None
}

/// Finds a set of at most `k` vertices whose deletion leaves a clique
/// (a vertex cover of the complement), or `None`. Branches on the
/// lexicographically first non-adjacent pair.
pub fn clique_modulator(g: &Graph, k: usize) -> Option<Modulator> {
    fn first_nonedge(g: &Graph, removed: &BTreeSet<Vertex>) -> Option<(Vertex, Vertex)> {
        let alive: Vec<Vertex> = g.vertices().filter(|v| !removed.contains(v)).collect();
        for (i, &u) in alive.iter().enumerate() {
            for &v in &alive[i + 1..] {
                if !g.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    fn search(g: &Graph, removed: &mut BTreeSet<Vertex>, budget: usize) -> bool {
        let (u, v) = match first_nonedge(g, removed) {
            None => return true,
            Some(p) => p,
        };
        if budget == 0 {
            return false;
        }
        for w in [u, v] {
            removed.insert(w);
            if search(g, removed, budget - 1) {
                return true;
            }
            removed.remove(&w);
        }
        false
    }

    // increasing budgets make the answer a minimum vertex cover of the
    // complement whenever k is large enough
    for budget in 0..=k {
        let mut removed = BTreeSet::new();
        if search(g, &mut removed, budget) {
            return Some(Modulator {
                vertices: removed,
                target: TargetClass::Clique,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_graph_needs_empty_modulator() {
        let g = Graph::complete(4);
        let m = threshold_modulator(&g, 0).unwrap();
        assert!(m.vertices.is_empty());
        assert!(m.is_valid(&g));
    }

    #[test]
    fn p4_single_deletion() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let m = threshold_modulator(&g, 1).unwrap();
        assert_eq!(m.vertices.len(), 1);
        assert!(m.is_valid(&g));
        // every single deletion of P4 leaves a threshold graph
        for v in 0..4 {
            let x = BTreeSet::from([v]);
            let (sub, _) = g.remove_vertices(&x);
            assert!(recognize_threshold(&sub).is_accept());
        }
    }

    #[test]
    fn two_disjoint_p4s_need_three() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        edges.extend([(4, 5), (5, 6), (6, 7)]);
        let g = Graph::from_edges(8, edges);
        assert!(threshold_modulator(&g, 1).is_none());
        // edges surviving in both components form a 2K2, so one side must
        // lose all its edges: two deletions there plus one for the other P4
        assert!(threshold_modulator(&g, 2).is_none());
        let m = threshold_modulator(&g, 3).unwrap();
        assert!(m.is_valid(&g));
    }

    #[test]
    fn clique_modulator_examples() {
        let k5 = Graph::complete(5);
        assert!(clique_modulator(&k5, 0).unwrap().vertices.is_empty());

        // K5 minus one edge
        let mut g = Graph::new(5);
        for u in 0..5 {
            for v in (u + 1)..5 {
                if !(u == 0 && v == 1) {
                    g.add_edge(u, v);
                }
            }
        }
        let m = clique_modulator(&g, 1).unwrap();
        assert_eq!(m.vertices.len(), 1);
        assert!(m.vertices.contains(&0) || m.vertices.contains(&1));
        assert!(m.is_valid(&g));

        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(clique_modulator(&two_k2, 1).is_none());
        assert!(clique_modulator(&two_k2, 2).is_some());
    }
}
