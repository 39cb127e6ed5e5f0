//! List coloring on split graphs: the clique-enumeration solver and the
//! independent-set reduction used as a hard-instance generator, with an
//! executable equivalence check.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{is_proper, Color, Coloring, Graph, ListAssignment, Vertex};
use crate::oracle::{oracle_independent_set, oracle_list_raw, OracleBudget};
use crate::recognize::SplitPartition;
use crate::Error;

/// A list-coloring instance on a split graph. `k` is the parameter: the
/// nominal bound on list contents and on the clique side.
#[derive(Clone, Debug)]
pub struct ListInstance {
    graph: Graph,
    partition: SplitPartition,
    lists: ListAssignment,
    k: usize,
}

impl ListInstance {
    pub fn new(
        graph: Graph,
        partition: SplitPartition,
        lists: ListAssignment,
        k: usize,
    ) -> Result<Self, Error> {
        if !partition.is_valid(&graph) {
            return Err(Error::InvalidInstance(
                "partition is not a split partition of the graph".into(),
            ));
        }
        if lists.vertex_count() != graph.vertex_count() {
            return Err(Error::InvalidInstance(format!(
                "list assignment covers {} vertices, graph has {}",
                lists.vertex_count(),
                graph.vertex_count()
            )));
        }
        Ok(ListInstance {
            graph,
            partition,
            lists,
            k,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn partition(&self) -> &SplitPartition {
        &self.partition
    }

    pub fn lists(&self) -> &ListAssignment {
        &self.lists
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// List coloring on a split graph: enumerate proper clique colorings from
/// the lists (vertices by id, colors ascending), then extend greedily over
/// the independent side. In a split graph an independent vertex constrains
/// only against the clique, so a blocked vertex prunes the whole branch and
/// no backtracking over the independent side is needed.
pub fn solve_list_split(inst: &ListInstance) -> Result<Option<Coloring>, Error> {
    let g = inst.graph();
    let lists = inst.lists();
    for v in g.vertices() {
        if lists.list(v).is_empty() {
            return Err(Error::InvalidInstance(format!(
                "vertex {v} has an empty color list"
            )));
        }
    }
    let clique = &inst.partition().clique;
    let independent = &inst.partition().independent;

    // parameterized rejection: with lists inside [k], a clique larger than k
    // cannot be colored; with larger palettes fall back to the pigeonhole
    // bound on the union of clique lists
    if lists.max_color() <= inst.k() && clique.len() > inst.k() {
        return Ok(None);
    }
    let clique_palette: BTreeSet<Color> = clique
        .iter()
        .flat_map(|&v| lists.list(v).iter().copied())
        .collect();
    if clique.len() > clique_palette.len() {
        return Ok(None);
    }

    let mut assignment: BTreeMap<Vertex, Color> = BTreeMap::new();
    let result = color_clique(g, lists, clique, independent, 0, &mut assignment);
    if let Some(c) = &result {
        assert!(
            is_proper(g, c) == Ok(true) && lists.respects(c),
            "list solver produced an invalid coloring"
        );
    }
    Ok(result)
}

fn color_clique(
    g: &Graph,
    lists: &ListAssignment,
    clique: &[Vertex],
    independent: &[Vertex],
    idx: usize,
    assignment: &mut BTreeMap<Vertex, Color>,
) -> Option<Coloring> {
    if idx == clique.len() {
        return extend_independent(g, lists, independent, assignment);
    }
    let v = clique[idx];
    for &c in lists.list(v) {
        let conflict = g
            .neighbors(v)
            .iter()
            .any(|u| assignment.get(u) == Some(&c));
        if conflict {
            continue;
        }
        assignment.insert(v, c);
        if let Some(full) = color_clique(g, lists, clique, independent, idx + 1, assignment) {
            return Some(full);
        }
        assignment.remove(&v);
    }
    None
}

fn extend_independent(
    g: &Graph,
    lists: &ListAssignment,
    independent: &[Vertex],
    clique_assignment: &BTreeMap<Vertex, Color>,
) -> Option<Coloring> {
    let mut full = clique_assignment.clone();
    for &v in independent {
        let blocked: BTreeSet<Color> = g
            .neighbors(v)
            .iter()
            .filter_map(|u| full.get(u).copied())
            .collect();
        match lists.list(v).iter().find(|c| !blocked.contains(c)) {
            Some(&c) => {
                full.insert(v, c);
            }
            None => return None,
        }
    }
    Some(Coloring::from_map(full))
}

/// Output of the independent-set reduction: a split graph with one clique
/// vertex per original vertex and one independent vertex per original edge,
/// plus the lists making list colorability encode an independent set of
/// size `k`.
#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub lists: ListAssignment,
    pub partition: SplitPartition,
    pub k: usize,
    /// Original vertex v maps to clique vertex `clique_of_vertex[v]`.
    pub clique_of_vertex: Vec<Vertex>,
    /// Original edge (u, v) maps to its independent vertex.
    pub independent_of_edge: Vec<((Vertex, Vertex), Vertex)>,
}

/// Builds the split graph H for an independent-set instance (g, k): clique
/// vertices get full lists [n], edge vertices get {k+1..n} and connect to
/// every clique vertex except the two endpoints of their edge. H is list
/// colorable iff g has an independent set of size k.
pub fn reduce_is_to_listcolor(g: &Graph, k: usize) -> Result<ReductionOutput, Error> {
    let n = g.vertex_count();
    if k == 0 || k > n {
        return Err(Error::InvalidInstance(format!(
            "independent-set size {k} outside 1..={n}"
        )));
    }
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let m = edges.len();
    let mut h = Graph::new(n + m);
    for u in 0..n {
        for v in (u + 1)..n {
            h.add_edge(u, v);
        }
    }
    let mut independent_of_edge = Vec::with_capacity(m);
    for (i, &(u, v)) in edges.iter().enumerate() {
        let iv = n + i;
        for w in 0..n {
            if w != u && w != v {
                h.add_edge(w, iv);
            }
        }
        independent_of_edge.push(((u, v), iv));
    }
    let full: BTreeSet<Color> = (1..=n).collect();
    let tail: BTreeSet<Color> = (k + 1..=n).collect();
    let mut lists = Vec::with_capacity(n + m);
    lists.extend(std::iter::repeat_n(full, n));
    lists.extend(std::iter::repeat_n(tail, m));
    Ok(ReductionOutput {
        graph: h,
        lists: ListAssignment::new(lists),
        partition: SplitPartition {
            clique: (0..n).collect(),
            independent: (n..n + m).collect(),
        },
        k,
        clique_of_vertex: (0..n).collect(),
        independent_of_edge,
    })
}

/// Test harness: checks that (g, k) has an independent set of size k
/// exactly when the reduced instance is list colorable, by running both
/// exhaustive reference searches. Intended for small instances only.
pub fn equivalence_check(g: &Graph, k: usize, budget: &OracleBudget) -> Result<bool, Error> {
    let red = reduce_is_to_listcolor(g, k)?;
    let has_is = oracle_independent_set(g, k, budget)?.is_some();
    let colorable = oracle_list_raw(&red.graph, &red.lists, budget)?.is_some();
    Ok(has_is == colorable)
}
