//! Undirected simple graphs with dense 0-based vertex ids, plus the coloring
//! and list-assignment types shared by every solver.

use std::collections::{BTreeMap, BTreeSet};

use crate::Error;

/// Dense 0-based vertex id.
pub type Vertex = usize;

/// 1-based color id. Color 0 is never valid.
pub type Color = usize;

/// An undirected simple graph. Adjacency lists are kept sorted and
/// deduplicated; the structure is immutable once built (all queries take
/// `&self`), so graphs can be shared freely across concurrent solver runs.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Inserts the undirected edge `uv`. Self-loops and duplicates are
    /// ignored rather than stored, keeping the graph simple.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u < self.adj.len() && v < self.adj.len(), "vertex out of range");
        if u == v {
            return;
        }
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos_v = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos_v, u);
        }
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted open neighborhood N(v).
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.adj.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// True iff some vertex is adjacent to every other vertex.
    pub fn has_universal_vertex(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.adj.iter().any(|a| a.len() == n - 1)
    }

    /// Subgraph induced by deleting `removed`, together with the map from
    /// new ids back to the original ids (sorted ascending).
    pub fn remove_vertices(&self, removed: &BTreeSet<Vertex>) -> (Graph, Vec<Vertex>) {
        let kept: Vec<Vertex> = self.vertices().filter(|v| !removed.contains(v)).collect();
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(kept.len());
        for (i, &v) in kept.iter().enumerate() {
            for &w in self.neighbors(v) {
                if index[w] != usize::MAX && index[w] > i {
                    g.add_edge(i, index[w]);
                }
            }
        }
        (g, kept)
    }

    /// Checks that `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Checks that `set` is pairwise non-adjacent.
    pub fn is_independent_set(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Debug check of the representation invariants (symmetry,
    /// irreflexivity, sortedness, no duplicates).
    pub fn check_invariants(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, nbrs)| {
            nbrs.windows(2).all(|w| w[0] < w[1])
                && nbrs
                    .iter()
                    .all(|&v| v != u && v < self.adj.len() && self.adj[v].binary_search(&u).is_ok())
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.vertex_count(), self.edge_count())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        write!(f, ")")
    }
}

/// A (possibly partial) assignment of vertices to 1-based colors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<Vertex, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Coloring::default()
    }

    pub fn from_map(assignment: BTreeMap<Vertex, Color>) -> Self {
        assert!(assignment.values().all(|&c| c >= 1), "colors are 1-based");
        Coloring { assignment }
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        assert!(c >= 1, "colors are 1-based");
        self.assignment.insert(v, c);
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    pub fn is_total(&self, g: &Graph) -> bool {
        g.vertices().all(|v| self.assignment.contains_key(&v))
    }

    /// Distinct colors in use.
    pub fn colors_used(&self) -> BTreeSet<Color> {
        self.assignment.values().copied().collect()
    }

    /// Sizes of the nonempty color classes, keyed by color.
    pub fn class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut sizes = BTreeMap::new();
        for &c in self.assignment.values() {
            *sizes.entry(c).or_insert(0) += 1;
        }
        sizes
    }
}

/// True iff the total coloring `c` gives adjacent vertices different colors.
///
/// Errors if some vertex of `g` is uncolored.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, Error> {
    for v in g.vertices() {
        if c.get(v).is_none() {
            return Err(Error::PartialColoring(v));
        }
    }
    Ok(g.edges().all(|(u, v)| c.get(u) != c.get(v)))
}

/// Per-vertex lists of permitted colors, total over the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<Color>>,
}

impl ListAssignment {
    /// One list per vertex, indexed by vertex id. Lists may be empty here;
    /// the file parser and the solvers enforce non-emptiness where required.
    pub fn new(lists: Vec<BTreeSet<Color>>) -> Self {
        ListAssignment { lists }
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: Vertex) -> &BTreeSet<Color> {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BTreeSet<Color>] {
        &self.lists
    }

    /// Largest color id mentioned in any list, or 0 if all lists are empty.
    pub fn max_color(&self) -> Color {
        self.lists
            .iter()
            .filter_map(|l| l.iter().next_back().copied())
            .max()
            .unwrap_or(0)
    }

    /// True iff `c` assigns every vertex a color from its list.
    pub fn respects(&self, c: &Coloring) -> bool {
        (0..self.lists.len()).all(|v| match c.get(v) {
            Some(col) => self.lists[v].contains(&col),
            None => false,
        })
    }
}
