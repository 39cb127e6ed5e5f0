//! Threshold and split graph recognition with certificates.
//!
//! A graph is threshold iff it can be peeled down to nothing by repeatedly
//! removing an isolated or universal vertex, iff it has no induced P4, C4 or
//! 2K2. Acceptance yields a replayable construction sequence; rejection
//! yields a four-vertex witness.

use crate::generate::ThresholdStep;
use crate::graph::{Graph, Vertex};
use crate::Error;

/// Which forbidden induced subgraph a witness forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForbiddenKind {
    P4,
    C4,
    TwoK2,
}

impl std::fmt::Display for ForbiddenKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ForbiddenKind::P4 => write!(f, "P4"),
            ForbiddenKind::C4 => write!(f, "C4"),
            ForbiddenKind::TwoK2 => write!(f, "2K2"),
        }
    }
}

/// Four vertices inducing a forbidden subgraph, ordered by shape:
/// path order for P4, cycle order for C4, edge pairs (a,b),(c,d) for 2K2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: [Vertex; 4],
}

impl ForbiddenWitness {
    /// Re-checks that the four vertices induce the claimed shape in `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.vertices;
        let mut all = [a, b, c, d];
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let e = |x: Vertex, y: Vertex| g.has_edge(x, y);
        match self.kind {
            ForbiddenKind::P4 => {
                e(a, b) && e(b, c) && e(c, d) && !e(a, c) && !e(a, d) && !e(b, d)
            }
            ForbiddenKind::C4 => {
                e(a, b) && e(b, c) && e(c, d) && e(d, a) && !e(a, c) && !e(b, d)
            }
            ForbiddenKind::TwoK2 => {
                e(a, b) && e(c, d) && !e(a, c) && !e(a, d) && !e(b, c) && !e(b, d)
            }
        }
    }
}

/// Result of threshold recognition: a construction sequence on acceptance or
/// a forbidden-subgraph witness on rejection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThresholdCertificate {
    /// Vertices in construction order with the step that introduced each.
    /// Replaying on the same ids reproduces the graph exactly.
    Construction(Vec<(Vertex, ThresholdStep)>),
    Witness(ForbiddenWitness),
}

impl ThresholdCertificate {
    pub fn is_accept(&self) -> bool {
        matches!(self, ThresholdCertificate::Construction(_))
    }
}

/// Rebuilds the graph described by a construction sequence over the original
/// vertex ids: a universal step connects its vertex to all earlier ones.
pub fn replay_construction(n: usize, steps: &[(Vertex, ThresholdStep)]) -> Graph {
    let mut g = Graph::new(n);
    for (i, &(v, step)) in steps.iter().enumerate() {
        if step == ThresholdStep::Universal {
            for &(u, _) in &steps[..i] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Classifies the subgraph induced by four sorted vertices, returning a
/// shape-ordered witness if it is P4, C4 or 2K2.
fn classify_four(g: &Graph, q: [Vertex; 4]) -> Option<ForbiddenWitness> {
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(6);
    for i in 0..4 {
        for j in (i + 1)..4 {
            if g.has_edge(q[i], q[j]) {
                edges.push((i, j));
            }
        }
    }
    let mut deg = [0usize; 4];
    for &(i, j) in &edges {
        deg[i] += 1;
        deg[j] += 1;
    }
    match edges.len() {
        2 => {
            // 2K2 iff the two edges share no endpoint
            let (a, b) = edges[0];
            let (c, d) = edges[1];
            if a != c && a != d && b != c && b != d {
                Some(ForbiddenWitness {
                    kind: ForbiddenKind::TwoK2,
                    vertices: [q[a], q[b], q[c], q[d]],
                })
            } else {
                None
            }
        }
        3 => {
            // P4 iff degrees are 1,1,2,2 (the only 3-edge graph with that multiset)
            let mut sorted = deg;
            sorted.sort_unstable();
            if sorted != [1, 1, 2, 2] {
                return None;
            }
            let a = (0..4).find(|&i| deg[i] == 1).unwrap();
            let mut path = vec![a];
            while path.len() < 4 {
                let last = *path.last().unwrap();
                let next = (0..4)
                    .find(|&j| {
                        !path.contains(&j)
                            && edges.iter().any(|&(x, y)| {
                                (x == last && y == j) || (y == last && x == j)
                            })
                    })
                    .unwrap();
                path.push(next);
            }
            Some(ForbiddenWitness {
                kind: ForbiddenKind::P4,
                vertices: [q[path[0]], q[path[1]], q[path[2]], q[path[3]]],
            })
        }
        4 => {
            // C4 iff 2-regular
            if deg != [2, 2, 2, 2] {
                return None;
            }
            let mut cycle = vec![0usize];
            while cycle.len() < 4 {
                let last = *cycle.last().unwrap();
                let next = (0..4)
                    .find(|&j| {
                        !cycle.contains(&j)
                            && edges.iter().any(|&(x, y)| {
                                (x == last && y == j) || (y == last && x == j)
                            })
                    })
                    .unwrap();
                cycle.push(next);
            }
            Some(ForbiddenWitness {
                kind: ForbiddenKind::C4,
                vertices: [q[cycle[0]], q[cycle[1]], q[cycle[2]], q[cycle[3]]],
            })
        }
        _ => None,
    }
}

/// Lexicographically first 4-subset of `candidates` (sorted) inducing a
/// forbidden subgraph in `g`, or `None` if there is none.
pub fn find_forbidden_witness(g: &Graph, candidates: &[Vertex]) -> Option<ForbiddenWitness> {
    let m = candidates.len();
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                for d in (c + 1)..m {
                    let q = [candidates[a], candidates[b], candidates[c], candidates[d]];
                    if let Some(w) = classify_four(g, q) {
                        return Some(w);
                    }
                }
            }
        }
    }
    None
}

/// Recognizes threshold graphs by peeling isolated and universal vertices
/// (lowest id first, isolated before universal). On acceptance the reversed
/// peel order is returned as a construction; on rejection a witness is
/// extracted from the stuck residual.
pub fn recognize_threshold(g: &Graph) -> ThresholdCertificate {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive_count = n;
    let mut peeled: Vec<(Vertex, ThresholdStep)> = Vec::with_capacity(n);

    while alive_count > 0 {
        let iso = (0..n).find(|&v| alive[v] && deg[v] == 0);
        let pick = match iso {
            Some(v) => Some((v, ThresholdStep::Isolated)),
            None => (0..n)
                .find(|&v| alive[v] && deg[v] == alive_count - 1)
                .map(|v| (v, ThresholdStep::Universal)),
        };
        match pick {
            Some((v, step)) => {
                alive[v] = false;
                alive_count -= 1;
                for &u in g.neighbors(v) {
                    if alive[u] {
                        deg[u] -= 1;
                    }
                }
                peeled.push((v, step));
            }
            None => {
                let residual: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
                let w = find_forbidden_witness(g, &residual)
                    .expect("a stuck residual must contain a forbidden subgraph");
                return ThresholdCertificate::Witness(w);
            }
        }
    }
    peeled.reverse();
    ThresholdCertificate::Construction(peeled)
}

/// A partition of the vertex set into a clique and an independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    /// Clique side, sorted by id. For graphs recognized here this is a
    /// maximum clique (degree characterization).
    pub clique: Vec<Vertex>,
    /// Independent side, sorted by id.
    pub independent: Vec<Vertex>,
}

impl SplitPartition {
    /// Checks the partition against `g`: disjoint cover, clique side
    /// complete, independent side edgeless.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        for &v in self.clique.iter().chain(self.independent.iter()) {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        seen.iter().all(|&s| s)
            && g.is_clique(&self.clique)
            && g.is_independent_set(&self.independent)
    }
}

/// Splits `g` into a clique and an independent set via the degree-sequence
/// characterization, or `None` if `g` is not a split graph. Ties in the
/// degree order break by vertex id.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(SplitPartition {
            clique: Vec::new(),
            independent: Vec::new(),
        });
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    // largest m with d_m >= m-1 (1-based)
    let mut m = 0;
    for i in 1..=n {
        if degs[i - 1] >= i - 1 {
            m = i;
        }
    }
    let head: usize = degs[..m].iter().sum();
    let tail: usize = degs[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let mut clique: Vec<Vertex> = order[..m].to_vec();
    let mut independent: Vec<Vertex> = order[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let p = SplitPartition { clique, independent };
    assert!(p.is_valid(g), "degree characterization produced a bad split");
    Some(p)
}

fn subset_of(a: &[Vertex], b: &[Vertex]) -> bool {
    // both sorted
    let mut it = b.iter();
    'outer: for &x in a {
        for &y in it.by_ref() {
            match y.cmp(&x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn closed_neighborhood(g: &Graph, v: Vertex) -> Vec<Vertex> {
    let mut nb = g.neighbors(v).to_vec();
    let pos = nb.binary_search(&v).unwrap_err();
    nb.insert(pos, v);
    nb
}

/// Orders a threshold graph's clique by shrinking closed neighborhoods and
/// its independent set by growing open neighborhoods, verifying the chains.
/// Degree order (descending / ascending, id tiebreak) realizes both.
pub fn containment_order(
    g: &Graph,
    p: &SplitPartition,
) -> Result<(Vec<Vertex>, Vec<Vertex>), Error> {
    let mut clique = p.clique.clone();
    clique.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut independent = p.independent.clone();
    independent.sort_by_key(|&v| (g.degree(v), v));

    for w in clique.windows(2) {
        if !subset_of(&closed_neighborhood(g, w[1]), &closed_neighborhood(g, w[0])) {
            return Err(Error::NotThreshold);
        }
    }
    for w in independent.windows(2) {
        if !subset_of(g.neighbors(w[0]), g.neighbors(w[1])) {
            return Err(Error::NotThreshold);
        }
    }
    Ok((clique, independent))
}
