//! Integral bipartite maximum matching (Hopcroft–Karp) and maximum flow
//! (Dinic). Scan orders are deterministic (lowest id first) so solver
//! output built on these subroutines is reproducible.

use std::collections::{BTreeSet, VecDeque};

/// A bipartite graph given by side sizes and edges between them.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            left,
            right,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.left && r < self.right, "endpoint out of range");
        self.edges.insert((l, r));
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }
}

/// Maximum-cardinality matching, returned as sorted (left, right) pairs.
pub fn max_matching(b: &BipartiteGraph) -> Vec<(usize, usize)> {
    let mut adj = vec![Vec::new(); b.left];
    for (l, r) in b.edges() {
        adj[l].push(r);
    }

    const FREE: usize = usize::MAX;
    let mut match_left = vec![FREE; b.left];
    let mut match_right = vec![FREE; b.right];

    loop {
        // BFS layering from free left vertices
        let mut dist = vec![usize::MAX; b.left];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for l in 0..b.left {
            if match_left[l] == FREE {
                dist[l] = 0;
                queue.push_back(l);
            }
        }
        let mut found_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                match match_right[r] {
                    FREE => found_free_right = true,
                    l2 => {
                        if dist[l2] == usize::MAX {
                            dist[l2] = dist[l] + 1;
                            queue.push_back(l2);
                        }
                    }
                }
            }
        }
        if !found_free_right {
            break;
        }

        fn augment(
            l: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            match_left: &mut [usize],
            match_right: &mut [usize],
        ) -> bool {
            for i in 0..adj[l].len() {
                let r = adj[l][i];
                let l2 = match_right[r];
                if l2 == FREE
                    || (dist[l2] == dist[l] + 1
                        && augment(l2, adj, dist, match_left, match_right))
                {
                    match_left[l] = r;
                    match_right[r] = l;
                    return true;
                }
            }
            dist[l] = usize::MAX;
            false
        }

        let mut progressed = false;
        for l in 0..b.left {
            if match_left[l] == FREE
                && dist[l] == 0
                && augment(l, &adj, &mut dist, &mut match_left, &mut match_right)
            {
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }

    (0..b.left)
        .filter(|&l| match_left[l] != FREE)
        .map(|l| (l, match_left[l]))
        .collect()
}

/// An integral-capacity flow network. Arcs are directed.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, usize)>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes && source != sink);
        FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        }
    }

    /// Adds an arc and returns its index (flows are reported per index).
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: usize) -> usize {
        assert!(from < self.nodes && to < self.nodes);
        self.arcs.push((from, to, capacity));
        self.arcs.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[(usize, usize, usize)] {
        &self.arcs
    }
}

/// Value and per-arc flows of a maximum flow.
#[derive(Clone, Debug)]
pub struct MaxFlowResult {
    pub value: usize,
    /// Flow on each arc, indexed as returned by `add_arc`.
    pub arc_flows: Vec<usize>,
}

impl MaxFlowResult {
    /// Source side of a minimum cut: the nodes reachable from the source in
    /// the residual graph of this flow. The arcs leaving the set have
    /// capacity summing to `value`.
    pub fn min_cut(&self, net: &FlowNetwork) -> BTreeSet<usize> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); net.nodes];
        for (i, &(from, to, cap)) in net.arcs.iter().enumerate() {
            if self.arc_flows[i] < cap {
                adj[from].push((to, 0));
            }
            if self.arc_flows[i] > 0 {
                adj[to].push((from, 0));
            }
        }
        let mut seen = BTreeSet::from([net.source]);
        let mut queue = VecDeque::from([net.source]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

struct DinicEdge {
    to: usize,
    cap: usize,
    rev: usize,
}

/// Maximum flow via Dinic's algorithm. Integral capacities give integral
/// flows; conservation holds at every non-terminal node.
pub fn max_flow(net: &FlowNetwork) -> MaxFlowResult {
    let n = net.nodes;
    let mut graph: Vec<Vec<DinicEdge>> = (0..n).map(|_| Vec::new()).collect();
    // arc i lives at graph[from][arc_pos[i]]
    let mut arc_pos = Vec::with_capacity(net.arcs.len());
    for &(from, to, cap) in &net.arcs {
        let pos_fwd = graph[from].len();
        let pos_bwd = graph[to].len() + usize::from(from == to);
        graph[from].push(DinicEdge {
            to,
            cap,
            rev: pos_bwd,
        });
        graph[to].push(DinicEdge {
            to: from,
            cap: 0,
            rev: pos_fwd,
        });
        arc_pos.push((from, pos_fwd, cap));
    }

    let mut level = vec![-1i64; n];
    let mut iter = vec![0usize; n];
    let mut value = 0usize;

    loop {
        level.iter_mut().for_each(|l| *l = -1);
        level[net.source] = 0;
        let mut queue = VecDeque::from([net.source]);
        while let Some(u) = queue.pop_front() {
            for e in &graph[u] {
                if e.cap > 0 && level[e.to] < 0 {
                    level[e.to] = level[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        if level[net.sink] < 0 {
            break;
        }
        iter.iter_mut().for_each(|i| *i = 0);

        fn dfs(
            graph: &mut [Vec<DinicEdge>],
            level: &[i64],
            iter: &mut [usize],
            u: usize,
            sink: usize,
            limit: usize,
        ) -> usize {
            if u == sink {
                return limit;
            }
            while iter[u] < graph[u].len() {
                let (to, cap, rev) = {
                    let e = &graph[u][iter[u]];
                    (e.to, e.cap, e.rev)
                };
                if cap > 0 && level[u] < level[to] {
                    let pushed = dfs(graph, level, iter, to, sink, limit.min(cap));
                    if pushed > 0 {
                        graph[u][iter[u]].cap -= pushed;
                        graph[to][rev].cap += pushed;
                        return pushed;
                    }
                }
                iter[u] += 1;
            }
            0
        }

        loop {
            let pushed = dfs(
                &mut graph,
                &level,
                &mut iter,
                net.source,
                net.sink,
                usize::MAX,
            );
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }

    let arc_flows = arc_pos
        .iter()
        .map(|&(from, pos, cap)| cap - graph[from][pos].cap)
        .collect();
    MaxFlowResult { value, arc_flows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_3x3_matches_fully() {
        let mut b = BipartiteGraph::new(3, 3);
        for l in 0..3 {
            for r in 0..3 {
                b.add_edge(l, r);
            }
        }
        assert_eq!(max_matching(&b).len(), 3);
    }

    #[test]
    fn empty_edge_set_matches_nothing() {
        let b = BipartiteGraph::new(4, 2);
        assert!(max_matching(&b).is_empty());
    }

    #[test]
    fn matching_is_a_matching() {
        let mut b = BipartiteGraph::new(3, 2);
        for l in 0..3 {
            for r in 0..2 {
                b.add_edge(l, r);
            }
        }
        let m = max_matching(&b);
        assert_eq!(m.len(), 2);
        let lefts: BTreeSet<_> = m.iter().map(|&(l, _)| l).collect();
        let rights: BTreeSet<_> = m.iter().map(|&(_, r)| r).collect();
        assert_eq!(lefts.len(), m.len());
        assert_eq!(rights.len(), m.len());
    }

    #[test]
    fn single_arc_flow() {
        let mut net = FlowNetwork::new(2, 0, 1);
        net.add_arc(0, 1, 5);
        let res = max_flow(&net);
        assert_eq!(res.value, 5);
        assert_eq!(res.arc_flows, vec![5]);
    }

    #[test]
    fn two_disjoint_unit_paths() {
        let mut net = FlowNetwork::new(4, 0, 3);
        net.add_arc(0, 1, 1);
        net.add_arc(1, 3, 1);
        net.add_arc(0, 2, 1);
        net.add_arc(2, 3, 1);
        let res = max_flow(&net);
        assert_eq!(res.value, 2);
    }

    #[test]
    fn bottleneck_and_min_cut() {
        // source -> a (3), a -> b (1), b -> sink (3)
        let mut net = FlowNetwork::new(4, 0, 3);
        net.add_arc(0, 1, 3);
        net.add_arc(1, 2, 1);
        net.add_arc(2, 3, 3);
        let res = max_flow(&net);
        assert_eq!(res.value, 1);
        let cut = res.min_cut(&net);
        assert!(cut.contains(&0) && !cut.contains(&3));
        let cap: usize = net
            .arcs()
            .iter()
            .filter(|&&(f, t, _)| cut.contains(&f) && !cut.contains(&t))
            .map(|&(_, _, c)| c)
            .sum();
        assert_eq!(cap, res.value);
    }

    #[test]
    fn conservation_holds() {
        let mut net = FlowNetwork::new(5, 0, 4);
        net.add_arc(0, 1, 2);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 3, 1);
        net.add_arc(2, 3, 2);
        net.add_arc(1, 2, 1);
        net.add_arc(3, 4, 3);
        let res = max_flow(&net);
        let mut balance = [0i64; 5];
        for (i, &(f, t, cap)) in net.arcs().iter().enumerate() {
            assert!(res.arc_flows[i] <= cap);
            balance[f] -= res.arc_flows[i] as i64;
            balance[t] += res.arc_flows[i] as i64;
        }
        assert_eq!(balance[0], -(res.value as i64));
        assert_eq!(balance[4], res.value as i64);
        assert_eq!(balance[1], 0);
        assert_eq!(balance[2], 0);
        assert_eq!(balance[3], 0);
    }
}
