//! Exhaustive reference solvers. These are ground truth for the property
//! tests: complete searches with pruning that never approximate — when a
//! budget runs out they error instead of answering.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use crate::graph::{Color, Coloring, Graph, ListAssignment, Vertex};
use crate::precolor::PrecolorInstance;
use crate::Error;

/// Limits on an exhaustive search.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_nodes: u64,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 10,
            max_nodes: 500_000_000,
            time_cap: Duration::from_secs(120),
        }
    }
}

impl OracleBudget {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleBudget {
            max_vertices,
            ..OracleBudget::default()
        }
    }
}

struct Guard<'a> {
    budget: &'a OracleBudget,
    nodes: u64,
    start: Instant,
}

impl<'a> Guard<'a> {
    fn new(budget: &'a OracleBudget, g: &Graph) -> Result<Self, Error> {
        if g.vertex_count() > budget.max_vertices {
            return Err(Error::BudgetExceeded(format!(
                "{} vertices exceed the oracle cap of {}",
                g.vertex_count(),
                budget.max_vertices
            )));
        }
        Ok(Guard {
            budget,
            nodes: 0,
            start: Instant::now(),
        })
    }

    fn tick(&mut self) -> Result<(), Error> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded(format!(
                "search exceeded {} nodes",
                self.budget.max_nodes
            )));
        }
        if self.nodes.is_multiple_of(8192) && self.start.elapsed() > self.budget.time_cap {
            return Err(Error::BudgetExceeded(format!(
                "search exceeded {:?}",
                self.budget.time_cap
            )));
        }
        Ok(())
    }
}

/// Exhaustive precoloring extension (reference for the matching-based
/// solver): backtracking over all r-colorings extending the fixed part.
pub fn oracle_precolor(
    inst: &PrecolorInstance,
    budget: &OracleBudget,
) -> Result<Option<Coloring>, Error> {
    oracle_color_extension(inst.graph(), inst.r(), inst.precolor(), budget)
}

/// Exhaustive search for a proper coloring with colors in 1..=r extending
/// `fixed`. Colors beyond the running maximum are interchangeable, so
/// candidates are capped at max-used-plus-one; this enumerates every
/// coloring up to renaming of the non-fixed colors.
pub fn oracle_color_extension(
    g: &Graph,
    r: usize,
    fixed: &BTreeMap<Vertex, Color>,
    budget: &OracleBudget,
) -> Result<Option<Coloring>, Error> {
    let mut guard = Guard::new(budget, g)?;
    for (&v, &c) in fixed {
        if c == 0 || c > r {
            return Err(Error::InvalidInstance(format!(
                "fixed color {c} outside 1..={r}"
            )));
        }
        for &u in g.neighbors(v) {
            if fixed.get(&u) == Some(&c) {
                return Ok(None);
            }
        }
    }
    let mut order: Vec<Vertex> = g.vertices().filter(|v| !fixed.contains_key(v)).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut assignment: BTreeMap<Vertex, Color> = fixed.clone();
    let max_fixed = fixed.values().copied().max().unwrap_or(0);

    fn rec(
        g: &Graph,
        r: usize,
        order: &[Vertex],
        idx: usize,
        max_used: Color,
        assignment: &mut BTreeMap<Vertex, Color>,
        guard: &mut Guard<'_>,
    ) -> Result<bool, Error> {
        if idx == order.len() {
            return Ok(true);
        }
        let v = order[idx];
        for c in 1..=r.min(max_used + 1) {
            guard.tick()?;
            if g.neighbors(v).iter().any(|u| assignment.get(u) == Some(&c)) {
                continue;
            }
            assignment.insert(v, c);
            if rec(g, r, order, idx + 1, max_used.max(c), assignment, guard)? {
                return Ok(true);
            }
            assignment.remove(&v);
        }
        Ok(false)
    }

    if rec(g, r, &order, 0, max_fixed, &mut assignment, &mut guard)? {
        Ok(Some(Coloring::from_map(assignment)))
    } else {
        Ok(None)
    }
}

/// Exhaustive equitable coloring: enumerates set partitions into proper
/// classes (first-use canonical numbering, at most r classes) and keeps
/// those with class sizes within one of each other.
pub fn oracle_equitable(
    g: &Graph,
    r: usize,
    budget: &OracleBudget,
) -> Result<Option<Coloring>, Error> {
    let mut guard = Guard::new(budget, g)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::new()));
    }
    if r == 0 {
        return Ok(None);
    }
    let mut class_of: Vec<usize> = vec![usize::MAX; n];

    fn rec(
        g: &Graph,
        r: usize,
        v: usize,
        used: usize,
        class_of: &mut Vec<usize>,
        guard: &mut Guard<'_>,
    ) -> Result<bool, Error> {
        let n = g.vertex_count();
        if v == n {
            let mut sizes = vec![0usize; used];
            for &c in class_of.iter() {
                sizes[c] += 1;
            }
            let max = sizes.iter().max().unwrap();
            let min = sizes.iter().min().unwrap();
            return Ok(max - min <= 1);
        }
        for cls in 0..(used + 1).min(r) {
            guard.tick()?;
            if g.neighbors(v).iter().any(|&u| u < v && class_of[u] == cls) {
                continue;
            }
            class_of[v] = cls;
            if rec(g, r, v + 1, used.max(cls + 1), class_of, guard)? {
                return Ok(true);
            }
            class_of[v] = usize::MAX;
        }
        Ok(false)
    }

    if rec(g, r, 0, 0, &mut class_of, &mut guard)? {
        let map: BTreeMap<Vertex, Color> = (0..n).map(|u| (u, class_of[u] + 1)).collect();
        Ok(Some(Coloring::from_map(map)))
    } else {
        Ok(None)
    }
}

/// Exhaustive list coloring over the product of the lists, with conflict
/// pruning. An empty list makes the product empty, hence a No.
pub fn oracle_list_raw(
    g: &Graph,
    lists: &ListAssignment,
    budget: &OracleBudget,
) -> Result<Option<Coloring>, Error> {
    let mut guard = Guard::new(budget, g)?;
    let n = g.vertex_count();
    let mut assignment: BTreeMap<Vertex, Color> = BTreeMap::new();

    fn rec(
        g: &Graph,
        lists: &ListAssignment,
        v: usize,
        assignment: &mut BTreeMap<Vertex, Color>,
        guard: &mut Guard<'_>,
    ) -> Result<bool, Error> {
        if v == g.vertex_count() {
            return Ok(true);
        }
        for &c in lists.list(v) {
            guard.tick()?;
            if g.neighbors(v).iter().any(|u| assignment.get(u) == Some(&c)) {
                continue;
            }
            assignment.insert(v, c);
            if rec(g, lists, v + 1, assignment, guard)? {
                return Ok(true);
            }
            assignment.remove(&v);
        }
        Ok(false)
    }

    if lists.vertex_count() != n {
        return Err(Error::InvalidInstance(
            "list assignment does not cover the vertex set".into(),
        ));
    }
    if rec(g, lists, 0, &mut assignment, &mut guard)? {
        Ok(Some(Coloring::from_map(assignment)))
    } else {
        Ok(None)
    }
}

/// Exhaustive list coloring of a split-graph instance.
pub fn oracle_list(
    inst: &crate::listcolor::ListInstance,
    budget: &OracleBudget,
) -> Result<Option<Coloring>, Error> {
    oracle_list_raw(inst.graph(), inst.lists(), budget)
}

/// Exhaustive independent-set search over k-subsets.
pub fn oracle_independent_set(
    g: &Graph,
    k: usize,
    budget: &OracleBudget,
) -> Result<Option<BTreeSet<Vertex>>, Error> {
    let mut guard = Guard::new(budget, g)?;
    let n = g.vertex_count();
    if k > n {
        return Ok(None);
    }
    let mut chosen: Vec<Vertex> = Vec::with_capacity(k);

    fn rec(
        g: &Graph,
        k: usize,
        start: usize,
        chosen: &mut Vec<Vertex>,
        guard: &mut Guard<'_>,
    ) -> Result<bool, Error> {
        if chosen.len() == k {
            return Ok(true);
        }
        for v in start..g.vertex_count() {
            guard.tick()?;
            if chosen.iter().any(|&u| g.has_edge(u, v)) {
                continue;
            }
            chosen.push(v);
            if rec(g, k, v + 1, chosen, guard)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    if rec(g, k, 0, &mut chosen, &mut guard)? {
        Ok(Some(chosen.into_iter().collect()))
    } else {
        Ok(None)
    }
}
