//! Precoloring extension on graphs that are a bounded number of vertex
//! deletions away from a clique.
//!
//! The solver refines color lists for the uncolored modulator vertices,
//! splits them into few-option and many-option parts, enumerates the
//! few-option colorings, completes the clique by bipartite matching, and
//! finishes the many-option vertices greedily (with an exhaustive fallback
//! kept for safety).

use std::collections::{BTreeMap, BTreeSet};

use crate::flow::{max_matching, BipartiteGraph};
use crate::graph::{is_proper, Color, Coloring, Graph, Vertex};
use crate::Error;

/// A precoloring-extension instance: a graph, a deletion set `X` with
/// `G \ X` complete, a color budget `r`, and a partial proper coloring.
///
/// Input colors are normalized to `1..=t` on construction (`t` = number of
/// distinct precolors) and mapped back on output.
#[derive(Clone, Debug)]
pub struct PrecolorInstance {
    graph: Graph,
    modulator: BTreeSet<Vertex>,
    r: usize,
    precolor: BTreeMap<Vertex, Color>,
    normalized: BTreeMap<Vertex, Color>,
    orig_of_norm: Vec<Color>,
}

impl PrecolorInstance {
    pub fn new(
        graph: Graph,
        modulator: BTreeSet<Vertex>,
        r: usize,
        precolor: BTreeMap<Vertex, Color>,
    ) -> Result<Self, Error> {
        let n = graph.vertex_count();
        if let Some(&v) = modulator.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidInstance(format!(
                "modulator vertex {v} out of range"
            )));
        }
        let clique: Vec<Vertex> = graph.vertices().filter(|v| !modulator.contains(v)).collect();
        if !graph.is_clique(&clique) {
            return Err(Error::InvalidInstance(
                "deleting the modulator does not leave a clique".into(),
            ));
        }
        for (&v, &c) in &precolor {
            if v >= n {
                return Err(Error::InvalidInstance(format!(
                    "precolored vertex {v} out of range"
                )));
            }
            if c == 0 || c > r {
                return Err(Error::InvalidInstance(format!(
                    "precolor {c} outside 1..={r}"
                )));
            }
        }
        for (&u, &cu) in &precolor {
            for &v in graph.neighbors(u) {
                if precolor.get(&v) == Some(&cu) {
                    return Err(Error::InvalidInstance(format!(
                        "precoloring is not proper on edge {u}-{v}"
                    )));
                }
            }
        }
        let orig_of_norm: Vec<Color> = precolor
            .values()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if orig_of_norm.len() > r {
            return Err(Error::InvalidInstance(format!(
                "precoloring uses {} colors but r = {r}",
                orig_of_norm.len()
            )));
        }
        let norm_of_orig: BTreeMap<Color, Color> = orig_of_norm
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i + 1))
            .collect();
        let normalized = precolor
            .iter()
            .map(|(&v, &c)| (v, norm_of_orig[&c]))
            .collect();
        Ok(PrecolorInstance {
            graph,
            modulator,
            r,
            precolor,
            normalized,
            orig_of_norm,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn modulator(&self) -> &BTreeSet<Vertex> {
        &self.modulator
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn precolor(&self) -> &BTreeMap<Vertex, Color> {
        &self.precolor
    }

    /// Number of distinct precolors (the `t` of the normalized palette).
    pub fn distinct_precolors(&self) -> usize {
        self.orig_of_norm.len()
    }

    /// Precoloring with colors renumbered to `1..=t`.
    pub fn normalized_precolor(&self) -> &BTreeMap<Vertex, Color> {
        &self.normalized
    }

    /// Maps a coloring over the normalized palette back to original color
    /// ids; fresh colors take the unused ids of `1..=r` in ascending order.
    fn denormalize(&self, c: &BTreeMap<Vertex, Color>) -> Coloring {
        let t = self.orig_of_norm.len();
        let used: BTreeSet<Color> = self.orig_of_norm.iter().copied().collect();
        let mut fresh = (1..=self.r).filter(|c| !used.contains(c));
        let mut fresh_of_norm: BTreeMap<Color, Color> = BTreeMap::new();
        let mut out = Coloring::new();
        for (&v, &col) in c {
            let orig = if col <= t {
                self.orig_of_norm[col - 1]
            } else {
                *fresh_of_norm
                    .entry(col)
                    .or_insert_with(|| fresh.next().expect("palette exhausted"))
            };
            out.set(v, orig);
        }
        out
    }
}

/// Color lists for the uncolored modulator vertices and their split into
/// the many-option part (`big`, list longer than 2k, finished last) and the
/// few-option part (`small`, enumerated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedLists {
    pub lists: BTreeMap<Vertex, BTreeSet<Color>>,
    pub big: Vec<Vertex>,
    pub small: Vec<Vertex>,
}

/// For each uncolored modulator vertex `u`, the list of precolors not used
/// on its precolored neighbors, split at list size 2k.
pub fn refine_lists(inst: &PrecolorInstance) -> RefinedLists {
    let k = inst.modulator.len();
    let t = inst.distinct_precolors();
    let norm = inst.normalized_precolor();
    let mut lists = BTreeMap::new();
    let mut big = Vec::new();
    let mut small = Vec::new();
    for &u in &inst.modulator {
        if norm.contains_key(&u) {
            continue;
        }
        let mut list: BTreeSet<Color> = (1..=t).collect();
        for &v in inst.graph.neighbors(u) {
            if let Some(&c) = norm.get(&v) {
                list.remove(&c);
            }
        }
        if list.len() > 2 * k {
            big.push(u);
        } else {
            small.push(u);
        }
        lists.insert(u, list);
    }
    RefinedLists { lists, big, small }
}

/// Colors the uncolored clique vertices given a fixed partial coloring on
/// everything else, by maximum matching between candidate colors and
/// vertices. A color is available to a vertex when no neighbor carries it.
/// Returns a full assignment for the uncolored clique vertices, or `None`
/// if no saturating matching exists.
///
/// Candidate colors are `1..=t`, the fresh colors already in use, and
/// enough unused fresh colors (capped at the number of uncolored vertices;
/// unused colors are interchangeable, so the cap loses nothing).
pub fn clique_color_matching(
    g: &Graph,
    clique: &[Vertex],
    partial: &BTreeMap<Vertex, Color>,
    t: usize,
    r: usize,
) -> Option<BTreeMap<Vertex, Color>> {
    let uncolored: Vec<Vertex> = clique
        .iter()
        .copied()
        .filter(|v| !partial.contains_key(v))
        .collect();
    if uncolored.is_empty() {
        return Some(BTreeMap::new());
    }
    let mut palette: BTreeSet<Color> = (1..=t.min(r)).collect();
    for &c in partial.values() {
        if c <= r {
            palette.insert(c);
        }
    }
    let base = palette.iter().next_back().copied().unwrap_or(0).max(t);
    let mut extra = 0;
    let mut next = base + 1;
    while extra < uncolored.len() && next <= r {
        palette.insert(next);
        next += 1;
        extra += 1;
    }
    let palette: Vec<Color> = palette.into_iter().collect();

    let mut b = BipartiteGraph::new(uncolored.len(), palette.len());
    for (i, &v) in uncolored.iter().enumerate() {
        let blocked: BTreeSet<Color> = g
            .neighbors(v)
            .iter()
            .filter_map(|u| partial.get(u).copied())
            .collect();
        for (j, &c) in palette.iter().enumerate() {
            if !blocked.contains(&c) {
                b.add_edge(i, j);
            }
        }
    }
    let matching = max_matching(&b);
    if matching.len() < uncolored.len() {
        return None;
    }
    Some(
        matching
            .into_iter()
            .map(|(i, j)| (uncolored[i], palette[j]))
            .collect(),
    )
}

/// Search counters reported by the solvers.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveStats {
    /// Guess combinations that reached the completion stage.
    pub branches: u64,
}

/// Extends the precoloring to a proper coloring with at most `r` colors, or
/// returns `None` if impossible. The returned coloring uses the original
/// color ids and always re-verifies before being returned.
pub fn solve_precolor(inst: &PrecolorInstance) -> Option<Coloring> {
    solve_precolor_with_stats(inst).0
}

pub fn solve_precolor_with_stats(inst: &PrecolorInstance) -> (Option<Coloring>, SolveStats) {
    let mut stats = SolveStats::default();
    let g = inst.graph();
    let k = inst.modulator.len();
    let t = inst.distinct_precolors();
    let r = inst.r;
    let clique: Vec<Vertex> = g.vertices().filter(|v| !inst.modulator.contains(v)).collect();
    let rl = refine_lists(inst);
    let base: BTreeMap<Vertex, Color> = inst.normalized_precolor().clone();
    // colors on precolored clique vertices; these never reappear in the clique
    let s_c: BTreeSet<Color> = clique.iter().filter_map(|v| base.get(v).copied()).collect();

    let small = &rl.small;
    let fresh_palette_cap = |len: usize| (r - t).min(len);

    for mask in 0u64..(1 << small.len()) {
        let list_part: Vec<Vertex> = small
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 0)
            .map(|(_, &v)| v)
            .collect();
        let fresh_part: Vec<Vertex> = small
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        // vertices assigned fresh colors draw from a palette capped at
        // |fresh_part| distinct ids; fresh ids are interchangeable
        let fresh_colors: Vec<Color> = (t + 1..=t + fresh_palette_cap(fresh_part.len())).collect();
        if !fresh_part.is_empty() && fresh_colors.is_empty() {
            continue;
        }

        let mut assignment = base.clone();
        if extend_small(
            g,
            &rl,
            &list_part,
            &fresh_part,
            &fresh_colors,
            0,
            &mut assignment,
            &clique,
            t,
            r,
            k,
            &s_c,
            &mut stats,
        ) {
            // assignment now holds a full normalized solution
            let solution = inst.denormalize(&assignment);
            debug_assert!(verify_solution(inst, &solution));
            assert!(
                verify_solution(inst, &solution),
                "solver produced an invalid extension"
            );
            return (Some(solution), stats);
        }
    }
    (None, stats)
}

/// Depth-first enumeration of the few-option vertices: first the list part
/// (colors from refined lists), then the fresh part (capped fresh palette),
/// then clique matching and the many-option finish.
#[allow(clippy::too_many_arguments)]
fn extend_small(
    g: &Graph,
    rl: &RefinedLists,
    list_part: &[Vertex],
    fresh_part: &[Vertex],
    fresh_colors: &[Color],
    depth: usize,
    assignment: &mut BTreeMap<Vertex, Color>,
    clique: &[Vertex],
    t: usize,
    r: usize,
    k: usize,
    s_c: &BTreeSet<Color>,
    stats: &mut SolveStats,
) -> bool {
    if depth < list_part.len() + fresh_part.len() {
        let (v, candidates): (Vertex, Vec<Color>) = if depth < list_part.len() {
            let v = list_part[depth];
            (v, rl.lists[&v].iter().copied().collect())
        } else {
            (fresh_part[depth - list_part.len()], fresh_colors.to_vec())
        };
        for c in candidates {
            let conflict = g
                .neighbors(v)
                .iter()
                .any(|u| assignment.get(u) == Some(&c));
            if conflict {
                continue;
            }
            assignment.insert(v, c);
            if extend_small(
                g, rl, list_part, fresh_part, fresh_colors, depth + 1, assignment, clique, t, r,
                k, s_c, stats,
            ) {
                return true;
            }
            assignment.remove(&v);
        }
        return false;
    }

    stats.branches += 1;
    let matched = match clique_color_matching(g, clique, assignment, t, r) {
        Some(m) => m,
        None => return false,
    };
    let mut full = assignment.clone();
    full.extend(matched);
    if let Some(finished) = finish_big(g, rl, &full, k, s_c) {
        *assignment = finished;
        true
    } else {
        false
    }
}

/// Colors the many-option vertices from their lists, most clique-precolor
/// overlap first, smallest available color each. These lists are long
/// enough that the greedy step always has room; an exhaustive fallback over
/// 2k+2-color sublists guards the claim anyway.
fn finish_big(
    g: &Graph,
    rl: &RefinedLists,
    partial: &BTreeMap<Vertex, Color>,
    k: usize,
    s_c: &BTreeSet<Color>,
) -> Option<BTreeMap<Vertex, Color>> {
    let mut order = rl.big.clone();
    order.sort_by_key(|v| {
        (
            std::cmp::Reverse(rl.lists[v].intersection(s_c).count()),
            *v,
        )
    });

    let mut result = partial.clone();
    let mut greedy_ok = true;
    for &v in &order {
        let used: BTreeSet<Color> = g
            .neighbors(v)
            .iter()
            .filter_map(|u| result.get(u).copied())
            .collect();
        match rl.lists[&v].iter().find(|c| !used.contains(c)) {
            Some(&c) => {
                result.insert(v, c);
            }
            None => {
                greedy_ok = false;
                break;
            }
        }
    }
    if greedy_ok {
        return Some(result);
    }

    // Fallback: exhaustive over the first 2k+2 colors of each list. At most
    // 2k+1 list colors can be blocked, so this window is sufficient.
    fn rec(
        g: &Graph,
        order: &[Vertex],
        windows: &[Vec<Color>],
        depth: usize,
        result: &mut BTreeMap<Vertex, Color>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for &c in &windows[depth] {
            let conflict = g.neighbors(v).iter().any(|u| result.get(u) == Some(&c));
            if conflict {
                continue;
            }
            result.insert(v, c);
            if rec(g, order, windows, depth + 1, result) {
                return true;
            }
            result.remove(&v);
        }
        false
    }

    let windows: Vec<Vec<Color>> = order
        .iter()
        .map(|v| rl.lists[v].iter().copied().take(2 * k + 2).collect())
        .collect();
    let mut result = partial.clone();
    rec(g, &order, &windows, 0, &mut result).then_some(result)
}

/// Full check of a claimed solution: proper, within budget, extends the
/// precoloring.
pub fn verify_solution(inst: &PrecolorInstance, c: &Coloring) -> bool {
    if !c.is_total(inst.graph()) {
        return false;
    }
    if is_proper(inst.graph(), c) != Ok(true) {
        return false;
    }
    if c.colors_used().len() > inst.r {
        return false;
    }
    if c.iter().any(|(_, col)| col > inst.r) {
        return false;
    }
    inst.precolor.iter().all(|(&v, &col)| c.get(v) == Some(col))
}
