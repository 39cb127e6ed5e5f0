//! Equitable coloring: a polynomial solver on threshold graphs, a
//! fixed-parameter solver for graphs at bounded deletion distance from a
//! threshold graph, and the size-based early rejection rule.
//!
//! Color classes of an equitable coloring differ in size by at most one, so
//! using t colors on n vertices fixes the class-size profile: n mod t
//! classes of size ⌊n/t⌋+1 and the rest of size ⌊n/t⌋. Both solvers loop
//! over t, commit to a canonical placement of the large classes, and decide
//! the remaining independent-set placement by network flow.

use std::collections::{BTreeMap, BTreeSet};

use crate::flow::{max_flow, FlowNetwork};
use crate::graph::{is_proper, Color, Coloring, Graph, Vertex};
use crate::recognize::{recognize_threshold, split_partition};
use crate::Error;

/// An equitable-coloring instance with an optional deletion set into the
/// threshold class. Construction validates the modulator.
#[derive(Clone, Debug)]
pub struct EquitableInstance {
    graph: Graph,
    r: usize,
    modulator: BTreeSet<Vertex>,
}

impl EquitableInstance {
    pub fn new(graph: Graph, r: usize, modulator: BTreeSet<Vertex>) -> Result<Self, Error> {
        let n = graph.vertex_count();
        if let Some(&v) = modulator.iter().find(|&&v| v >= n) {
            return Err(Error::InvalidInstance(format!(
                "modulator vertex {v} out of range"
            )));
        }
        let (sub, _) = graph.remove_vertices(&modulator);
        if !recognize_threshold(&sub).is_accept() {
            return Err(Error::InvalidInstance(
                "deleting the modulator does not leave a threshold graph".into(),
            ));
        }
        Ok(EquitableInstance { graph, r, modulator })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn modulator(&self) -> &BTreeSet<Vertex> {
        &self.modulator
    }
}

/// True iff `c` is a proper coloring of `g` with at most `r` distinct
/// colors whose nonempty class sizes differ by at most one.
pub fn verify_equitable(g: &Graph, c: &Coloring, r: usize) -> Result<bool, Error> {
    if !is_proper(g, c)? {
        return Ok(false);
    }
    let sizes = c.class_sizes();
    if sizes.len() > r {
        return Ok(false);
    }
    let max = sizes.values().max().copied().unwrap_or(0);
    let min = sizes.values().min().copied().unwrap_or(0);
    Ok(max - min <= 1)
}

/// Class-size arithmetic for t colors on n vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassSizeProfile {
    pub colors: usize,
    pub small_size: usize,
    pub small_count: usize,
    pub big_count: usize,
}

impl ClassSizeProfile {
    pub fn new(n: usize, t: usize) -> Self {
        assert!(t >= 1);
        ClassSizeProfile {
            colors: t,
            small_size: n / t,
            small_count: t - n % t,
            big_count: n % t,
        }
    }

    pub fn max_class_size(&self) -> usize {
        self.small_size + usize::from(self.big_count > 0)
    }

    pub fn total(&self) -> usize {
        self.small_size * self.small_count + (self.small_size + 1) * self.big_count
    }
}

/// Outcome of the size-based rejection rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelDecision {
    No,
    Undecided,
}

/// Rejects when n > r(k+2): with a universal vertex in the threshold part,
/// no color class can exceed k+2, so r classes cannot cover the graph.
/// Callers must ensure that hypothesis holds before trusting a `No`.
pub fn kernel_reject(n: usize, r: usize, k: usize) -> KernelDecision {
    if n > r * (k + 2) {
        KernelDecision::No
    } else {
        KernelDecision::Undecided
    }
}

/// Equitable coloring of a threshold graph with at most `r` colors.
///
/// For each candidate color count t (ascending), the clique gets one color
/// each, leftover colors go to the highest-degree independent vertices, and
/// a unit-capacity flow tops every color up to at most two uses. Graphs
/// with a universal vertex never admit classes of size three or more; for
/// graphs without one (isolated vertices present) smaller t are decided by
/// the general class-filling flow.
pub fn solve_equitable_threshold(g: &Graph, r: usize) -> Result<Option<Coloring>, Error> {
    if !recognize_threshold(g).is_accept() {
        return Err(Error::NotThreshold);
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Some(Coloring::new()));
    }
    let part = split_partition(g).expect("threshold graphs are split");
    let rmax = r.min(n);
    let has_universal = g.has_universal_vertex();
    for t in part.clique.len().max(1)..=rmax {
        let result = if 2 * t >= n {
            fill_pairs(g, &part.clique, &part.independent, t)
        } else if has_universal {
            // a universal vertex pins its class to size 1, so every class
            // has size at most 2 and t < ceil(n/2) cannot work
            None
        } else {
            fill_general(g, &part.clique, &part.independent, t)
        };
        if let Some(coloring) = result {
            assert_eq!(
                verify_equitable(g, &coloring, r),
                Ok(true),
                "threshold solver produced an invalid coloring"
            );
            return Ok(Some(coloring));
        }
    }
    Ok(None)
}

/// The at-most-two-per-class filling: seed every color once (clique first,
/// then the highest-degree independent vertices), then flow one extra use
/// per color onto the remaining independent vertices.
fn fill_pairs(g: &Graph, clique: &[Vertex], independent: &[Vertex], t: usize) -> Option<Coloring> {
    debug_assert!(t >= clique.len() && 2 * t >= g.vertex_count());
    let mut color_of: BTreeMap<Vertex, Color> = BTreeMap::new();
    let mut holder: Vec<Vertex> = Vec::with_capacity(t);
    for (i, &v) in clique.iter().enumerate() {
        color_of.insert(v, i + 1);
        holder.push(v);
    }
    let mut ind_sorted = independent.to_vec();
    ind_sorted.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let free = t - clique.len();
    for (j, &v) in ind_sorted.iter().take(free).enumerate() {
        color_of.insert(v, clique.len() + 1 + j);
        holder.push(v);
    }
    let uncolored: Vec<Vertex> = ind_sorted[free..].to_vec();

    let source = 0;
    let sink = 1 + t + uncolored.len();
    let mut net = FlowNetwork::new(sink + 1, source, sink);
    for c in 1..=t {
        net.add_arc(source, c, 1);
    }
    let mut color_arcs: Vec<(usize, Color, Vertex)> = Vec::new();
    for (ui, &u) in uncolored.iter().enumerate() {
        for (ci, &h) in holder.iter().enumerate() {
            // a holder in the independent set can never conflict with u
            if !g.has_edge(h, u) {
                let arc = net.add_arc(1 + ci, 1 + t + ui, 1);
                color_arcs.push((arc, ci + 1, u));
            }
        }
        net.add_arc(1 + t + ui, sink, 1);
    }
    let res = max_flow(&net);
    if res.value < uncolored.len() {
        return None;
    }
    for &(arc, c, u) in &color_arcs {
        if res.arc_flows[arc] == 1 {
            color_of.insert(u, c);
        }
    }
    Some(Coloring::from_map(color_of))
}

/// General class filling for arbitrary profiles: every clique vertex heads
/// its own class, big classes go to independent-only colors first and then
/// to the lowest-degree clique vertices, and a flow with exact per-class
/// demands places the independent vertices.
fn fill_general(
    g: &Graph,
    clique: &[Vertex],
    independent: &[Vertex],
    t: usize,
) -> Option<Coloring> {
    let prof = ClassSizeProfile::new(g.vertex_count(), t);
    let s = prof.small_size;
    let free = t - clique.len();
    let big_free = prof.big_count.min(free);
    let big_clique = prof.big_count - big_free;
    if big_clique > clique.len() {
        return None;
    }

    let mut clique_by_degree = clique.to_vec();
    clique_by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut size_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (i, &v) in clique_by_degree.iter().enumerate() {
        size_of.insert(v, if i < big_clique { s + 1 } else { s });
    }

    // classes: clique classes in id order, then free classes (big first)
    let mut holders: Vec<Option<Vertex>> = clique.iter().map(|&v| Some(v)).collect();
    let mut demands: Vec<usize> = clique.iter().map(|&v| size_of[&v] - 1).collect();
    for j in 0..free {
        holders.push(None);
        demands.push(if j < big_free { s + 1 } else { s });
    }
    debug_assert_eq!(demands.iter().sum::<usize>(), independent.len());

    let source = 0;
    let sink = 1 + holders.len() + independent.len();
    let mut net = FlowNetwork::new(sink + 1, source, sink);
    for (ci, &demand) in demands.iter().enumerate() {
        net.add_arc(source, 1 + ci, demand);
    }
    let mut color_arcs: Vec<(usize, Color, Vertex)> = Vec::new();
    for (ui, &u) in independent.iter().enumerate() {
        for (ci, &h) in holders.iter().enumerate() {
            let ok = match h {
                Some(v) => !g.has_edge(v, u),
                None => true,
            };
            if ok {
                let arc = net.add_arc(1 + ci, 1 + holders.len() + ui, 1);
                color_arcs.push((arc, ci + 1, u));
            }
        }
        net.add_arc(1 + holders.len() + ui, sink, 1);
    }
    let res = max_flow(&net);
    if res.value < independent.len() {
        return None;
    }
    let mut color_of: BTreeMap<Vertex, Color> = BTreeMap::new();
    for (ci, &h) in holders.iter().enumerate() {
        if let Some(v) = h {
            color_of.insert(v, ci + 1);
        }
    }
    for &(arc, c, u) in &color_arcs {
        if res.arc_flows[arc] == 1 {
            color_of.insert(u, c);
        }
    }
    Some(Coloring::from_map(color_of))
}

/// Search counters for the fixed-parameter solver.
#[derive(Clone, Copy, Debug, Default)]
pub struct EquitableStats {
    /// Guess tuples that passed the arithmetic consistency checks.
    pub states: u64,
    /// Placement flows actually solved.
    pub flows: u64,
}

/// Bit helpers for the guess masks (colors) and independent-set bitsets.
fn bitset_get(m: &[u64], i: usize) -> bool {
    m[i / 64] >> (i % 64) & 1 == 1
}

fn and_popcount(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

fn popcount(m: &[u64]) -> usize {
    m.iter().map(|w| w.count_ones() as usize).sum()
}

/// Shared per-guess data for the fixed-parameter solver.
struct GuessContext<'a> {
    g: &'a Graph,
    sub: &'a Graph,
    kept: &'a [Vertex],
    x: &'a [Vertex],
    xcol: &'a [Color],
    c_sub: &'a [Vertex],
    i_sub: &'a [Vertex],
    /// Per clique position: bitset of non-neighbors inside `i_sub`.
    nonnbr: &'a [Vec<u64>],
    /// Per color bit: bitset of `i_sub` positions whose base list has it.
    i_with: &'a [Vec<u64>],
    l0: &'a [u64],
    kp: usize,
    t: usize,
    s: usize,
    q_fresh: usize,
    qc: u64,
    mult_i: &'a [usize],
}

/// Equitable coloring of `inst.graph` with at most `inst.r` colors, using
/// the modulator `X` (G \ X threshold) as the parameter.
pub fn solve_equitable_fpt(inst: &EquitableInstance) -> Result<Option<Coloring>, Error> {
    solve_equitable_fpt_with_stats(inst).map(|(c, _)| c)
}

pub fn solve_equitable_fpt_with_stats(
    inst: &EquitableInstance,
) -> Result<(Option<Coloring>, EquitableStats), Error> {
    let mut stats = EquitableStats::default();
    let g = inst.graph();
    let n = g.vertex_count();
    if n == 0 {
        return Ok((Some(Coloring::new()), stats));
    }
    let r = inst.r.min(n); // colors beyond n are useless
    let x: Vec<Vertex> = inst.modulator.iter().copied().collect();
    let k = x.len();
    if k == n {
        // nothing left of the threshold part; plain exhaustive search
        return Ok((exhaustive_equitable(g, r), stats));
    }
    assert!(k < 64, "modulator too large for the guess bitmasks");

    let (sub, kept) = g.remove_vertices(&inst.modulator);
    let part = split_partition(&sub).ok_or(Error::NotThreshold)?;
    let c_sub = part.clique;
    let i_sub = part.independent;
    // With a universal vertex in the threshold part, its class is confined
    // to itself plus X, so no class exceeds k+2. Without one (isolated
    // vertices present) there is no such bound.
    let cap = if sub.has_universal_vertex() {
        k + 2
    } else {
        usize::MAX
    };

    let mut x_pos = vec![usize::MAX; n];
    for (i, &v) in x.iter().enumerate() {
        x_pos[v] = i;
    }
    let mut i_index = vec![usize::MAX; sub.vertex_count()];
    for (i, &v) in i_sub.iter().enumerate() {
        i_index[v] = i;
    }
    let words = i_sub.len().div_ceil(64).max(1);
    let nonnbr: Vec<Vec<u64>> = c_sub
        .iter()
        .map(|&v| {
            let mut m = vec![0u64; words];
            for idx in 0..i_sub.len() {
                m[idx / 64] |= 1u64 << (idx % 64);
            }
            for &w in sub.neighbors(v) {
                let idx = i_index[w];
                if idx != usize::MAX {
                    m[idx / 64] &= !(1u64 << (idx % 64));
                }
            }
            m
        })
        .collect();

    let x_colorings = proper_colorings_canonical(g, &x);

    for t in c_sub.len().max(1)..=r {
        let prof = ClassSizeProfile::new(n, t);
        if prof.max_class_size() > cap {
            continue;
        }
        let s = prof.small_size;
        let btot = prof.big_count;

        for xcol in &x_colorings {
            let kp = xcol.iter().copied().max().unwrap_or(0);
            if kp > t {
                continue;
            }
            let mut mult_x = vec![0usize; kp];
            for &c in xcol {
                mult_x[c - 1] += 1;
            }
            // base lists: color c is allowed for a sub vertex unless an
            // X-neighbor carries it
            let all_colors: u64 = if kp == 0 { 0 } else { (1u64 << kp) - 1 };
            let l0: Vec<u64> = (0..sub.vertex_count())
                .map(|sv| {
                    let mut mask = all_colors;
                    for &w in g.neighbors(kept[sv]) {
                        if x_pos[w] != usize::MAX {
                            mask &= !(1u64 << (xcol[x_pos[w]] - 1));
                        }
                    }
                    mask
                })
                .collect();
            let i_with: Vec<Vec<u64>> = (0..kp)
                .map(|c| {
                    let mut m = vec![0u64; words];
                    for (idx, &v) in i_sub.iter().enumerate() {
                        if l0[v] >> c & 1 == 1 {
                            m[idx / 64] |= 1u64 << (idx % 64);
                        }
                    }
                    m
                })
                .collect();
            let clique_union: u64 = c_sub.iter().fold(0, |acc, &v| acc | l0[v]);
            let i_union: u64 = i_sub.iter().fold(0, |acc, &v| acc | l0[v]);

            for size_bits in 0u64..(1 << kp) {
                if btot == 0 && size_bits != 0 {
                    break; // no big classes exist at this t
                }
                let nbig_x = size_bits.count_ones() as usize;
                if nbig_x > btot || (kp - nbig_x) > t - btot {
                    continue;
                }
                let q_fresh = btot - nbig_x;
                let sizes: Vec<usize> = (0..kp)
                    .map(|c| if size_bits >> c & 1 == 1 { s + 1 } else { s })
                    .collect();
                for qc in 0u64..(1 << kp) {
                    if qc & !clique_union != 0 {
                        continue;
                    }
                    if t + (qc.count_ones() as usize) < kp + c_sub.len() {
                        continue; // not enough colors for the fresh clique classes
                    }
                    'qi: for qi in 0u64..(1 << kp) {
                        if qi & !i_union != 0 {
                            continue;
                        }
                        // occurrence accounting: X count + clique use + the
                        // independent-set remainder must hit the class size
                        let mut mult_i = vec![0usize; kp];
                        for c in 0..kp {
                            let fixed = mult_x[c] + usize::from(qc >> c & 1 == 1);
                            if qi >> c & 1 == 1 {
                                if fixed >= sizes[c] {
                                    continue 'qi;
                                }
                                mult_i[c] = sizes[c] - fixed;
                                if popcount(&i_with[c]) < mult_i[c] {
                                    continue 'qi;
                                }
                            } else if fixed != sizes[c] {
                                continue 'qi;
                            }
                        }
                        stats.states += 1;
                        let ctx = GuessContext {
                            g,
                            sub: &sub,
                            kept: &kept,
                            x: &x,
                            xcol,
                            c_sub: &c_sub,
                            i_sub: &i_sub,
                            nonnbr: &nonnbr,
                            i_with: &i_with,
                            l0: &l0,
                            kp,
                            t,
                            s,
                            q_fresh,
                            qc,
                            mult_i: &mult_i,
                        };
                        if let Some(coloring) = try_guess_state(&ctx, &mut stats) {
                            assert_eq!(
                                verify_equitable(g, &coloring, inst.r),
                                Ok(true),
                                "fpt solver produced an invalid coloring"
                            );
                            return Ok((Some(coloring), stats));
                        }
                    }
                }
            }
        }
    }
    Ok((None, stats))
}

/// One guess state: eligibility filtering, clique grouping, compulsory
/// color routing, and per-routing placement.
fn try_guess_state(ctx: &GuessContext<'_>, stats: &mut EquitableStats) -> Option<Coloring> {
    // refined clique lists: compulsory colors only, then eligibility (enough
    // list-carrying non-neighbors to meet the color's remaining demand)
    let l2: Vec<u64> = ctx
        .c_sub
        .iter()
        .enumerate()
        .map(|(ci, &v)| {
            let mut mask = ctx.l0[v] & ctx.qc;
            let mut rest = mask;
            while rest != 0 {
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if ctx.mult_i[bit] > 0
                    && and_popcount(&ctx.i_with[bit], &ctx.nonnbr[ci]) < ctx.mult_i[bit]
                {
                    mask &= !(1u64 << bit);
                }
            }
            mask
        })
        .collect();
    let l2_union: u64 = l2.iter().fold(0, |acc, &m| acc | m);
    if ctx.qc & !l2_union != 0 {
        return None; // some compulsory clique color has nowhere to go
    }

    // group clique vertices by refined list
    let mut groups: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (ci, &mask) in l2.iter().enumerate() {
        groups.entry(mask).or_default().push(ci);
    }
    let group_list: Vec<(u64, Vec<usize>)> = groups.into_iter().collect();

    let qc_colors: Vec<usize> = (0..ctx.kp).filter(|&c| ctx.qc >> c & 1 == 1).collect();
    let mut chosen = vec![usize::MAX; qc_colors.len()];
    let mut load = vec![0usize; group_list.len()];
    assign_groups(ctx, stats, &qc_colors, &group_list, 0, &mut chosen, &mut load)
}

/// Routes each compulsory clique color to a group whose refined list allows
/// it (never overfilling a group), recursing into placement at the leaves.
fn assign_groups(
    ctx: &GuessContext<'_>,
    stats: &mut EquitableStats,
    qc_colors: &[usize],
    group_list: &[(u64, Vec<usize>)],
    idx: usize,
    chosen: &mut [usize],
    load: &mut [usize],
) -> Option<Coloring> {
    if idx == qc_colors.len() {
        return place_and_flow(ctx, stats, qc_colors, group_list, chosen);
    }
    let c = qc_colors[idx];
    for (gi, (mask, members)) in group_list.iter().enumerate() {
        if mask >> c & 1 == 0 || load[gi] == members.len() {
            continue;
        }
        chosen[idx] = gi;
        load[gi] += 1;
        if let Some(col) = assign_groups(ctx, stats, qc_colors, group_list, idx + 1, chosen, load)
        {
            return Some(col);
        }
        load[gi] -= 1;
        chosen[idx] = usize::MAX;
    }
    None
}

/// With compulsory colors routed to groups: place them on the highest-degree
/// group members (most demanding color onto the lowest-degree pick), size
/// the fresh classes, and run the placement flow.
fn place_and_flow(
    ctx: &GuessContext<'_>,
    stats: &mut EquitableStats,
    qc_colors: &[usize],
    group_list: &[(u64, Vec<usize>)],
    chosen: &[usize],
) -> Option<Coloring> {
    stats.flows += 1;
    let sub = ctx.sub;
    let c_sub = ctx.c_sub;

    // holder of each compulsory clique color, as an index into c_sub
    let mut holder = vec![usize::MAX; ctx.kp];
    let mut used = vec![false; c_sub.len()];
    for (gi, (_, members)) in group_list.iter().enumerate() {
        let mut colors: Vec<usize> = qc_colors
            .iter()
            .enumerate()
            .filter(|&(i, _)| chosen[i] == gi)
            .map(|(_, &c)| c)
            .collect();
        if colors.is_empty() {
            continue;
        }
        colors.sort_by_key(|&c| (ctx.mult_i[c], c));
        let mut ordered = members.clone();
        ordered.sort_by_key(|&ci| (std::cmp::Reverse(sub.degree(c_sub[ci])), c_sub[ci]));
        let mut picks = ordered[..colors.len()].to_vec();
        picks.sort_by_key(|&ci| (sub.degree(c_sub[ci]), c_sub[ci]));
        // picks ascend in degree, colors ascend in demand: pair the largest
        // demand with the smallest degree (most non-neighbors)
        for (i, &c) in colors.iter().enumerate() {
            let ci = picks[colors.len() - 1 - i];
            holder[c] = ci;
            used[ci] = true;
        }
    }

    let c_left: Vec<usize> = (0..c_sub.len()).filter(|&ci| !used[ci]).collect();
    let t1 = c_left.len();
    let t2 = ctx.t - ctx.kp - t1; // checked non-negative before the state
    let big_i = ctx.q_fresh.min(t2);
    let big_cf = ctx.q_fresh - big_i;
    debug_assert!(big_cf <= t1);

    // big fresh clique classes go to the lowest-degree leftover vertices
    let mut left_by_degree = c_left.clone();
    left_by_degree.sort_by_key(|&ci| (sub.degree(c_sub[ci]), c_sub[ci]));
    let mut size_of_left: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, &ci) in left_by_degree.iter().enumerate() {
        size_of_left.insert(ci, if i < big_cf { ctx.s + 1 } else { ctx.s });
    }

    enum Fill {
        OldColor(usize),
        CliqueFresh(usize),
        FreeAny,
    }
    let mut classes: Vec<(Color, Fill, usize)> = Vec::new();
    for c in 0..ctx.kp {
        if ctx.mult_i[c] > 0 {
            classes.push((c + 1, Fill::OldColor(c), ctx.mult_i[c]));
        }
    }
    let mut next_color = ctx.kp + 1;
    let mut color_of_left: BTreeMap<usize, Color> = BTreeMap::new();
    for &ci in &c_left {
        color_of_left.insert(ci, next_color);
        classes.push((next_color, Fill::CliqueFresh(ci), size_of_left[&ci] - 1));
        next_color += 1;
    }
    for j in 0..t2 {
        classes.push((
            next_color,
            Fill::FreeAny,
            if j < big_i { ctx.s + 1 } else { ctx.s },
        ));
        next_color += 1;
    }
    debug_assert_eq!(next_color - 1, ctx.t);
    debug_assert_eq!(
        classes.iter().map(|&(_, _, d)| d).sum::<usize>(),
        ctx.i_sub.len()
    );

    let active: Vec<&(Color, Fill, usize)> =
        classes.iter().filter(|&&(_, _, d)| d > 0).collect();
    let source = 0;
    let sink = 1 + active.len() + ctx.i_sub.len();
    let mut net = FlowNetwork::new(sink + 1, source, sink);
    for (ai, &&(_, _, demand)) in active.iter().enumerate() {
        net.add_arc(source, 1 + ai, demand);
    }
    let mut placement_arcs: Vec<(usize, Color, usize)> = Vec::new();
    for ui in 0..ctx.i_sub.len() {
        for (ai, &&(color, ref fill, _)) in active.iter().enumerate() {
            let ok = match *fill {
                Fill::OldColor(c) => {
                    bitset_get(&ctx.i_with[c], ui)
                        && (holder[c] == usize::MAX || bitset_get(&ctx.nonnbr[holder[c]], ui))
                }
                Fill::CliqueFresh(ci) => bitset_get(&ctx.nonnbr[ci], ui),
                Fill::FreeAny => true,
            };
            if ok {
                let arc = net.add_arc(1 + ai, 1 + active.len() + ui, 1);
                placement_arcs.push((arc, color, ui));
            }
        }
        net.add_arc(1 + active.len() + ui, sink, 1);
    }
    let res = max_flow(&net);
    if res.value < ctx.i_sub.len() {
        return None;
    }

    // assemble the coloring over original vertex ids
    let mut map: BTreeMap<Vertex, Color> = BTreeMap::new();
    for (i, &v) in ctx.x.iter().enumerate() {
        map.insert(v, ctx.xcol[i]);
    }
    for c in 0..ctx.kp {
        if holder[c] != usize::MAX {
            map.insert(ctx.kept[c_sub[holder[c]]], c + 1);
        }
    }
    for (&ci, &color) in &color_of_left {
        map.insert(ctx.kept[c_sub[ci]], color);
    }
    for &(arc, color, ui) in &placement_arcs {
        if res.arc_flows[arc] == 1 {
            map.insert(ctx.kept[ctx.i_sub[ui]], color);
        }
    }
    debug_assert_eq!(map.len(), ctx.g.vertex_count());
    Some(Coloring::from_map(map))
}

/// All proper colorings of `G[xs]`, colors numbered by first use (so color
/// permutations are enumerated once).
fn proper_colorings_canonical(g: &Graph, xs: &[Vertex]) -> Vec<Vec<Color>> {
    fn rec(g: &Graph, xs: &[Vertex], i: usize, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if i == xs.len() {
            out.push(cur.clone());
            return;
        }
        let max_used = cur[..i].iter().copied().max().unwrap_or(0);
        for c in 1..=(max_used + 1) {
            let conflict = (0..i).any(|j| cur[j] == c && g.has_edge(xs[j], xs[i]));
            if conflict {
                continue;
            }
            cur[i] = c;
            rec(g, xs, i + 1, cur, out);
            cur[i] = 0;
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<Color> = vec![0; xs.len()];
    rec(g, xs, 0, &mut cur, &mut out);
    out
}

/// Plain exhaustive equitable search, used only when the modulator is the
/// whole vertex set. Independent of the guessing machinery above.
fn exhaustive_equitable(g: &Graph, r: usize) -> Option<Coloring> {
    let n = g.vertex_count();
    for t in 1..=r.min(n) {
        let prof = ClassSizeProfile::new(n, t);
        let mut class_of: Vec<usize> = vec![usize::MAX; n];
        let mut sizes: Vec<usize> = vec![0; t];
        if let Some(coloring) = assign_exhaustive(g, 0, t, &prof, &mut class_of, &mut sizes) {
            return Some(coloring);
        }
    }
    None
}

fn assign_exhaustive(
    g: &Graph,
    v: usize,
    t: usize,
    prof: &ClassSizeProfile,
    class_of: &mut Vec<usize>,
    sizes: &mut Vec<usize>,
) -> Option<Coloring> {
    let n = g.vertex_count();
    if v == n {
        let bigs = sizes.iter().filter(|&&s| s == prof.small_size + 1).count();
        let ok = sizes
            .iter()
            .all(|&s| s == prof.small_size || s == prof.small_size + 1)
            && bigs == prof.big_count;
        if !ok {
            return None;
        }
        let map: BTreeMap<Vertex, Color> = (0..n).map(|u| (u, class_of[u] + 1)).collect();
        return Some(Coloring::from_map(map));
    }
    let used = class_of[..v].iter().copied().max().map_or(0, |m| m + 1);
    for cls in 0..t.min(used + 1) {
        if sizes[cls] == prof.max_class_size() {
            continue;
        }
        if g.neighbors(v).iter().any(|&u| u < v && class_of[u] == cls) {
            continue;
        }
        class_of[v] = cls;
        sizes[cls] += 1;
        if let Some(c) = assign_exhaustive(g, v + 1, t, prof, class_of, sizes) {
            return Some(c);
        }
        sizes[cls] -= 1;
        class_of[v] = usize::MAX;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{all_threshold_sequences, gen_threshold, ThresholdStep::*};
    use crate::io::parse_dimacs;

    fn fig_example() -> Graph {
        parse_dimacs(
            "p edge 7 12\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\ne 5 1\ne 6 1\ne 6 2\ne 7 1\ne 7 2\ne 7 3\n",
        )
        .unwrap()
    }

    #[test]
    fn verify_examples() {
        let k2 = Graph::from_edges(2, [(0, 1)]);
        let mut c = Coloring::new();
        c.set(0, 1);
        c.set(1, 2);
        assert_eq!(verify_equitable(&k2, &c, 2), Ok(true));

        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let mut c = Coloring::new();
        c.set(0, 1);
        c.set(1, 2);
        c.set(2, 1);
        assert_eq!(verify_equitable(&p3, &c, 2), Ok(true));

        let g = fig_example();
        let mut c = Coloring::new();
        for (v, col) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (5, 3), (6, 4)] {
            c.set(v, col);
        }
        assert_eq!(verify_equitable(&g, &c, 4), Ok(true));
        assert_eq!(verify_equitable(&g, &c, 3), Ok(false));
    }

    #[test]
    fn profile_arithmetic() {
        for n in 1..=30 {
            for t in 1..=n {
                let p = ClassSizeProfile::new(n, t);
                assert_eq!(p.big_count, n % t);
                assert_eq!(p.small_count, t - n % t);
                assert_eq!(p.total(), n);
            }
        }
    }

    #[test]
    fn kernel_rule_examples() {
        assert_eq!(kernel_reject(10, 2, 1), KernelDecision::No);
        assert_eq!(kernel_reject(6, 2, 1), KernelDecision::Undecided);
        // boundary: n = r(k+2) exactly stays undecided
        assert_eq!(kernel_reject(6, 3, 0), KernelDecision::Undecided);
    }

    #[test]
    fn threshold_solver_k3() {
        let c = solve_equitable_threshold(&Graph::complete(3), 3)
            .unwrap()
            .unwrap();
        assert_eq!(c.class_sizes().len(), 3);
    }

    #[test]
    fn threshold_solver_example_graph() {
        let g = fig_example();
        let c = solve_equitable_threshold(&g, 4).unwrap().unwrap();
        assert_eq!(verify_equitable(&g, &c, 4), Ok(true));
        let mut sizes: Vec<usize> = c.class_sizes().values().copied().collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2, 2]);
        assert!(solve_equitable_threshold(&g, 3).unwrap().is_none());
    }

    #[test]
    fn threshold_solver_star_variants() {
        // center + 4 leaves: profile 2,2,1 at t=3 works ({c},{w,a},{b,x})
        let star4 = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]);
        let c = solve_equitable_threshold(&star4, 3).unwrap().unwrap();
        assert_eq!(verify_equitable(&star4, &c, 3), Ok(true));
        // center + 5 leaves: t=3 forces profile 2,2,2 but the center's class
        // has size 1, so r=3 is a NO
        let star5 = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert!(solve_equitable_threshold(&star5, 3).unwrap().is_none());
        assert!(solve_equitable_threshold(&star5, 4).unwrap().is_some());
    }

    #[test]
    fn threshold_solver_rejects_non_threshold() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(matches!(
            solve_equitable_threshold(&c4, 2),
            Err(Error::NotThreshold)
        ));
    }

    #[test]
    fn threshold_solver_isolated_vertices() {
        // three isolated vertices fit in one class
        let g = Graph::new(3);
        let c = solve_equitable_threshold(&g, 1).unwrap().unwrap();
        assert_eq!(verify_equitable(&g, &c, 1), Ok(true));
        // a star plus isolated vertices allows classes of size 3
        let g = gen_threshold(&[Isolated, Isolated, Isolated, Universal, Isolated, Isolated])
            .unwrap();
        let c = solve_equitable_threshold(&g, 2).unwrap().unwrap();
        assert_eq!(verify_equitable(&g, &c, 2), Ok(true));
    }

    #[test]
    fn fpt_solves_c4_with_distance_one() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let inst = EquitableInstance::new(c4.clone(), 2, BTreeSet::from([0])).unwrap();
        let c = solve_equitable_fpt(&inst).unwrap().unwrap();
        assert_eq!(verify_equitable(&c4, &c, 2), Ok(true));
    }

    #[test]
    fn fpt_with_empty_modulator_matches_threshold_solver() {
        for (i, seq) in all_threshold_sequences(5).iter().enumerate() {
            let g = gen_threshold(seq).unwrap();
            for r in 1..=5 {
                let a = solve_equitable_threshold(&g, r).unwrap().is_some();
                let inst = EquitableInstance::new(g.clone(), r, BTreeSet::new()).unwrap();
                let b = solve_equitable_fpt(&inst).unwrap().is_some();
                assert_eq!(a, b, "sequence {i}, r={r}");
            }
        }
    }

    #[test]
    fn fpt_full_modulator_falls_back() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let inst = EquitableInstance::new(c4.clone(), 2, BTreeSet::from([0, 1, 2, 3])).unwrap();
        let c = solve_equitable_fpt(&inst).unwrap().unwrap();
        assert_eq!(verify_equitable(&c4, &c, 2), Ok(true));
    }

    #[test]
    fn star_needs_big_classes_off_the_clique() {
        // K1,4 at r=3: the only equitable shape pairs the big classes with a
        // low-degree clique vertex and an independent-only color
        let star4 = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]);
        let inst = EquitableInstance::new(star4.clone(), 3, BTreeSet::new()).unwrap();
        let c = solve_equitable_fpt(&inst).unwrap().unwrap();
        assert_eq!(verify_equitable(&star4, &c, 3), Ok(true));
    }

    #[test]
    fn instance_rejects_bad_modulator() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(EquitableInstance::new(c4, 2, BTreeSet::new()).is_err());
    }
}
