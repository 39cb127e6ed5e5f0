//! File formats: DIMACS `.col` graphs, color-list files, precoloring files,
//! and modulator files. Vertices are 1-based on disk and 0-based in memory.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Color, Coloring, Graph, ListAssignment, Vertex};
use crate::Error;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a DIMACS `.col` graph: `c` comment lines, exactly one
/// `p edge <n> <m>` line, and `e <u> <v>` lines with 1-based endpoints.
/// Duplicate edges (in either orientation) collapse; self-loops are errors.
pub fn parse_dimacs(text: &str) -> Result<Graph, Error> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(lineno, "duplicate 'p' line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(parse_err(lineno, "expected 'p edge <n> <m>'"));
                }
                let n: usize = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad vertex count"))?;
                declared_edges = fields[3]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad edge count"))?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(lineno, "'e' line before 'p' line"))?;
                if fields.len() != 3 {
                    return Err(parse_err(lineno, "expected 'e <u> <v>'"));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad vertex id"))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, "bad vertex id"))?;
                let n = g.vertex_count();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(lineno, format!("vertex out of range 1..={n}")));
                }
                if u == v {
                    return Err(parse_err(lineno, format!("self-loop at vertex {u}")));
                }
                g.add_edge(u - 1, v - 1);
            }
            other => {
                return Err(parse_err(lineno, format!("unknown line type '{other}'")));
            }
        }
    }
    let g = graph.ok_or_else(|| parse_err(0, "missing 'p' line"))?;
    let _ = declared_edges; // informational only; the edge list is authoritative
    Ok(g)
}

/// Writes a graph in DIMACS `.col` form. `parse_dimacs(write_dimacs(g))`
/// reproduces `g` exactly (same vertex ids, same edge set).
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses a list file: one `<vertex>: <color> <color> ...` line per vertex
/// of `g` (1-based, any order), `#` comment lines. Every vertex must get a
/// non-empty list.
pub fn parse_lists(text: &str, g: &Graph) -> Result<ListAssignment, Error> {
    let n = g.vertex_count();
    let mut lists: Vec<Option<BTreeSet<Color>>> = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| parse_err(lineno, "expected '<vertex>: <colors...>'"))?;
        let v: usize = head
            .trim()
            .parse()
            .map_err(|_| parse_err(lineno, "bad vertex id"))?;
        if v == 0 || v > n {
            return Err(parse_err(lineno, format!("unknown vertex {v} (n={n})")));
        }
        if lists[v - 1].is_some() {
            return Err(parse_err(lineno, format!("duplicate list for vertex {v}")));
        }
        let mut set = BTreeSet::new();
        for tok in tail.split_whitespace() {
            let c: Color = tok
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad color '{tok}'")))?;
            if c == 0 {
                return Err(parse_err(lineno, "colors are 1-based"));
            }
            set.insert(c);
        }
        if set.is_empty() {
            return Err(parse_err(lineno, format!("empty list for vertex {v}")));
        }
        lists[v - 1] = Some(set);
    }
    let mut out = Vec::with_capacity(n);
    for (i, entry) in lists.into_iter().enumerate() {
        match entry {
            Some(set) => out.push(set),
            None => return Err(parse_err(0, format!("missing list for vertex {}", i + 1))),
        }
    }
    Ok(ListAssignment::new(out))
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut out = String::new();
    for v in 0..lists.vertex_count() {
        out.push_str(&format!("{}:", v + 1));
        for c in lists.list(v) {
            out.push_str(&format!(" {c}"));
        }
        out.push('\n');
    }
    out
}

/// Parses a precoloring file: `<vertex> <color>` per line, `#` comments.
pub fn parse_precoloring(text: &str, g: &Graph) -> Result<BTreeMap<Vertex, Color>, Error> {
    let n = g.vertex_count();
    let mut map = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(parse_err(lineno, "expected '<vertex> <color>'"));
        }
        let v: usize = fields[0]
            .parse()
            .map_err(|_| parse_err(lineno, "bad vertex id"))?;
        let c: Color = fields[1]
            .parse()
            .map_err(|_| parse_err(lineno, "bad color"))?;
        if v == 0 || v > n {
            return Err(parse_err(lineno, format!("unknown vertex {v} (n={n})")));
        }
        if c == 0 {
            return Err(parse_err(lineno, "colors are 1-based"));
        }
        if map.insert(v - 1, c).is_some() {
            return Err(parse_err(lineno, format!("duplicate entry for vertex {v}")));
        }
    }
    Ok(map)
}

/// Parses a modulator file: one 1-based vertex id per line, `#` comments.
/// An empty file is the empty modulator.
pub fn parse_modulator(text: &str, g: &Graph) -> Result<BTreeSet<Vertex>, Error> {
    let n = g.vertex_count();
    let mut set = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: usize = line
            .parse()
            .map_err(|_| parse_err(lineno, "expected one vertex id per line"))?;
        if v == 0 || v > n {
            return Err(parse_err(lineno, format!("unknown vertex {v} (n={n})")));
        }
        set.insert(v - 1);
    }
    Ok(set)
}

/// Renders a total coloring in the solution format: a `STATUS YES` line then
/// one `<vertex> <color>` line per vertex. `None` renders as `STATUS NO`.
pub fn write_solution(solution: Option<&Coloring>) -> String {
    match solution {
        None => "STATUS NO\n".to_string(),
        Some(c) => {
            let mut out = String::from("STATUS YES\n");
            for (v, col) in c.iter() {
                out.push_str(&format!("{} {}\n", v + 1, col));
            }
            out
        }
    }
}
