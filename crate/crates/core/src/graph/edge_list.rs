//! Plain edge lists: one `u v` pair per line, 0-based. Blank lines and lines
//! starting with `#` are ignored. The vertex count is one more than the
//! largest index mentioned, so isolated trailing vertices cannot be expressed.
//! Orientations use the same syntax with each line read as an arc.

use std::fmt::Write as _;

use super::{Graph, GraphError, Orientation};

fn pairs(text: &str) -> impl Iterator<Item = Result<(usize, (usize, usize)), GraphError>> + '_ {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        Some(parse_pair(line_no, line).map(|pair| (line_no, pair)))
    })
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(GraphError::parse(line_no, "expected `<u> <v>`"));
    }
    let mut ends = [0usize; 2];
    for (slot, token) in ends.iter_mut().zip(&fields) {
        *slot = token.parse().map_err(|_| GraphError::parse(line_no, format!("invalid vertex `{token}`")))?;
    }
    let [u, v] = ends;
    if u == v {
        return Err(GraphError::parse(line_no, format!("self-loop at vertex {u}")));
    }
    if u.max(v) == usize::MAX {
        return Err(GraphError::parse(line_no, "vertex index too large"));
    }
    Ok((u, v))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    let mut vertex_count = 0;
    for item in pairs(text) {
        let (_, (u, v)) = item?;
        vertex_count = vertex_count.max(u.max(v) + 1);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(GraphError::parse(text.lines().count().max(1), "no edges"));
    }
    Graph::from_edges(vertex_count, edges)
}

/// An orientation of `base` given as one `u v` arc (`u -> v`) per line, in
/// the edge-list syntax. Every edge of `base` must appear exactly once.
pub fn parse_orientation(base: &Graph, text: &str) -> Result<Orientation, GraphError> {
    let mut arcs = Vec::new();
    for item in pairs(text) {
        let (line_no, (u, v)) = item?;
        if u.max(v) >= base.vertex_count() || !base.has_edge(u, v) {
            return Err(GraphError::parse(line_no, format!("{u} {v} is not an edge of the graph")));
        }
        arcs.push((u, v));
    }
    Orientation::new(base.clone(), arcs)
}

pub fn write_orientation(d: &Orientation) -> String {
    let mut out = String::new();
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
