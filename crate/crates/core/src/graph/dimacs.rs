//! DIMACS `.col` reader and writer.
//!
//! The canonical form written by [`write_dimacs`] is the header
//! `p edge <n> <m>` followed by one `e <u> <v>` line per edge, `u < v`,
//! 1-based and sorted lexicographically. Reading it back reproduces the graph.

use std::fmt::Write as _;

use super::{Graph, GraphError};

/// Parses DIMACS `.col` text. Vertices are translated from 1-based to 0-based.
/// Duplicate `e` lines collapse to a single edge. `c` lines and blank lines
/// are ignored. Both `p edge` and `p col` headers are accepted.
pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if vertex_count.is_some() {
                    return Err(GraphError::parse(line_no, "duplicate problem line"));
                }
                let fields: Vec<&str> = tokens.collect();
                if fields.len() != 3 || !matches!(fields[0], "edge" | "col") {
                    return Err(GraphError::parse(line_no, "malformed header, expected `p edge <vertices> <edges>`"));
                }
                let n = parse_count(fields[1], line_no)?;
                parse_count(fields[2], line_no)?;
                vertex_count = Some(n);
            }
            Some("e") => {
                let n = vertex_count.ok_or_else(|| GraphError::parse(line_no, "edge line before problem line"))?;
                let fields: Vec<&str> = tokens.collect();
                if fields.len() != 2 {
                    return Err(GraphError::parse(line_no, "malformed edge line, expected `e <u> <v>`"));
                }
                let u = parse_vertex(fields[0], n, line_no)?;
                let v = parse_vertex(fields[1], n, line_no)?;
                if u == v {
                    return Err(GraphError::parse(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(GraphError::parse(line_no, format!("unknown line type `{other}`")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }

    let n = vertex_count.ok_or_else(|| GraphError::parse(text.lines().count().max(1), "missing problem line"))?;
    Graph::from_edges(n, edges)
}

fn parse_count(token: &str, line: usize) -> Result<usize, GraphError> {
    token.parse().map_err(|_| GraphError::parse(line, format!("invalid count `{token}`")))
}

fn parse_vertex(token: &str, n: usize, line: usize) -> Result<usize, GraphError> {
    let v: usize = token.parse().map_err(|_| GraphError::parse(line, format!("invalid vertex `{token}`")))?;
    if v == 0 || v > n {
        return Err(GraphError::parse(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

/// Canonical DIMACS serialization.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
