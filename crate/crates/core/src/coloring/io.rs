//! Coloring files: either one `vertex color` pair per line (0-based vertices,
//! colors `1..=k`, `#` comments) or a JSON object `{"k": 3, "colors": [...]}`.
//! The JSON key may also be spelled `coloring`, which makes the output of
//! `rainbow color` a valid coloring file; other keys are ignored.

use std::fmt::Write as _;

use super::{ColoringError, KColoring};

fn parse_error(line: usize, message: impl Into<String>) -> ColoringError {
    ColoringError::Parse { line, message: message.into() }
}

/// Parses either coloring format. The palette size is `k` when given,
/// otherwise the JSON `k`, otherwise the largest color present.
pub fn parse_coloring(text: &str, k: Option<usize>) -> Result<KColoring, ColoringError> {
    if text.trim_start().starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Doc {
            k: Option<usize>,
            #[serde(alias = "coloring")]
            colors: Vec<usize>,
        }
        let doc: Doc = serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.to_string()))?;
        let k = k.or(doc.k).unwrap_or_else(|| doc.colors.iter().copied().max().unwrap_or(0));
        return KColoring::new(k, doc.colors);
    }

    let mut slots: Vec<Option<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [vertex, color] = fields[..] else {
            return Err(parse_error(line_no, "expected `<vertex> <color>`"));
        };
        let vertex: usize = vertex.parse().map_err(|_| parse_error(line_no, format!("invalid vertex `{vertex}`")))?;
        let color: usize = color.parse().map_err(|_| parse_error(line_no, format!("invalid color `{color}`")))?;
        if vertex >= 1 << 24 {
            return Err(parse_error(line_no, format!("vertex {vertex} too large")));
        }
        if vertex >= slots.len() {
            slots.resize(vertex + 1, None);
        }
        if slots[vertex].replace(color).is_some() {
            return Err(parse_error(line_no, format!("vertex {vertex} colored twice")));
        }
    }
    let last = text.lines().count().max(1);
    if slots.is_empty() {
        return Err(parse_error(last, "no colors"));
    }
    let colors = slots
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| parse_error(last, format!("vertex {v} has no color"))))
        .collect::<Result<Vec<_>, _>>()?;
    let k = k.unwrap_or_else(|| colors.iter().copied().max().unwrap_or(0));
    KColoring::new(k, colors)
}

/// Line format, one `vertex color` pair per line.
pub fn write_coloring(f: &KColoring) -> String {
    let mut out = String::new();
    for (v, c) in f.colors().iter().enumerate() {
        writeln!(out, "{v} {c}").unwrap();
    }
    out
}
