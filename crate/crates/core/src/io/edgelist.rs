//! Edge-list text format: one edge per line as two whitespace-separated
//! labels, `#` comments, and `vertex <label>` lines for isolated vertices.

use std::collections::BTreeSet;

use super::ParseError;
use crate::graph::Graph;

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut vertices: BTreeSet<String> = BTreeSet::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", label] => {
                vertices.insert(label.to_string());
            }
            [a, b] => {
                vertices.insert(a.to_string());
                vertices.insert(b.to_string());
                edges.push((a.to_string(), b.to_string()));
            }
            _ => {
                return Err(ParseError::new(
                    idx + 1,
                    format!("expected `a b` or `vertex a`, got `{line}`"),
                ))
            }
        }
    }
    Graph::build(vertices, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn write(graph: &Graph) -> String {
    let mut out = String::new();
    for v in graph.vertices() {
        if graph.closed_neighborhood(v).map(|n| n.len()) == Ok(1) {
            out.push_str("vertex ");
            out.push_str(v);
            out.push('\n');
        }
    }
    for (a, b) in graph.edges() {
        out.push_str(&a);
        out.push(' ');
        out.push_str(&b);
        out.push('\n');
    }
    out
}
