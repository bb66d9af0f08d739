//! DOT export of Hasse forests: one node per twin class labeled
//! `{members}|w=weight`, directed edges parent → child.

use crate::hasse::HasseForest;

pub fn hasse_to_dot(forest: &HasseForest) -> String {
    let mut out = String::from("digraph hasse {\n");
    for idx in 0..forest.class_count() {
        let members: Vec<&str> = forest.class(idx).iter().map(String::as_str).collect();
        let label = format!("{{{}}}|w={}", members.join(","), forest.weight(idx));
        out.push_str(&format!("  c{} [label=\"{}\"];\n", idx, escape(&label)));
    }
    for child in 0..forest.class_count() {
        if let Some(parent) = forest.parent(child) {
            out.push_str(&format!("  c{parent} -> c{child};\n"));
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
