//! Graphviz export with lexicographic node and edge order.

use std::fmt::Write as _;

use multiserial::{ArrowId, Quiver};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `dashed` marks the arrows drawn with a dashed line.
pub fn export_dot(q: &Quiver, dashed: impl Fn(ArrowId) -> bool) -> String {
    let mut nodes: Vec<&str> = q.vertex_names().iter().map(String::as_str).collect();
    nodes.sort_unstable();
    let mut edges: Vec<(&str, &str, &str, bool)> = q
        .arrow_ids()
        .map(|a| {
            let arrow = q.arrow(a);
            (q.vertex_name(arrow.source), q.vertex_name(arrow.target), arrow.name.as_str(), dashed(a))
        })
        .collect();
    edges.sort_unstable();

    let mut out = String::from("digraph Q {\n");
    for n in nodes {
        writeln!(out, "  {};", quote(n)).unwrap();
    }
    for (s, t, name, dash) in edges {
        let style = if dash { ", style=dashed" } else { "" };
        writeln!(out, "  {} -> {} [label={}{style}];", quote(s), quote(t), quote(name)).unwrap();
    }
    out.push_str("}\n");
    out
}
