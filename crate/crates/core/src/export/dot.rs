use std::collections::HashSet;
use std::fmt::Write;

use crate::graph::OperationGraph;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Node identifiers: non-alphanumerics become `_`, repeats get `_2`, `_3`...
fn node_ids(graph: &OperationGraph) -> Vec<String> {
    let mut used = HashSet::new();
    graph
        .nodes()
        .iter()
        .map(|n| {
            let base: String = n
                .surface
                .chars()
                .map(|c| if c.is_alphanumeric() { c } else { '_' })
                .collect();
            let mut id = base.clone();
            let mut k = 2;
            while !used.insert(id.clone()) {
                id = format!("{base}_{k}");
                k += 1;
            }
            id
        })
        .collect()
}

pub fn export_dot(graph: &OperationGraph) -> String {
    let ids = node_ids(graph);
    let mut out = String::from("digraph operation {\n");
    for (node, id) in graph.nodes().iter().zip(&ids) {
        writeln!(
            out,
            "  \"{}\" [label=\"{}\", style=filled, fillcolor={}];",
            escape(id),
            escape(&node.surface),
            node.color.as_str()
        )
        .unwrap();
    }
    for edge in graph.edges() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            escape(&ids[edge.from]),
            escape(&ids[edge.to]),
            escape(&edge.phrase)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
