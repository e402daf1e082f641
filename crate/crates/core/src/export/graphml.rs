use std::fmt::Write;

use crate::graph::OperationGraph;

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// GraphML with string keys `label`, `category` and `color` on nodes and
/// `phrase` on edges. Node ids are `n<index>`, edge ids `e<index>`.
pub fn export_graphml(graph: &OperationGraph) -> String {
    let mut out = String::from(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" \
         xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" \
         xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns \
         http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n\
         \x20 <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n\
         \x20 <key id=\"category\" for=\"node\" attr.name=\"category\" attr.type=\"string\"/>\n\
         \x20 <key id=\"color\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n\
         \x20 <key id=\"phrase\" for=\"edge\" attr.name=\"phrase\" attr.type=\"string\"/>\n\
         \x20 <graph id=\"operation\" edgedefault=\"directed\">\n",
    );
    for (i, node) in graph.nodes().iter().enumerate() {
        writeln!(
            out,
            "    <node id=\"n{i}\">\n      \
             <data key=\"label\">{}</data>\n      \
             <data key=\"category\">{}</data>\n      \
             <data key=\"color\">{}</data>\n    \
             </node>",
            xml_escape(&node.surface),
            node.label,
            node.color.as_str()
        )
        .unwrap();
    }
    for (i, edge) in graph.edges().iter().enumerate() {
        writeln!(
            out,
            "    <edge id=\"e{i}\" source=\"n{}\" target=\"n{}\">\n      \
             <data key=\"phrase\">{}</data>\n    \
             </edge>",
            edge.from,
            edge.to,
            xml_escape(&edge.phrase)
        )
        .unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}
