use std::fmt::Write;

use super::ColoredGraph;

const PALETTE: [&str; 16] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990",
    "#dcbeff", "#9a6324", "#fffac8", "#800000", "#aaffc3", "#000075",
];

/// Graphviz rendering; fill color cycles through a 16-entry palette by type.
pub fn to_dot(g: &ColoredGraph) -> String {
    let mut out = String::from("graph incidence {\n  node [style=filled];\n");
    for v in 0..g.vertex_count() {
        let ty = g.type_of(v);
        let _ = writeln!(
            out,
            "  n{v} [label=\"{}\", fillcolor=\"{}\", tooltip=\"type {}\"];",
            g.id(v),
            PALETTE[ty % PALETTE.len()],
            g.types()[ty].replace('"', "\\\"")
        );
    }
    for (a, b) in g.edges() {
        let _ = writeln!(out, "  n{a} -- n{b};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_json;

    #[test]
    fn renders_vertices_and_edges() {
        let g = from_json(
            r#"{"types":["x","y"],"vertices":[{"id":"1","type":0},{"id":"2","type":1}],"edges":[["1","2"]]}"#,
        )
        .unwrap();
        let dot = to_dot(&g);
        assert!(dot.starts_with("graph incidence {"));
        assert!(dot.contains("n0 [label=\"1\", fillcolor=\"#e6194b\""));
        assert!(dot.contains("n1 [label=\"2\", fillcolor=\"#3cb44b\""));
        assert!(dot.contains("n0 -- n1;"));
    }
}
