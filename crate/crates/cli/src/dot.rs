//! DOT export of polytope graphs.

use std::fmt::Write;

use facecycle::complex::{EdgeSet, Graph};

/// The graph with `highlight` edges drawn bold and red.
pub fn graph_dot(name: &str, graph: &Graph, highlight: Option<&EdgeSet>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", name.replace('"', "'"));
    for v in 0..graph.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        if highlight.is_some_and(|h| h.contains(e)) {
            let _ = writeln!(out, "  {u} -- {v} [color=red, penwidth=2];");
        } else {
            let _ = writeln!(out, "  {u} -- {v};");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = EdgeSet::from_indices(&g, [g.edge_id(1, 2).unwrap()]);
        let dot = graph_dot("t", &g, Some(&h));
        assert!(dot.starts_with("graph \"t\" {\n"));
        assert!(dot.contains("  1 -- 2 [color=red, penwidth=2];\n"));
        assert!(dot.contains("  0 -- 1;\n"));
    }
}
