//! Graphviz rendering of state graphs.

use std::fmt::Write;

use knotstate::states::{self, State};
use knotstate::{LinkDiagram, Smoothing};

/// Undirected DOT graph of G_sigma for the uniform state `s`: circles are
/// vertices `c<i>`, edges are labelled with crossing ids.
pub fn state_graph_dot(d: &LinkDiagram, s: Smoothing) -> knotstate::Result<String> {
    let state = State::uniform(s, d.crossing_count());
    let (_, g, _) = states::graphs(d, &state)?;
    let name = match s {
        Smoothing::A => "G_A",
        Smoothing::B => "G_B",
    };
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertices {
        let _ = writeln!(out, "  c{v};");
    }
    for (x, &(u, v)) in g.edges.iter().enumerate() {
        let _ = writeln!(out, "  c{u} -- c{v} [label=\"{x}\"];");
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use knotstate::notation::parse_braid;

    #[test]
    fn trefoil_triangle() {
        let d = LinkDiagram::braid_closure(&parse_braid("B2: s1^3").unwrap()).unwrap();
        let dot = state_graph_dot(&d, Smoothing::A).unwrap();
        assert!(dot.starts_with("graph G_A {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("c2;").count(), 1);
    }
}
