//! Graphviz export.

use std::fmt::Write;

use super::{Chart, VertexKind};

fn shape(k: VertexKind) -> &'static str {
    match k {
        VertexKind::Black => "point",
        VertexKind::Crossing | VertexKind::Braiding => "circle",
        VertexKind::NucleonOut | VertexKind::NucleonIn => "doublecircle",
        VertexKind::BigNucleonOut | VertexKind::BigNucleonIn => "doubleoctagon",
        VertexKind::Transition(_) => "box",
        VertexKind::SigmaBurstOut(_) | VertexKind::SigmaBurstIn(_) => "diamond",
    }
}

/// Edges keep their orientation; hoops become self-contained two-node cycles.
pub fn to_dot(c: &Chart) -> String {
    let mut s = String::from("digraph chart {\n");
    for (v, vert) in c.vertices().iter().enumerate() {
        let label = if vert.kind == VertexKind::Black { String::new() } else { vert.kind.to_string() };
        let _ = writeln!(s, "  v{v} [shape={}, label=\"{label}\"];", shape(vert.kind));
    }
    for (e, edge) in c.edges().iter().enumerate() {
        match (edge.from, edge.to) {
            (Some(a), Some(b)) => {
                let _ = writeln!(s, "  v{a} -> v{b} [label=\"{}\"];", edge.label);
            }
            _ => {
                let _ = writeln!(s, "  h{e} [shape=none, label=\"\"];");
                let _ = writeln!(s, "  h{e} -> h{e} [label=\"{}\"];", edge.label);
            }
        }
    }
    s.push_str("}\n");
    s
}
