//! Graphviz rendering for offline inspection. Forbidden vertices are red
//! boxes, necessary vertices are triangles, witness members are filled green.

use std::fmt::Write as _;

use crate::alliance::AnnotatedInstance;
use crate::graph::VertexSet;

pub fn to_dot(inst: &AnnotatedInstance, witness: Option<&VertexSet>) -> String {
    let mut out = String::from("graph oa {\n  node [shape=circle];\n");
    for v in 0..inst.graph.n() {
        let mut attrs = Vec::new();
        if inst.forbidden.contains(v) {
            attrs.push("shape=box, color=red");
        } else if inst.necessary.contains(v) {
            attrs.push("shape=triangle");
        }
        if witness.is_some_and(|w| w.contains(v)) {
            attrs.push("style=filled, fillcolor=palegreen");
        }
        if attrs.is_empty() {
            writeln!(out, "  {v};").unwrap();
        } else {
            writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
        }
    }
    for (u, v) in inst.graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
