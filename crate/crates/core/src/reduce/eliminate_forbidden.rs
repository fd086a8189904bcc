//! Offensive alliance with forbidden vertices to plain offensive alliance.
//!
//! Every degree-one forbidden vertex `u` becomes the root of a height-2 tree:
//! `4r` children, each with `4r` leaf children. Any alliance touching the
//! forbidden part or these trees then has more than `2r` vertices, so the
//! budget `r` is kept and the forbidden annotations can be dropped.

use crate::alliance::{
    forbidden_structure_violation, pendant_forbidden, AllianceKind, AnnotatedInstance,
};
use crate::error::{invalid, Error, Result};
use crate::graph::{GraphBuilder, VertexSet};
use crate::solve::ComputeCap;

use super::trace::{ReductionTrace, SizeCheck, Step};

/// Vertices added for an input with `pendants` degree-one forbidden vertices.
pub fn eliminate_forbidden_growth(pendants: usize, budget: usize) -> u128 {
    let w = 4 * budget as u128;
    pendants as u128 * w * (w + 1)
}

pub fn check_eliminate_forbidden_input(inst: &AnnotatedInstance) -> Result<()> {
    inst.validate()?;
    if inst.kind != AllianceKind::Offensive {
        return invalid(format!("expected an offensive instance, got {}", inst.kind));
    }
    if !inst.necessary.is_empty() {
        return invalid("necessary vertices are not supported here");
    }
    if let Some(v) = forbidden_structure_violation(&inst.graph, &inst.forbidden) {
        return invalid(format!("forbidden vertex {v} breaks the pendant structure"));
    }
    // Once annotations are dropped an isolated forbidden vertex would be a
    // size-one alliance on its own.
    if let Some(v) = inst.forbidden.iter().find(|&v| inst.graph.degree(v) == 0) {
        return invalid(format!("forbidden vertex {v} is isolated"));
    }
    Ok(())
}

pub fn eliminate_forbidden(
    inst: &AnnotatedInstance,
    cap: &ComputeCap,
) -> Result<(AnnotatedInstance, ReductionTrace)> {
    check_eliminate_forbidden_input(inst)?;
    let r = inst.budget;
    let n = inst.graph.n();
    let m = inst.graph.edge_count();
    let roots = pendant_forbidden(&inst.graph, &inst.forbidden);
    let growth = eliminate_forbidden_growth(roots.len(), r);
    let total = n as u128 + growth;
    if total > cap.max_vertices as u128 {
        return Err(Error::CapExceeded {
            what: "reduced instance vertices",
            needed: total,
            cap: cap.max_vertices as u128,
        });
    }
    let growth = growth as usize;
    let w = 4 * r;

    let mut trace = ReductionTrace::new(Step::EliminateForbidden, r, r);
    let mut b = GraphBuilder::from_graph(&inst.graph);
    for &u in &roots {
        let children = b.add_vertices(w);
        for (j, &c) in children.iter().enumerate() {
            trace.assign(format!("T_u[u={u}].c[{}]", j + 1), c);
            b.add_edge(u, c)?;
        }
        for (j, &c) in children.iter().enumerate() {
            let leaves = b.add_vertices(w);
            for (i, &l) in leaves.iter().enumerate() {
                trace.assign(format!("T_u[u={u}].c[{}].l[{}]", j + 1, i + 1), l);
                b.add_edge(c, l)?;
            }
        }
    }
    let graph = b.build()?;
    trace.size = SizeCheck {
        expected_vertices: n + growth,
        actual_vertices: graph.n(),
        expected_edges: m + growth,
        actual_edges: graph.edge_count(),
    };
    let out = AnnotatedInstance::new(
        graph,
        VertexSet::new(),
        VertexSet::new(),
        r,
        AllianceKind::Offensive,
        inst.cardinality,
    )?;
    Ok((out, trace))
}
