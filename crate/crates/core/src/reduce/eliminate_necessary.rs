//! Strong offensive alliance with one necessary vertex `x` to offensive
//! alliance with forbidden vertices.
//!
//! Two forbidden hubs are added. `x_box` is adjacent to every vertex of `G`
//! except the degree-one forbidden ones, to `n` forbidden pendants, and to a
//! set `T` of `4n` plain vertices. `t_box` is adjacent to `x`, to `T` and to
//! `4n` forbidden pendants. Any nonempty solution puts `x_box` on the
//! boundary, which drags in a vertex of `T`, which puts `t_box` on the
//! boundary, which then forces all of `T ∪ {x}` inside. Because `x_box`
//! costs every boundary vertex of `G` one outside neighbour, the `+1`
//! margin in the output is the `+2` margin in `G`.

use crate::alliance::{
    forbidden_structure_violation, pendant_forbidden, AllianceKind, AnnotatedInstance,
};
use crate::error::{invalid, Result};
use crate::graph::{GraphBuilder, VertexSet};

use super::trace::{ReductionTrace, SizeCheck, Step};

pub fn check_eliminate_necessary_input(inst: &AnnotatedInstance) -> Result<()> {
    inst.validate()?;
    if inst.kind != AllianceKind::StrongOffensive {
        return invalid(format!(
            "expected a strong offensive instance, got {}",
            inst.kind
        ));
    }
    if inst.necessary.len() != 1 {
        return invalid(format!(
            "expected exactly one necessary vertex, got {}",
            inst.necessary.len()
        ));
    }
    if let Some(v) = forbidden_structure_violation(&inst.graph, &inst.forbidden) {
        return invalid(format!("forbidden vertex {v} breaks the pendant structure"));
    }
    Ok(())
}

pub fn eliminate_necessary(
    inst: &AnnotatedInstance,
) -> Result<(AnnotatedInstance, ReductionTrace)> {
    check_eliminate_necessary_input(inst)?;
    let n = inst.graph.n();
    let m = inst.graph.edge_count();
    let x = inst.necessary.iter().next().expect("one necessary vertex");
    let pendants = pendant_forbidden(&inst.graph, &inst.forbidden);

    let mut trace = ReductionTrace::new(Step::EliminateNecessary, inst.budget, inst.budget + 4 * n);
    let mut b = GraphBuilder::from_graph(&inst.graph);
    let t_box = b.add_vertex();
    let x_box = b.add_vertex();
    let t_pend = b.add_vertices(4 * n);
    let x_pend = b.add_vertices(n);
    let t_set = b.add_vertices(4 * n);
    trace.assign("t_box".into(), t_box);
    trace.assign("x_box".into(), x_box);
    for (j, &v) in t_pend.iter().enumerate() {
        trace.assign(format!("t_box[{}]", j + 1), v);
    }
    for (j, &v) in x_pend.iter().enumerate() {
        trace.assign(format!("x_box[{}]", j + 1), v);
    }
    for (j, &v) in t_set.iter().enumerate() {
        trace.assign(format!("T[{}]", j + 1), v);
    }

    b.add_edge(x, t_box)?;
    for &v in &t_pend {
        b.add_edge(t_box, v)?;
    }
    for &v in &t_set {
        b.add_edge(t_box, v)?;
        b.add_edge(x_box, v)?;
    }
    for &v in &x_pend {
        b.add_edge(x_box, v)?;
    }
    for v in (0..n).filter(|v| pendants.binary_search(v).is_err()) {
        b.add_edge(x_box, v)?;
    }
    let graph = b.build()?;
    trace.size = SizeCheck {
        expected_vertices: 9 * n + 2 + n,
        actual_vertices: graph.n(),
        expected_edges: m + 1 + 4 * n + 8 * n + n + (n - pendants.len()),
        actual_edges: graph.edge_count(),
    };

    let mut forbidden = inst.forbidden.clone();
    for v in [t_box, x_box].into_iter().chain(t_pend).chain(x_pend) {
        forbidden.insert(v);
    }
    let out = AnnotatedInstance::new(
        graph,
        forbidden,
        VertexSet::new(),
        inst.budget + 4 * n,
        AllianceKind::Offensive,
        inst.cardinality,
    )?;
    Ok((out, trace))
}
