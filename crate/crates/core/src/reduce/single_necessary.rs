//! Replace a necessary set of size `ℓ > 1` by a single necessary vertex `y`.
//!
//! A forbidden `x` is joined to every old necessary vertex, to `y`, and to
//! `ℓ − 1` forbidden pendants. Once `y` is in the alliance, `x` sits on the
//! boundary with `2ℓ` neighbours and only reaches the `+2` margin when all
//! old necessary vertices are inside too. Budget grows by one.

use crate::alliance::{AllianceKind, AnnotatedInstance};
use crate::error::{invalid, Result};
use crate::graph::GraphBuilder;

use super::trace::{ReductionTrace, SizeCheck, Step};

pub fn check_single_necessary_input(inst: &AnnotatedInstance) -> Result<()> {
    inst.validate()?;
    if inst.kind != AllianceKind::StrongOffensive {
        return invalid(format!(
            "expected a strong offensive instance, got {}",
            inst.kind
        ));
    }
    if inst.necessary.is_empty() {
        return invalid("no necessary vertices to collapse");
    }
    Ok(())
}

/// With exactly one necessary vertex the instance is returned unchanged.
pub fn single_necessary(inst: &AnnotatedInstance) -> Result<(AnnotatedInstance, ReductionTrace)> {
    check_single_necessary_input(inst)?;
    let ell = inst.necessary.len();
    let n = inst.graph.n();
    let m = inst.graph.edge_count();
    if ell == 1 {
        let mut trace = ReductionTrace::new(Step::SingleNecessary, inst.budget, inst.budget);
        trace.size = SizeCheck {
            expected_vertices: n,
            actual_vertices: n,
            expected_edges: m,
            actual_edges: m,
        };
        return Ok((inst.clone(), trace));
    }

    let mut trace = ReductionTrace::new(Step::SingleNecessary, inst.budget, inst.budget + 1);
    let mut b = GraphBuilder::from_graph(&inst.graph);
    let x = b.add_vertex();
    let y = b.add_vertex();
    let pendants = b.add_vertices(ell - 1);
    trace.assign("x".into(), x);
    trace.assign("y".into(), y);
    for (j, &p) in pendants.iter().enumerate() {
        trace.assign(format!("x_box[{}]", j + 1), p);
    }
    b.add_edge(x, y)?;
    for v in inst.necessary.iter() {
        b.add_edge(x, v)?;
    }
    for &p in &pendants {
        b.add_edge(x, p)?;
    }
    let graph = b.build()?;
    trace.size = SizeCheck {
        expected_vertices: n + ell + 1,
        actual_vertices: graph.n(),
        expected_edges: m + 2 * ell,
        actual_edges: graph.edge_count(),
    };

    let mut forbidden = inst.forbidden.clone();
    forbidden.insert(x);
    for p in pendants {
        forbidden.insert(p);
    }
    let out = AnnotatedInstance::new(
        graph,
        forbidden,
        [y].into(),
        inst.budget + 1,
        inst.kind,
        inst.cardinality,
    )?;
    Ok((out, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::{validate_forbidden_structure, CardinalityMode};
    use crate::graph::Graph;

    fn with_necessary(n: usize, nec: &[usize], budget: usize) -> AnnotatedInstance {
        AnnotatedInstance::new(
            Graph::path(n),
            Default::default(),
            nec.iter().copied().collect(),
            budget,
            AllianceKind::StrongOffensive,
            CardinalityMode::AtMost,
        )
        .unwrap()
    }

    #[test]
    fn three_necessary_adds_four_vertices() {
        let inst = with_necessary(6, &[0, 2, 4], 7);
        let (out, trace) = single_necessary(&inst).unwrap();
        assert_eq!(out.graph.n(), 10);
        assert_eq!(out.budget, 8);
        assert_eq!(out.necessary.len(), 1);
        assert_eq!(trace.budget_out, trace.budget_in + 1);
        assert!(trace.size.holds());
        assert!(validate_forbidden_structure(&out.graph, &out.forbidden).unwrap());
    }

    #[test]
    fn single_necessary_is_identity() {
        let inst = with_necessary(4, &[1], 2);
        let (out, trace) = single_necessary(&inst).unwrap();
        assert_eq!(out, inst);
        assert!(trace.roles.is_empty());
    }

    #[test]
    fn rejects_empty_necessary_and_wrong_kind() {
        let none = with_necessary(3, &[], 1);
        assert!(single_necessary(&none).is_err());
        let mut weak = with_necessary(3, &[0, 1], 2);
        weak.kind = AllianceKind::Offensive;
        assert!(single_necessary(&weak).is_err());
    }
}
