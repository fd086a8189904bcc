//! MRSS to strong offensive alliance with forbidden and necessary vertices.
//!
//! Every vector `s` becomes a tree `T_s` hanging off a hub `a`; every
//! coordinate `i` becomes a forbidden vertex `u_i` that is satisfied exactly
//! when the chosen trees cover `t(i)`. Removing `U ∪ {a}` leaves trees of
//! height at most 5.
//!
//! Vertex ids are allocated in this order:
//!
//! 1. `u_1 .. u_k`
//! 2. per kept vector `s` (source index order): `A_s`, `B_s`, `A_s^box`,
//!    `B_s^box`, `C_s`, the five necessary `z` leaves, `z_box[s]`, `x_s`,
//!    `y_s`, `z_s`
//! 3. `a`, its three necessary pendants, `a_box`
//! 4. per coordinate `i`: the forbidden pendants of `u_i`, then its
//!    necessary pendants
//!
//! Role names use the source vector index `s` (0-based, as in MRSS witnesses)
//! and 1-based element indices. `u_i` is attached to the first `s(i)`
//! vertices of `A_s`.
//!
//! All-zero vectors are left out of the construction and listed in
//! [`ReductionTrace::dropped_vectors`]. They never help an MRSS witness, and
//! their tree cannot be satisfied when unused: with `max(s) = 0`, `y_s` sees
//! two `C_s` vertices inside against `z_s` outside, short of the `+2` margin.

use crate::alliance::{AllianceKind, AnnotatedInstance, CardinalityMode};
use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, Vertex, VertexSet};
use crate::mrss::MrssInstance;

use super::trace::{ReductionTrace, SizeCheck, Step};

fn max_entry(s: &[u64]) -> usize {
    s.iter().copied().max().unwrap_or(0) as usize
}

/// Checks the gadget's preconditions: every coordinate has a positive column
/// sum that reaches the target.
pub fn check_mrss_gadget_input(inst: &MrssInstance) -> Result<()> {
    inst.validate()?;
    for i in 0..inst.dim() {
        let col = inst.column_sum(i);
        if col < inst.target[i] {
            return Err(Error::Unrepresentable(format!(
                "coordinate {i}: column sum {col} < target {}; the instance is trivially no",
                inst.target[i]
            )));
        }
        if col == 0 {
            return Err(Error::Unrepresentable(format!(
                "coordinate {i} is zero in every vector; drop it before reducing"
            )));
        }
    }
    Ok(())
}

/// `Σ_i 2(Σ_s s(i) − t(i) + 1) + Σ_s 2(max(s)+1) + 5n + 3 + k'` over the
/// vectors that get a tree.
pub fn mrss_gadget_budget(inst: &MrssInstance) -> usize {
    let coords: usize = (0..inst.dim())
        .map(|i| 2 * (inst.column_sum(i) - inst.target[i] + 1) as usize)
        .sum();
    let kept = kept_vectors(inst, false);
    let trees: usize = kept
        .iter()
        .map(|&s| 2 * (max_entry(&inst.vectors[s]) + 1))
        .sum();
    coords + trees + 5 * kept.len() + 3 + inst.kprime
}

fn kept_vectors(inst: &MrssInstance, keep_zero: bool) -> Vec<usize> {
    (0..inst.vectors.len())
        .filter(|&s| keep_zero || inst.vectors[s].iter().any(|&x| x > 0))
        .collect()
}

pub fn reduce_mrss(inst: &MrssInstance) -> Result<(AnnotatedInstance, ReductionTrace)> {
    build(inst, false)
}

/// The construction proper. `keep_zero` builds trees for all-zero vectors
/// too; only used to exhibit why they are dropped.
pub(crate) fn build(
    inst: &MrssInstance,
    keep_zero: bool,
) -> Result<(AnnotatedInstance, ReductionTrace)> {
    check_mrss_gadget_input(inst)?;
    let k = inst.dim();
    let kept = kept_vectors(inst, keep_zero);
    let cols: Vec<usize> = (0..k).map(|i| inst.column_sum(i) as usize).collect();
    let slack: Vec<usize> = (0..k).map(|i| cols[i] - inst.target[i] as usize).collect();

    let coord_budget: usize = slack.iter().map(|&d| 2 * (d + 1)).sum();
    let tree_budget: usize = kept
        .iter()
        .map(|&s| 2 * (max_entry(&inst.vectors[s]) + 1))
        .sum();
    let budget = coord_budget + tree_budget + 5 * kept.len() + 3 + inst.kprime;

    let mut trace = ReductionTrace::new(Step::MrssGadget, inst.kprime, budget);
    trace.dropped_vectors = (0..inst.vectors.len())
        .filter(|s| !kept.contains(s))
        .collect();

    let mut b = GraphBuilder::new(0);
    let mut forbidden = Vec::new();
    let mut necessary = Vec::new();

    let u: Vec<Vertex> = b.add_vertices(k);
    for (i, &v) in u.iter().enumerate() {
        trace.assign(format!("u_{}", i + 1), v);
    }
    forbidden.extend(&u);

    let mut hub_edges: Vec<Vertex> = Vec::new();
    for &s in &kept {
        let vec_s = &inst.vectors[s];
        let width = max_entry(vec_s) + 1;
        let a_s = b.add_vertices(width);
        let b_s = b.add_vertices(width);
        let a_box = b.add_vertices(width);
        let b_box = b.add_vertices(width);
        let c_s = b.add_vertices(2 * width);
        let z_nec = b.add_vertices(5);
        let z_box = b.add_vertex();
        let x_s = b.add_vertex();
        let y_s = b.add_vertex();
        let z_s = b.add_vertex();

        for (name, group) in [
            ("a", &a_s),
            ("b", &b_s),
            ("a_box", &a_box),
            ("b_box", &b_box),
            ("c", &c_s),
            ("z_nec", &z_nec),
        ] {
            for (j, &v) in group.iter().enumerate() {
                trace.assign(format!("{name}[s={s},i={}]", j + 1), v);
            }
        }
        trace.assign(format!("z_box[s={s}]"), z_box);
        trace.assign(format!("x_s[{s}]"), x_s);
        trace.assign(format!("y_s[{s}]"), y_s);
        trace.assign(format!("z_s[{s}]"), z_s);

        for j in 0..width {
            b.add_edge(a_box[j], b_box[j])?;
            b.add_edge(a_box[j], a_s[j])?;
            b.add_edge(a_box[j], b_s[j])?;
            b.add_edge(x_s, a_box[j])?;
        }
        for &z in &z_nec {
            b.add_edge(z_s, z)?;
        }
        b.add_edge(z_s, z_box)?;
        b.add_edge(x_s, z_s)?;
        b.add_edge(z_s, y_s)?;
        for &c in &c_s {
            b.add_edge(y_s, c)?;
        }
        for i in 0..k {
            for &v in &a_s[..vec_s[i] as usize] {
                b.add_edge(u[i], v)?;
            }
        }

        forbidden.extend(&a_box);
        forbidden.extend(&b_box);
        forbidden.extend([z_s, z_box]);
        necessary.extend(&z_nec);
        hub_edges.extend(&a_s);
        hub_edges.extend(&b_s);
        hub_edges.extend(&c_s);
    }

    let a = b.add_vertex();
    let a_nec = b.add_vertices(3);
    let a_box = b.add_vertex();
    trace.assign("a".into(), a);
    for (j, &v) in a_nec.iter().enumerate() {
        trace.assign(format!("a_nec[{}]", j + 1), v);
    }
    trace.assign("a_box".into(), a_box);
    for &v in a_nec.iter().chain([&a_box]).chain(&hub_edges) {
        b.add_edge(a, v)?;
    }
    forbidden.extend([a, a_box]);
    necessary.extend(&a_nec);

    for i in 0..k {
        let boxes = b.add_vertices(cols[i]);
        let nec = b.add_vertices(2 * slack[i] + 2);
        for (j, &v) in boxes.iter().enumerate() {
            trace.assign(format!("u_box[i={},j={}]", i + 1, j + 1), v);
            b.add_edge(u[i], v)?;
        }
        for (j, &v) in nec.iter().enumerate() {
            trace.assign(format!("u_nec[i={},j={}]", i + 1, j + 1), v);
            b.add_edge(u[i], v)?;
        }
        forbidden.extend(boxes);
        necessary.extend(nec);
    }

    let graph = b.build()?;
    let tree_vertices: usize = kept
        .iter()
        .map(|&s| 6 * max_entry(&inst.vectors[s]) + 15)
        .sum();
    let tree_edges: usize = kept
        .iter()
        .map(|&s| 6 * max_entry(&inst.vectors[s]) + 14)
        .sum();
    let hub_degree: usize = kept
        .iter()
        .map(|&s| 4 * (max_entry(&inst.vectors[s]) + 1))
        .sum();
    let col_total: usize = cols.iter().sum();
    let pendants: usize = (0..k).map(|i| cols[i] + 2 * slack[i] + 2).sum();
    trace.size = SizeCheck {
        expected_vertices: k + 5 + tree_vertices + pendants,
        actual_vertices: graph.n(),
        expected_edges: tree_edges + 4 + hub_degree + col_total + pendants,
        actual_edges: graph.edge_count(),
    };

    let reduced = AnnotatedInstance::new(
        graph,
        forbidden.into_iter().collect(),
        necessary.into_iter().collect(),
        budget,
        AllianceKind::StrongOffensive,
        CardinalityMode::AtMost,
    )?;
    Ok((reduced, trace))
}

/// The alliance the forward direction of the equivalence builds from an MRSS
/// witness `chosen`: all necessary vertices, `A_s ∪ B_s ∪ {x_s}` for chosen
/// trees and `C_s` for the others.
pub fn mrss_forward_witness(
    inst: &MrssInstance,
    reduced: &AnnotatedInstance,
    trace: &ReductionTrace,
    chosen: &[usize],
) -> Result<VertexSet> {
    let mut out = reduced.necessary.clone();
    for s in 0..inst.vectors.len() {
        if trace.dropped_vectors.contains(&s) {
            continue;
        }
        let width = max_entry(&inst.vectors[s]) + 1;
        if chosen.contains(&s) {
            for j in 1..=width {
                out.insert(trace.expect(&format!("a[s={s},i={j}]"))?);
                out.insert(trace.expect(&format!("b[s={s},i={j}]"))?);
            }
            out.insert(trace.expect(&format!("x_s[{s}]"))?);
        } else {
            for j in 1..=2 * width {
                out.insert(trace.expect(&format!("c[s={s},i={j}]"))?);
            }
        }
    }
    Ok(out)
}

/// The deletion set `U ∪ {a}` that leaves trees of height at most 5.
pub fn mrss_gadget_deletion_set(inst: &MrssInstance, trace: &ReductionTrace) -> Result<VertexSet> {
    let mut d: VertexSet = (1..=inst.dim())
        .map(|i| trace.expect(&format!("u_{i}")))
        .collect::<Result<_>>()?;
    d.insert(trace.expect("a")?);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::{check_solution, validate_forbidden_structure};
    use crate::mrss::mrss_solve;
    use crate::solve::{solve, Answer, ComputeCap};

    fn m1() -> MrssInstance {
        MrssInstance::new(1, vec![vec![1]], vec![1]).unwrap()
    }

    #[test]
    fn minimal_instance_shape() {
        let (red, trace) = reduce_mrss(&m1()).unwrap();
        assert_eq!(red.graph.n(), 30);
        assert_eq!(red.budget, 15);
        assert_eq!(red.necessary.len(), 10);
        assert_eq!(red.forbidden.len(), 10);
        assert_eq!(red.free_vertices().len(), 10);
        assert!(trace.size.holds(), "{:?}", trace.size);
        assert!(trace.is_injective());
        assert_eq!(trace.roles.len(), 30);
        assert!(validate_forbidden_structure(&red.graph, &red.forbidden).unwrap());
    }

    #[test]
    fn minimal_instance_is_yes_with_forward_witness() {
        let inst = m1();
        let (red, trace) = reduce_mrss(&inst).unwrap();
        let w = mrss_forward_witness(&inst, &red, &trace, &[0]).unwrap();
        assert!(check_solution(&red, &w).unwrap());
        // V△ ∪ A_s ∪ B_s ∪ {x_s}
        assert_eq!(w.len(), 10 + 2 + 2 + 1);
        let out = solve(&red, &ComputeCap::default()).unwrap();
        assert_eq!(out.answer, Answer::Yes);
        assert!(check_solution(&red, out.witness.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn three_vector_instance_budget() {
        let inst =
            MrssInstance::new(2, vec![vec![2, 1], vec![1, 1], vec![1, 2]], vec![3, 3]).unwrap();
        assert_eq!(mrss_gadget_budget(&inst), 44);
        let (red, trace) = reduce_mrss(&inst).unwrap();
        assert_eq!(red.budget, 44);
        assert!(trace.size.holds());
        let w = mrss_solve(&inst, &ComputeCap::default())
            .unwrap()
            .witness
            .unwrap();
        let r = mrss_forward_witness(&inst, &red, &trace, &w).unwrap();
        assert!(check_solution(&red, &r).unwrap());
    }

    #[test]
    fn tree_size_is_six_max_plus_fifteen() {
        for m in 1..5u64 {
            let inst = MrssInstance::new(1, vec![vec![m]], vec![1]).unwrap();
            let (red, _) = reduce_mrss(&inst).unwrap();
            // k + 5 + tree + Σ s(i) + (2Σ s(i) − 2t(i) + 2)
            let tree = red.graph.n() - (1 + 5 + m as usize + (2 * m as usize));
            assert_eq!(tree, 6 * m as usize + 15);
        }
    }

    #[test]
    fn no_instance_maps_to_no() {
        let inst = MrssInstance::new(1, vec![vec![2], vec![1]], vec![3]).unwrap();
        let (red, _) = reduce_mrss(&inst).unwrap();
        assert_eq!(
            solve(&red, &ComputeCap::default()).unwrap().answer,
            Answer::No
        );
    }

    #[test]
    fn preconditions() {
        let short = MrssInstance::new(1, vec![vec![1]], vec![2]).unwrap();
        assert!(matches!(
            reduce_mrss(&short),
            Err(Error::Unrepresentable(_))
        ));
        let dead_coord = MrssInstance::new(1, vec![vec![1, 0]], vec![1, 0]).unwrap();
        assert!(matches!(
            reduce_mrss(&dead_coord),
            Err(Error::Unrepresentable(_))
        ));
    }

    #[test]
    fn zero_vectors_are_dropped() {
        let inst = MrssInstance::new(1, vec![vec![0], vec![2]], vec![1]).unwrap();
        assert_eq!(
            mrss_solve(&inst, &ComputeCap::default()).unwrap().answer,
            Answer::Yes
        );

        // Keeping the zero vector's tree turns this yes instance into a no.
        let (literal, _) = build(&inst, true).unwrap();
        assert_eq!(
            solve(&literal, &ComputeCap::default()).unwrap().answer,
            Answer::No
        );

        let (red, trace) = reduce_mrss(&inst).unwrap();
        assert_eq!(trace.dropped_vectors, vec![0]);
        assert!(trace.vertex("x_s[0]").is_none());
        assert!(trace.size.holds());
        assert_eq!(
            solve(&red, &ComputeCap::default()).unwrap().answer,
            Answer::Yes
        );
        let w = mrss_forward_witness(&inst, &red, &trace, &[1]).unwrap();
        assert!(check_solution(&red, &w).unwrap());
    }
}
