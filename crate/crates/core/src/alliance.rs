//! Offensive, strong offensive and defensive alliance predicates, and the
//! annotated instance shape shared by every problem variant.
//!
//! A nonempty set `S` is an offensive alliance when every vertex `v` of the
//! boundary `N(S)` satisfies `d_S(v) >= d_{S^c}(v) + 1`; strong offensive
//! alliances need `+ 2`. A defensive alliance instead constrains members:
//! `d_S(v) + 1 >= d_{S^c}(v)` for every `v` in `S`.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AllianceKind {
    Offensive,
    StrongOffensive,
    Defensive,
}

impl AllianceKind {
    /// Required surplus of inside over outside neighbours for boundary
    /// vertices. Defensive alliances have no boundary threshold.
    pub fn threshold(self) -> Option<i64> {
        match self {
            AllianceKind::Offensive => Some(1),
            AllianceKind::StrongOffensive => Some(2),
            AllianceKind::Defensive => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AllianceKind::Offensive => "offensive",
            AllianceKind::StrongOffensive => "strong",
            AllianceKind::Defensive => "defensive",
        }
    }
}

impl fmt::Display for AllianceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AllianceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "offensive" => Ok(AllianceKind::Offensive),
            "strong" | "strong_offensive" => Ok(AllianceKind::StrongOffensive),
            "defensive" => Ok(AllianceKind::Defensive),
            other => invalid(format!("unknown alliance kind {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CardinalityMode {
    /// `1 <= |S| <= budget`
    AtMost,
    /// `|S| == budget`
    Exact,
}

impl CardinalityMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CardinalityMode::AtMost => "atmost",
            CardinalityMode::Exact => "exact",
        }
    }

    pub fn admits(self, size: usize, budget: usize) -> bool {
        match self {
            CardinalityMode::AtMost => size >= 1 && size <= budget,
            CardinalityMode::Exact => size == budget,
        }
    }
}

impl FromStr for CardinalityMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "atmost" | "at_most" => Ok(CardinalityMode::AtMost),
            "exact" => Ok(CardinalityMode::Exact),
            other => invalid(format!("unknown cardinality mode {other:?}")),
        }
    }
}

/// Graph plus forbidden set, necessary set, budget, alliance kind and
/// cardinality mode. Plain problems leave both vertex sets empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedInstance {
    pub graph: Graph,
    pub forbidden: VertexSet,
    pub necessary: VertexSet,
    pub budget: usize,
    pub kind: AllianceKind,
    pub cardinality: CardinalityMode,
}

impl AnnotatedInstance {
    pub fn new(
        graph: Graph,
        forbidden: VertexSet,
        necessary: VertexSet,
        budget: usize,
        kind: AllianceKind,
        cardinality: CardinalityMode,
    ) -> Result<Self> {
        let inst = AnnotatedInstance {
            graph,
            forbidden,
            necessary,
            budget,
            kind,
            cardinality,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn plain(
        graph: Graph,
        budget: usize,
        kind: AllianceKind,
        cardinality: CardinalityMode,
    ) -> Result<Self> {
        Self::new(
            graph,
            VertexSet::new(),
            VertexSet::new(),
            budget,
            kind,
            cardinality,
        )
    }

    pub fn validate(&self) -> Result<()> {
        self.graph.check_set(&self.forbidden)?;
        self.graph.check_set(&self.necessary)?;
        if self.budget < 1 {
            return invalid("budget must be at least 1");
        }
        if let Some(v) = self.forbidden.iter().find(|&v| self.necessary.contains(v)) {
            return invalid(format!("vertex {v} is both forbidden and necessary"));
        }
        if self.necessary.len() > self.budget {
            return invalid(format!(
                "{} necessary vertices exceed budget {}",
                self.necessary.len(),
                self.budget
            ));
        }
        Ok(())
    }

    /// Vertices that are neither forbidden nor necessary, ascending.
    pub fn free_vertices(&self) -> Vec<Vertex> {
        (0..self.graph.n())
            .filter(|&v| !self.forbidden.contains(v) && !self.necessary.contains(v))
            .collect()
    }
}

fn margin(g: &Graph, inside: &[bool], v: Vertex, kind: AllianceKind) -> i64 {
    let d_in = g.neighbors(v).iter().filter(|&&w| inside[w]).count() as i64;
    let d_out = g.degree(v) as i64 - d_in;
    match kind.threshold() {
        Some(t) => d_in - d_out - t,
        None => d_in + 1 - d_out,
    }
}

/// Every vertex in the quantified set (the boundary for offensive kinds, `S`
/// itself for defensive) whose margin is negative, as `(vertex, margin)` in
/// ascending vertex order.
pub fn violations(g: &Graph, s: &VertexSet, kind: AllianceKind) -> Result<Vec<(Vertex, i64)>> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptyCandidate);
    }
    let inside = s.to_mask(g.n());
    let quantified = match kind {
        AllianceKind::Defensive => s.clone(),
        _ => g.boundary(s)?,
    };
    Ok(quantified
        .iter()
        .map(|v| (v, margin(g, &inside, v, kind)))
        .filter(|&(_, m)| m < 0)
        .collect())
}

pub fn check_alliance(g: &Graph, s: &VertexSet, kind: AllianceKind) -> Result<bool> {
    Ok(violations(g, s, kind)?.is_empty())
}

/// Full feasibility check of `s` against an annotated instance: cardinality,
/// forbidden avoidance, necessary inclusion and the alliance predicate.
pub fn check_solution(inst: &AnnotatedInstance, s: &VertexSet) -> Result<bool> {
    inst.graph.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptyCandidate);
    }
    if !inst.cardinality.admits(s.len(), inst.budget) {
        return Ok(false);
    }
    if !s.is_disjoint(&inst.forbidden) || !inst.necessary.is_subset(s) {
        return Ok(false);
    }
    check_alliance(&inst.graph, s, inst.kind)
}

/// Checks that every degree-one forbidden vertex has a forbidden neighbour
/// and every forbidden vertex of degree at least two has a degree-one
/// forbidden neighbour. Isolated forbidden vertices are not constrained.
pub fn validate_forbidden_structure(g: &Graph, forbidden: &VertexSet) -> Result<bool> {
    g.check_set(forbidden)?;
    Ok(forbidden_structure_violation(g, forbidden).is_none())
}

/// First forbidden vertex breaking the structural condition, if any.
pub fn forbidden_structure_violation(g: &Graph, forbidden: &VertexSet) -> Option<Vertex> {
    forbidden.iter().find(|&v| {
        let ns = g.neighbors(v);
        match ns.len() {
            0 => false,
            1 => !forbidden.contains(ns[0]),
            _ => !ns
                .iter()
                .any(|&w| g.degree(w) == 1 && forbidden.contains(w)),
        }
    })
}

/// Degree-one forbidden vertices, ascending.
pub fn pendant_forbidden(g: &Graph, forbidden: &VertexSet) -> Vec<Vertex> {
    forbidden.iter().filter(|&v| g.degree(v) == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use AllianceKind::*;

    #[test]
    fn check_alliance_examples() {
        let k2 = Graph::complete(2);
        assert!(check_alliance(&k2, &[0].into(), Offensive).unwrap());
        assert!(!check_alliance(&k2, &[0].into(), StrongOffensive).unwrap());
        let star = Graph::star(3);
        assert!(!check_alliance(&star, &[1].into(), Offensive).unwrap());
        let k3 = Graph::complete(3);
        assert!(check_alliance(&k3, &[0, 1].into(), StrongOffensive).unwrap());
    }

    #[test]
    fn empty_candidate_is_an_error() {
        let k2 = Graph::complete(2);
        assert_eq!(
            check_alliance(&k2, &VertexSet::new(), Offensive),
            Err(Error::EmptyCandidate)
        );
        let inst = AnnotatedInstance::plain(k2, 1, Offensive, CardinalityMode::AtMost).unwrap();
        assert_eq!(
            check_solution(&inst, &VertexSet::new()),
            Err(Error::EmptyCandidate)
        );
    }

    #[test]
    fn violations_examples() {
        let star = Graph::star(3);
        assert_eq!(
            violations(&star, &[1].into(), Offensive).unwrap(),
            vec![(0, -2)]
        );
        assert!(violations(&Graph::path(3), &[1].into(), Offensive)
            .unwrap()
            .is_empty());
        assert_eq!(
            violations(&Graph::complete(2), &[0].into(), StrongOffensive).unwrap(),
            vec![(1, -1)]
        );
    }

    #[test]
    fn defensive_predicate() {
        // In a star, a lone leaf is defensive (1 outside neighbour, 0 + 1 >= 1),
        // the lone center is not (0 + 1 < 3).
        let star = Graph::star(3);
        assert!(check_alliance(&star, &[1].into(), Defensive).unwrap());
        assert_eq!(
            violations(&star, &[0].into(), Defensive).unwrap(),
            vec![(0, -2)]
        );
        assert!(check_alliance(&star, &[0, 1, 2].into(), Defensive).unwrap());
    }

    #[test]
    fn check_solution_examples() {
        let inst = AnnotatedInstance::new(
            Graph::path(3),
            [0].into(),
            [1].into(),
            1,
            Offensive,
            CardinalityMode::AtMost,
        )
        .unwrap();
        assert!(check_solution(&inst, &[1].into()).unwrap());
        assert!(!check_solution(&inst, &[0, 1].into()).unwrap());

        let exact =
            AnnotatedInstance::plain(Graph::path(3), 2, Offensive, CardinalityMode::Exact).unwrap();
        assert!(check_solution(&exact, &[0, 1].into()).unwrap());
        assert!(!check_solution(&exact, &[1].into()).unwrap());
    }

    #[test]
    fn instance_invariants() {
        let p3 = Graph::path(3);
        let overlap = AnnotatedInstance::new(
            p3.clone(),
            [0].into(),
            [0].into(),
            1,
            Offensive,
            CardinalityMode::AtMost,
        );
        assert!(overlap.is_err());
        let too_many = AnnotatedInstance::new(
            p3.clone(),
            VertexSet::new(),
            [0, 1].into(),
            1,
            Offensive,
            CardinalityMode::AtMost,
        );
        assert!(too_many.is_err());
        assert!(AnnotatedInstance::plain(p3, 0, Offensive, CardinalityMode::AtMost).is_err());
    }

    #[test]
    fn forbidden_structure_examples() {
        let k2 = Graph::complete(2);
        assert!(validate_forbidden_structure(&k2, &[0, 1].into()).unwrap());
        assert!(!validate_forbidden_structure(&k2, &[0].into()).unwrap());
        let star = Graph::star(3);
        assert!(validate_forbidden_structure(&star, &[0, 1].into()).unwrap());
        // center alone: degree 3 with no degree-one forbidden neighbour
        assert!(!validate_forbidden_structure(&star, &[0].into()).unwrap());
        // isolated forbidden vertices are unconstrained
        assert!(validate_forbidden_structure(&Graph::empty(2), &[0].into()).unwrap());
    }

    fn arb_graph_set() -> impl Strategy<Value = (Graph, VertexSet)> {
        (2usize..11).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let np = pairs.len();
            (
                proptest::collection::vec(any::<bool>(), np),
                proptest::collection::vec(any::<bool>(), n),
                0..n,
            )
                .prop_map(move |(keep, member, fallback)| {
                    let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
                    let mut s = VertexSet::from_mask(&member);
                    if s.is_empty() {
                        s.insert(fallback);
                    }
                    (Graph::from_edges(n, edges).unwrap(), s)
                })
        })
    }

    proptest! {
        #[test]
        fn whole_vertex_set_is_offensive((g, _s) in arb_graph_set()) {
            prop_assert!(check_alliance(&g, &g.vertices(), Offensive).unwrap());
        }

        #[test]
        fn violations_empty_iff_alliance((g, s) in arb_graph_set()) {
            for kind in [Offensive, StrongOffensive, Defensive] {
                prop_assert_eq!(
                    violations(&g, &s, kind).unwrap().is_empty(),
                    check_alliance(&g, &s, kind).unwrap()
                );
            }
        }

        #[test]
        fn strong_implies_offensive((g, s) in arb_graph_set()) {
            if check_alliance(&g, &s, StrongOffensive).unwrap() {
                prop_assert!(check_alliance(&g, &s, Offensive).unwrap());
            }
        }

        #[test]
        fn absorbing_a_boundary_vertex_never_lowers_inside_degree((g, s) in arb_graph_set()) {
            let boundary = g.boundary(&s).unwrap();
            for v in boundary.iter() {
                let mut grown = s.clone();
                grown.insert(v);
                let after = g.boundary(&grown).unwrap();
                for w in boundary.intersection(&after).iter() {
                    prop_assert!(g.deg_in(&grown, w).unwrap() >= g.deg_in(&s, w).unwrap());
                }
            }
        }
    }
}
