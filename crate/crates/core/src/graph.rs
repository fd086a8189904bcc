//! Simple undirected graphs over dense vertex ids and the neighbourhood
//! primitives the alliance predicates are built from.

use std::fmt;

use crate::error::{invalid, Error, Result};

pub type Vertex = usize;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted, so every iteration over neighbours is in
/// ascending id order. A `Graph` is immutable once built; use
/// [`GraphBuilder`] to construct one.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, parallel
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        b.build()
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("clique is simple")
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).expect("star is simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_sorted_unchecked((0..self.n()).collect())
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n() {
            return invalid(format!(
                "vertex {v} out of range for graph of order {}",
                self.n()
            ));
        }
        Ok(())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n() => self.check_vertex(v),
            _ => Ok(()),
        }
    }

    /// Open neighbourhood `N(S)`: vertices outside `S` with a neighbour in `S`.
    pub fn boundary(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        let inside = s.to_mask(self.n());
        let mut seen = vec![false; self.n()];
        for v in s.iter() {
            for &w in self.neighbors(v) {
                if !inside[w] {
                    seen[w] = true;
                }
            }
        }
        Ok(VertexSet::from_mask(&seen))
    }

    /// `|N(v) ∩ S|`. Membership of `v` itself in `S` never counts.
    pub fn deg_in(&self, s: &VertexSet, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        Ok(self.neighbors(v).iter().filter(|&&w| s.contains(w)).count())
    }

    /// Connected components of the graph with `removed` deleted, each sorted,
    /// ordered by smallest member.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if removed[start] || comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !removed[w] && comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

/// Append-only graph construction. Gadget reductions allocate vertices in
/// batches and wire them up before freezing the result.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Starts from a copy of `g`; existing ids are preserved.
    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            adj: g.adj.clone(),
            m: g.m,
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Allocates `count` consecutive vertices and returns their ids.
    pub fn add_vertices(&mut self, count: usize) -> Vec<Vertex> {
        let first = self.adj.len();
        self.adj.resize_with(first + count, Vec::new);
        (first..first + count).collect()
    }

    /// Adds `{u, v}`. Parallel edges are detected in [`GraphBuilder::build`].
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return invalid(format!("edge ({u}, {v}) has an endpoint >= {n}"));
        }
        if u == v {
            return invalid(format!("self-loop at vertex {u}"));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(())
    }

    pub fn build(mut self) -> Result<Graph> {
        for (u, ns) in self.adj.iter_mut().enumerate() {
            ns.sort_unstable();
            if let Some(w) = ns.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!(
                    "duplicate edge ({u}, {})",
                    w[0]
                )));
            }
        }
        Ok(Graph {
            adj: self.adj,
            m: self.m,
        })
    }
}

/// A set of vertex ids, stored sorted and deduplicated.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_sorted_unchecked(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(v, _)| v)
                .collect(),
        )
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(pos) => {
                self.0.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// `V(G) \ S` for a graph of order `n`.
    pub fn complement(&self, n: usize) -> VertexSet {
        let mask = self.to_mask(n);
        VertexSet((0..n).filter(|&v| !mask[v]).collect())
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(arr: [Vertex; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn boundary_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.boundary(&[0].into()).unwrap(), [1].into());
        let p3 = Graph::path(3);
        assert_eq!(p3.boundary(&[1].into()).unwrap(), [0, 2].into());
        let isolated = Graph::empty(3);
        assert!(isolated.boundary(&[0].into()).unwrap().is_empty());
        assert!(p3.boundary(&VertexSet::new()).unwrap().is_empty());
    }

    #[test]
    fn boundary_rejects_out_of_range() {
        let p3 = Graph::path(3);
        assert!(matches!(
            p3.boundary(&[3].into()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn deg_in_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.deg_in(&[0].into(), 1).unwrap(), 1);
        let star = Graph::star(3);
        assert_eq!(star.deg_in(&[1].into(), 0).unwrap(), 1);
        assert_eq!(star.deg_in(&[1].into(), 2).unwrap(), 0);
        // own membership does not count
        assert_eq!(star.deg_in(&[0, 1].into(), 0).unwrap(), 1);
        assert!(star.deg_in(&[1].into(), 9).is_err());
    }

    #[test]
    fn builder_rejects_bad_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
    }

    fn arb_graph_and_set() -> impl Strategy<Value = (Graph, VertexSet)> {
        (1usize..12).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            let np = pairs.len();
            (
                proptest::collection::vec(any::<bool>(), np),
                proptest::collection::vec(any::<bool>(), n),
            )
                .prop_map(move |(keep, member)| {
                    let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
                    (
                        Graph::from_edges(n, edges).unwrap(),
                        VertexSet::from_mask(&member),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn degree_splits_between_set_and_complement((g, s) in arb_graph_and_set()) {
            let sc = s.complement(g.n());
            for v in 0..g.n() {
                prop_assert_eq!(g.deg_in(&s, v).unwrap() + g.deg_in(&sc, v).unwrap(), g.degree(v));
            }
        }

        #[test]
        fn boundary_is_disjoint_from_set((g, s) in arb_graph_and_set()) {
            prop_assert!(g.boundary(&s).unwrap().is_disjoint(&s));
            prop_assert!(g.boundary(&g.vertices()).unwrap().is_empty());
        }
    }
}
