//! Structural parameters at desk scale: deletion sets into trees of bounded
//! height, feedback vertex sets and treedepth.
//!
//! The height of an unrooted tree is taken over the best root, i.e. its
//! radius `⌈diameter / 2⌉`. Treedepth counts vertices, so `td(K1) = 1`.
//! Trees of height at most `h` have treedepth at most `h + 1`; their
//! treewidth is 1 and their pathwidth is at most `h`, but neither is
//! computed here.

use std::collections::VecDeque;

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::mrss::next_combination;
use crate::solve::ComputeCap;

pub const DELETION_MAX_VERTICES: usize = 20;
pub const TREEDEPTH_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionSetCertificate {
    pub deleted: VertexSet,
    pub height_bound: usize,
    /// `(smallest vertex, height)` for every tree component of `G − D`.
    pub component_heights: Vec<(Vertex, usize)>,
    /// Smallest vertex of every component of `G − D` that contains a cycle.
    pub cyclic_components: Vec<Vertex>,
}

impl DeletionSetCertificate {
    pub fn is_valid(&self) -> bool {
        self.cyclic_components.is_empty()
            && self
                .component_heights
                .iter()
                .all(|&(_, h)| h <= self.height_bound)
    }

    pub fn max_height(&self) -> Option<usize> {
        self.component_heights.iter().map(|&(_, h)| h).max()
    }
}

fn edges_within(g: &Graph, comp: &[Vertex], alive: &[bool]) -> usize {
    comp.iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| alive[w]).count())
        .sum::<usize>()
        / 2
}

/// Farthest vertex from `start` among `alive` vertices, with its distance.
fn farthest(g: &Graph, start: Vertex, alive: &[bool]) -> (Vertex, usize) {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([start]);
    dist[start] = 0;
    let mut best = (start, 0);
    while let Some(v) = queue.pop_front() {
        if dist[v] > best.1 {
            best = (v, dist[v]);
        }
        for &w in g.neighbors(v) {
            if alive[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    best
}

/// Root-optimal height of a tree component: double sweep for the diameter,
/// then halve rounding up.
fn tree_component_height(g: &Graph, comp: &[Vertex], alive: &[bool]) -> Result<usize> {
    if edges_within(g, comp, alive) + 1 != comp.len() {
        return Err(Error::NotATree(comp[0]));
    }
    let (end, _) = farthest(g, comp[0], alive);
    let (_, diameter) = farthest(g, end, alive);
    Ok(diameter.div_ceil(2))
}

/// Height of `g`, which must be a single tree, under the best choice of root.
pub fn component_height(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return invalid("empty graph has no tree component");
    }
    let alive = vec![true; g.n()];
    let comps = g.components_without(&vec![false; g.n()]);
    if comps.len() != 1 {
        return invalid(format!(
            "graph has {} components, expected one",
            comps.len()
        ));
    }
    tree_component_height(g, &comps[0], &alive)
}

/// Checks whether `G − d` is a forest whose components all have height at
/// most `h`, and returns the per-component evidence either way.
pub fn check_deletion_set(
    g: &Graph,
    d: &VertexSet,
    h: usize,
) -> Result<(bool, DeletionSetCertificate)> {
    g.check_set(d)?;
    let removed = d.to_mask(g.n());
    let alive: Vec<bool> = removed.iter().map(|&r| !r).collect();
    let mut cert = DeletionSetCertificate {
        deleted: d.clone(),
        height_bound: h,
        component_heights: Vec::new(),
        cyclic_components: Vec::new(),
    };
    for comp in g.components_without(&removed) {
        match tree_component_height(g, &comp, &alive) {
            Ok(height) => cert.component_heights.push((comp[0], height)),
            Err(_) => cert.cyclic_components.push(comp[0]),
        }
    }
    Ok((cert.is_valid(), cert))
}

pub fn is_forest_after(g: &Graph, d: &VertexSet) -> bool {
    let removed = d.to_mask(g.n());
    let alive: Vec<bool> = removed.iter().map(|&r| !r).collect();
    g.components_without(&removed)
        .iter()
        .all(|c| edges_within(g, c, &alive) + 1 == c.len())
}

/// Smallest set by size, then lexicographically, satisfying `accept`.
fn smallest_set(
    g: &Graph,
    cap: &ComputeCap,
    mut accept: impl FnMut(&VertexSet) -> bool,
) -> Result<VertexSet> {
    let n = g.n();
    if n > DELETION_MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "deletion-set search vertices",
            needed: n as u128,
            cap: DELETION_MAX_VERTICES as u128,
        });
    }
    if (1u128 << n) > cap.max_candidates {
        return Err(Error::CapExceeded {
            what: "deletion-set candidates",
            needed: 1u128 << n,
            cap: cap.max_candidates,
        });
    }
    for size in 0..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let s = VertexSet::from_sorted_unchecked(combo.clone());
            if accept(&s) {
                return Ok(s);
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("deleting every vertex always succeeds")
}

/// Minimum deletion set into trees of height at most `h`.
pub fn min_deletion_set(g: &Graph, h: usize, cap: &ComputeCap) -> Result<VertexSet> {
    smallest_set(g, cap, |d| {
        check_deletion_set(g, d, h)
            .map(|(ok, _)| ok)
            .unwrap_or(false)
    })
}

/// Minimum feedback vertex set.
pub fn fvs_exact(g: &Graph, cap: &ComputeCap) -> Result<VertexSet> {
    smallest_set(g, cap, |d| is_forest_after(g, d))
}

/// Exact treedepth by the elimination recursion
/// `td(G) = 1 + min_v td(G − v)` for connected `G`, maximum over components
/// otherwise, memoised on vertex subsets.
pub fn treedepth_exact(g: &Graph, cap: &ComputeCap) -> Result<usize> {
    let n = g.n();
    if n > TREEDEPTH_MAX_VERTICES || (1u128 << n) > cap.max_candidates {
        return Err(Error::CapExceeded {
            what: "treedepth vertices",
            needed: n as u128,
            cap: TREEDEPTH_MAX_VERTICES as u128,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut memo = vec![u8::MAX; 1 << n];
    Ok(td_rec(&adj, (1u32 << n) - 1, &mut memo) as usize)
}

fn component_of(adj: &[u32], set: u32, start: usize) -> u32 {
    let mut comp = 1u32 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & set & !comp;
        comp |= fresh;
        frontier |= fresh;
    }
    comp
}

fn td_rec(adj: &[u32], set: u32, memo: &mut [u8]) -> u8 {
    if set == 0 {
        return 0;
    }
    if memo[set as usize] != u8::MAX {
        return memo[set as usize];
    }
    let first = set.trailing_zeros() as usize;
    let comp = component_of(adj, set, first);
    let value = if comp != set {
        td_rec(adj, comp, memo).max(td_rec(adj, set & !comp, memo))
    } else if set.count_ones() == 1 {
        1
    } else {
        let mut best = u8::MAX;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            best = best.min(1 + td_rec(adj, set & !(1 << v), memo));
        }
        best
    };
    memo[set as usize] = value;
    value
}
