//! Exact solvers for annotated alliance instances.
//!
//! [`solve`] forces the necessary vertices in, keeps the forbidden vertices
//! out, and enumerates subsets of the remaining free vertices by increasing
//! size and then lexicographically over ascending ids. The first feasible
//! set is returned, so in `AtMost` mode the witness is the lexicographically
//! smallest among the minimum-size solutions.
//!
//! The enumeration keeps per-vertex inside-degree counters up to date as
//! vertices enter and leave the candidate, so testing a leaf is O(1). A
//! branch is cut only when some vertex that is already fixed outside the
//! candidate sits on the boundary and cannot reach its threshold even if
//! every one of its undecided free neighbours is added. Such a branch has no
//! feasible leaf, so the first leaf found is the same as without the cut.
//!
//! [`naive_solve`] is the independent oracle: it walks every subset of
//! `V(G)` and filters with [`check_solution`].

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::alliance::{check_solution, AnnotatedInstance, CardinalityMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Largest instance order [`naive_solve`] accepts.
pub const NAIVE_MAX_VERTICES: usize = 25;

/// Number of leading free positions whose include/exclude decisions are
/// fanned out as independent tasks in [`solve_parallel`].
const SPLIT_DEPTH: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComputeCap {
    pub max_candidates: u128,
    pub max_vertices: usize,
}

impl Default for ComputeCap {
    fn default() -> Self {
        ComputeCap {
            max_candidates: 100_000_000,
            max_vertices: 1_000_000,
        }
    }
}

impl ComputeCap {
    pub fn with_candidates(max_candidates: u128) -> Self {
        ComputeCap {
            max_candidates,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        }
    }
}

impl std::fmt::Display for Answer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub answer: Answer,
    /// Present iff `answer` is yes.
    pub witness: Option<VertexSet>,
    /// Leaves examined. With several workers this depends on scheduling;
    /// the witness does not.
    pub explored: u64,
}

impl SolveOutcome {
    fn found(witness: VertexSet, explored: u64) -> Self {
        SolveOutcome {
            answer: Answer::Yes,
            witness: Some(witness),
            explored,
        }
    }

    fn none(explored: u64) -> Self {
        SolveOutcome {
            answer: Answer::No,
            witness: None,
            explored,
        }
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Sizes of free-vertex subsets the solver will enumerate, ascending.
fn free_sizes(inst: &AnnotatedInstance, free: usize) -> std::ops::RangeInclusive<usize> {
    let slack = inst.budget - inst.necessary.len();
    match inst.cardinality {
        CardinalityMode::Exact => slack..=slack,
        CardinalityMode::AtMost => {
            let lo = usize::from(inst.necessary.is_empty());
            lo..=slack.min(free)
        }
    }
}

/// Number of candidate sets [`solve`] may have to examine.
pub fn projected_candidates(inst: &AnnotatedInstance) -> u128 {
    let free = inst.free_vertices().len();
    free_sizes(inst, free).fold(0u128, |acc, j| acc.saturating_add(binomial(free, j)))
}

fn precheck(inst: &AnnotatedInstance, cap: &ComputeCap) -> Result<()> {
    inst.validate()?;
    if inst.graph.n() > cap.max_vertices {
        return Err(Error::CapExceeded {
            what: "instance vertices",
            needed: inst.graph.n() as u128,
            cap: cap.max_vertices as u128,
        });
    }
    let projected = projected_candidates(inst);
    if projected > cap.max_candidates {
        return Err(Error::CapExceeded {
            what: "candidate subsets",
            needed: projected,
            cap: cap.max_candidates,
        });
    }
    Ok(())
}

/// Single-threaded exact solve.
pub fn solve(inst: &AnnotatedInstance, cap: &ComputeCap) -> Result<SolveOutcome> {
    precheck(inst, cap)?;
    let free = inst.free_vertices();
    let mut explored = 0;
    for j in free_sizes(inst, free.len()) {
        if j > free.len() {
            break;
        }
        let mut search = Search::new(inst, &free);
        let hit = search.run(0, j);
        explored += search.explored;
        if hit {
            return Ok(SolveOutcome::found(search.witness(), explored));
        }
    }
    Ok(SolveOutcome::none(explored))
}

/// Exact solve split across `threads` workers. Returns the same witness as
/// [`solve`]: tasks are ordered like the sequential search and reduced by
/// first hit in that order.
pub fn solve_parallel(
    inst: &AnnotatedInstance,
    cap: &ComputeCap,
    threads: usize,
) -> Result<SolveOutcome> {
    if threads <= 1 {
        return solve(inst, cap);
    }
    precheck(inst, cap)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
    let free = inst.free_vertices();
    let depth = free.len().min(SPLIT_DEPTH);
    let explored = AtomicU64::new(0);
    pool.install(|| {
        for j in free_sizes(inst, free.len()) {
            if j > free.len() {
                break;
            }
            let hit = prefixes(depth, j, free.len())
                .into_par_iter()
                .find_map_first(|prefix| {
                    let mut search = Search::new(inst, &free);
                    let taken = prefix.iter().filter(|&&b| b).count();
                    let alive = search.apply_prefix(&prefix);
                    let hit = alive && search.run(depth, j - taken);
                    explored.fetch_add(search.explored, Ordering::Relaxed);
                    hit.then(|| search.witness())
                });
            if let Some(w) = hit {
                return Ok(SolveOutcome::found(w, explored.load(Ordering::Relaxed)));
            }
        }
        Ok(SolveOutcome::none(explored.load(Ordering::Relaxed)))
    })
}

/// Include/exclude patterns over the first `depth` free positions that can
/// still extend to `j` picks out of `free`, in sequential search order
/// (include before exclude at every position).
fn prefixes(depth: usize, j: usize, free: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    for code in (0u32..(1 << depth)).rev() {
        let pattern: Vec<bool> = (0..depth)
            .map(|i| code >> (depth - 1 - i) & 1 == 1)
            .collect();
        let taken = pattern.iter().filter(|&&b| b).count();
        if taken <= j && j - taken <= free - depth {
            out.push(pattern);
        }
    }
    out
}

/// Incremental state of the lexicographic subset search.
struct Search<'a> {
    g: &'a Graph,
    free: &'a [Vertex],
    threshold: Option<i64>,
    in_s: Vec<bool>,
    /// Vertex can no longer enter the candidate on this branch.
    fixed_out: Vec<bool>,
    /// Neighbours inside the candidate.
    cnt: Vec<u32>,
    /// Free neighbours not yet decided on this branch.
    avail: Vec<u32>,
    bad: usize,
    dead: usize,
    chosen: Vec<Vertex>,
    forced: usize,
    explored: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a AnnotatedInstance, free: &'a [Vertex]) -> Self {
        let g = &inst.graph;
        let n = g.n();
        let in_s = inst.necessary.to_mask(n);
        let fixed_out = inst.forbidden.to_mask(n);
        let mut is_free = vec![false; n];
        for &v in free {
            is_free[v] = true;
        }
        let mut cnt = vec![0u32; n];
        let mut avail = vec![0u32; n];
        for v in 0..n {
            for &w in g.neighbors(v) {
                if in_s[w] {
                    cnt[v] += 1;
                }
                if is_free[w] {
                    avail[v] += 1;
                }
            }
        }
        let mut s = Search {
            g,
            free,
            threshold: inst.kind.threshold(),
            in_s,
            fixed_out,
            cnt,
            avail,
            bad: 0,
            dead: 0,
            chosen: Vec::new(),
            forced: inst.necessary.len(),
            explored: 0,
        };
        for v in 0..n {
            let (b, d) = s.status(v);
            s.bad += b as usize;
            s.dead += d as usize;
        }
        s.chosen = inst.necessary.iter().collect();
        s
    }

    /// (violates now, can never be repaired on this branch)
    #[inline]
    fn status(&self, v: Vertex) -> (bool, bool) {
        let deg = self.g.degree(v) as i64;
        let cnt = self.cnt[v] as i64;
        let reach = cnt + self.avail[v] as i64;
        match self.threshold {
            Some(t) => {
                let watched = !self.in_s[v] && cnt > 0;
                let bad = watched && 2 * cnt < deg + t;
                let dead = watched && self.fixed_out[v] && 2 * reach < deg + t;
                (bad, dead)
            }
            None => {
                let bad = self.in_s[v] && 2 * cnt + 1 < deg;
                let dead = self.in_s[v] && 2 * reach + 1 < deg;
                (bad, dead)
            }
        }
    }

    #[inline]
    fn update(&mut self, v: Vertex, f: impl FnOnce(&mut Self)) {
        let (b0, d0) = self.status(v);
        f(self);
        let (b1, d1) = self.status(v);
        self.bad = self.bad + b1 as usize - b0 as usize;
        self.dead = self.dead + d1 as usize - d0 as usize;
    }

    fn include(&mut self, w: Vertex) {
        self.update(w, |s| s.in_s[w] = true);
        for &u in self.g.neighbors(w) {
            self.update(u, |s| {
                s.cnt[u] += 1;
                s.avail[u] -= 1;
            });
        }
        self.chosen.push(w);
    }

    fn uninclude(&mut self, w: Vertex) {
        self.chosen.pop();
        for &u in self.g.neighbors(w) {
            self.update(u, |s| {
                s.cnt[u] -= 1;
                s.avail[u] += 1;
            });
        }
        self.update(w, |s| s.in_s[w] = false);
    }

    fn exclude(&mut self, w: Vertex) {
        self.update(w, |s| s.fixed_out[w] = true);
        for &u in self.g.neighbors(w) {
            self.update(u, |s| s.avail[u] -= 1);
        }
    }

    fn unexclude(&mut self, w: Vertex) {
        for &u in self.g.neighbors(w) {
            self.update(u, |s| s.avail[u] += 1);
        }
        self.update(w, |s| s.fixed_out[w] = false);
    }

    fn apply_prefix(&mut self, prefix: &[bool]) -> bool {
        for (p, &take) in prefix.iter().enumerate() {
            if take {
                self.include(self.free[p]);
            } else {
                self.exclude(self.free[p]);
            }
        }
        self.dead == 0
    }

    /// Searches positions `p..` for `remaining` more picks. On success the
    /// state is left at the hit.
    fn run(&mut self, p: usize, remaining: usize) -> bool {
        if self.dead > 0 {
            return false;
        }
        if remaining == 0 {
            self.explored += 1;
            return self.bad == 0 && !self.chosen.is_empty();
        }
        let left = self.free.len() - p;
        if left < remaining {
            return false;
        }
        let w = self.free[p];
        self.include(w);
        if self.run(p + 1, remaining - 1) {
            return true;
        }
        self.uninclude(w);
        if left > remaining {
            self.exclude(w);
            if self.run(p + 1, remaining) {
                return true;
            }
            self.unexclude(w);
        }
        false
    }

    fn witness(&self) -> VertexSet {
        debug_assert!(self.chosen.len() >= self.forced);
        self.chosen.iter().copied().collect()
    }
}

/// Oracle solver: enumerates every subset of `V(G)` and filters with
/// [`check_solution`]. Keeps the smallest feasible set, ties broken
/// lexicographically, so its witness must match [`solve`]'s.
pub fn naive_solve(inst: &AnnotatedInstance, cap: &ComputeCap) -> Result<SolveOutcome> {
    inst.validate()?;
    let n = inst.graph.n();
    if n > NAIVE_MAX_VERTICES {
        return Err(Error::CapExceeded {
            what: "naive solver vertices",
            needed: n as u128,
            cap: NAIVE_MAX_VERTICES as u128,
        });
    }
    let total = 1u128 << n;
    if total > cap.max_candidates {
        return Err(Error::CapExceeded {
            what: "candidate subsets",
            needed: total,
            cap: cap.max_candidates,
        });
    }
    let mut best: Option<VertexSet> = None;
    for mask in 1u64..(1u64 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !check_solution(inst, &s)? {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (s.len(), &s) < (b.len(), b),
        };
        if better {
            best = Some(s);
        }
    }
    Ok(match best {
        Some(w) => SolveOutcome::found(w, total as u64 - 1),
        None => SolveOutcome::none(total as u64 - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliance::AllianceKind::*;
    use CardinalityMode::*;

    fn cap() -> ComputeCap {
        ComputeCap::default()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(28, 14), 40_116_600);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn star_center_is_the_witness() {
        let inst = AnnotatedInstance::plain(Graph::star(3), 1, Offensive, AtMost).unwrap();
        let out = solve(&inst, &cap()).unwrap();
        assert_eq!(out.answer, Answer::Yes);
        assert_eq!(out.witness, Some([0].into()));
    }

    #[test]
    fn k2_has_no_strong_singleton() {
        let inst =
            AnnotatedInstance::plain(Graph::complete(2), 1, StrongOffensive, AtMost).unwrap();
        let out = solve(&inst, &cap()).unwrap();
        assert_eq!(out.answer, Answer::No);
        assert!(out.witness.is_none());
    }

    #[test]
    fn p3_exact_two() {
        let inst = AnnotatedInstance::plain(Graph::path(3), 2, Offensive, Exact).unwrap();
        assert_eq!(solve(&inst, &cap()).unwrap().witness, Some([0, 1].into()));
    }

    #[test]
    fn p3_forced_center() {
        let inst = AnnotatedInstance::new(
            Graph::path(3),
            [0, 2].into(),
            [1].into(),
            1,
            Offensive,
            AtMost,
        )
        .unwrap();
        let out = solve(&inst, &cap()).unwrap();
        assert_eq!(out.witness, Some([1].into()));
        assert_eq!(out.explored, 1);
    }

    #[test]
    fn naive_examples() {
        let inst = AnnotatedInstance::plain(Graph::path(3), 1, Offensive, AtMost).unwrap();
        assert_eq!(naive_solve(&inst, &cap()).unwrap().answer, Answer::Yes);
        let bad = AnnotatedInstance {
            graph: Graph::path(3),
            forbidden: VertexSet::new(),
            necessary: [0, 1].into(),
            budget: 1,
            kind: Offensive,
            cardinality: AtMost,
        };
        assert!(matches!(
            naive_solve(&bad, &cap()),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(solve(&bad, &cap()), Err(Error::InvalidInput(_))));
        let big = AnnotatedInstance::plain(Graph::path(26), 1, Offensive, AtMost).unwrap();
        assert!(matches!(
            naive_solve(&big, &cap()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn cap_exceeded_is_not_no() {
        let inst = AnnotatedInstance::plain(Graph::empty(40), 20, Offensive, AtMost).unwrap();
        assert!(matches!(
            solve(&inst, &cap()),
            Err(Error::CapExceeded { .. })
        ));
        let tiny = ComputeCap {
            max_candidates: 10,
            max_vertices: 3,
        };
        let p4 = AnnotatedInstance::plain(Graph::path(4), 1, Offensive, AtMost).unwrap();
        assert!(matches!(solve(&p4, &tiny), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn defensive_solve() {
        // A lone leaf of a star is a defensive alliance.
        let inst = AnnotatedInstance::plain(Graph::star(3), 1, Defensive, AtMost).unwrap();
        assert_eq!(solve(&inst, &cap()).unwrap().witness, Some([1].into()));
    }

    #[test]
    fn prefixes_follow_search_order() {
        let p = prefixes(2, 1, 3);
        assert_eq!(
            p,
            vec![vec![true, false], vec![false, true], vec![false, false]]
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = Graph::from_edges(
            10,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 0),
                (0, 5),
            ],
        )
        .unwrap();
        for kind in [Offensive, StrongOffensive, Defensive] {
            for budget in 1..=6 {
                let inst = AnnotatedInstance::plain(g.clone(), budget, kind, AtMost).unwrap();
                let a = solve(&inst, &cap()).unwrap();
                let b = solve_parallel(&inst, &cap(), 3).unwrap();
                assert_eq!(a.witness, b.witness);
            }
        }
    }
}
