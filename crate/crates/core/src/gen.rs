//! Seeded random instance generators.
//!
//! Annotated profiles plant forbidden vertices as pendant pairs: a forbidden
//! hub wired into the plain part plus a forbidden leaf hanging off it. That
//! keeps every generated instance inside the forbidden-vertex structure the
//! reductions require. Vertex ids are shuffled afterwards.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alliance::{AllianceKind, AnnotatedInstance, CardinalityMode};
use crate::error::{invalid, Result};
use crate::graph::{Graph, VertexSet};
use crate::mrss::MrssInstance;

#[derive(Debug, Clone, PartialEq)]
pub struct AnnotatedProfile {
    /// Plain (non-forbidden) vertices, including necessary ones.
    pub plain: RangeInclusive<usize>,
    pub edge_prob: f64,
    /// Forbidden hub/leaf pairs.
    pub pairs: RangeInclusive<usize>,
    pub necessary: RangeInclusive<usize>,
    pub budget: RangeInclusive<usize>,
    pub kinds: Vec<AllianceKind>,
    pub cards: Vec<CardinalityMode>,
    /// Plain vertices are dropped (down to the profile minimum) to respect this.
    pub max_vertices: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MrssProfile {
    pub dims: RangeInclusive<usize>,
    pub vectors: RangeInclusive<usize>,
    pub entries: RangeInclusive<u64>,
    pub target: RangeInclusive<u64>,
    pub kprime: RangeInclusive<usize>,
    /// Resample until every column sum reaches `max(t(i), 1)`.
    pub reducible: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Profile {
    Annotated(AnnotatedProfile),
    Mrss(MrssProfile),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Annotated(AnnotatedInstance),
    Mrss(MrssInstance),
}

use AllianceKind::*;
use CardinalityMode::*;

impl Profile {
    pub const NAMES: [&'static str; 6] = ["mixed", "plain", "soafn", "soafn-single", "oaf", "mrss"];

    /// Named presets:
    ///
    /// - `mixed`: up to 14 vertices, every kind and cardinality, with
    ///   forbidden and necessary annotations
    /// - `plain`: up to 12 vertices, no annotations
    /// - `soafn`: strong offensive, 2 to 4 necessary vertices, up to 10 vertices
    /// - `soafn-single`: strong offensive, one necessary vertex, up to 6
    ///   vertices and budget at most 3
    /// - `oaf`: offensive with at least one forbidden pair, no necessary
    ///   vertices, up to 8 vertices and budget at most 2
    /// - `mrss`: dimension 1-2, 1-2 vectors, entries in 0..=2, targets in
    ///   1..=2, `k'` in 1..=2, all column sums reaching the target
    pub fn by_name(name: &str) -> Result<Profile> {
        let p = match name {
            "mixed" => Profile::Annotated(AnnotatedProfile {
                plain: 3..=10,
                edge_prob: 0.35,
                pairs: 0..=2,
                necessary: 0..=2,
                budget: 1..=5,
                kinds: vec![Offensive, StrongOffensive, Defensive],
                cards: vec![AtMost, Exact],
                max_vertices: 14,
            }),
            "plain" => Profile::Annotated(AnnotatedProfile {
                plain: 2..=12,
                edge_prob: 0.3,
                pairs: 0..=0,
                necessary: 0..=0,
                budget: 1..=5,
                kinds: vec![Offensive, StrongOffensive, Defensive],
                cards: vec![AtMost, Exact],
                max_vertices: 12,
            }),
            "soafn" => Profile::Annotated(AnnotatedProfile {
                plain: 3..=8,
                edge_prob: 0.4,
                pairs: 0..=1,
                necessary: 2..=4,
                budget: 2..=7,
                kinds: vec![StrongOffensive],
                cards: vec![AtMost],
                max_vertices: 10,
            }),
            "soafn-single" => Profile::Annotated(AnnotatedProfile {
                plain: 2..=3,
                edge_prob: 0.5,
                pairs: 0..=2,
                necessary: 1..=1,
                budget: 1..=3,
                kinds: vec![StrongOffensive],
                cards: vec![AtMost],
                max_vertices: 6,
            }),
            "oaf" => Profile::Annotated(AnnotatedProfile {
                plain: 2..=6,
                edge_prob: 0.4,
                pairs: 1..=2,
                necessary: 0..=0,
                budget: 1..=2,
                kinds: vec![Offensive],
                cards: vec![AtMost],
                max_vertices: 8,
            }),
            "mrss" => Profile::Mrss(MrssProfile {
                dims: 1..=2,
                vectors: 1..=2,
                entries: 0..=2,
                target: 1..=2,
                kprime: 1..=2,
                reducible: true,
            }),
            other => {
                return invalid(format!(
                    "unknown profile {other:?}; known: {}",
                    Profile::NAMES.join(", ")
                ))
            }
        };
        Ok(p)
    }
}

pub fn gen_random(seed: u64, profile: &Profile) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match profile {
        Profile::Annotated(p) => gen_annotated(&mut rng, p).map(Generated::Annotated),
        Profile::Mrss(p) => gen_mrss(&mut rng, p).map(Generated::Mrss),
    }
}

/// Shorthand for annotated profiles.
pub fn gen_annotated_seeded(seed: u64, profile: &Profile) -> Result<AnnotatedInstance> {
    match gen_random(seed, profile)? {
        Generated::Annotated(inst) => Ok(inst),
        Generated::Mrss(_) => invalid("profile generates MRSS instances"),
    }
}

pub fn gen_mrss_seeded(seed: u64, profile: &Profile) -> Result<MrssInstance> {
    match gen_random(seed, profile)? {
        Generated::Mrss(inst) => Ok(inst),
        Generated::Annotated(_) => invalid("profile generates annotated instances"),
    }
}

fn check_annotated(p: &AnnotatedProfile) -> Result<()> {
    if p.plain.is_empty() || p.pairs.is_empty() || p.necessary.is_empty() || p.budget.is_empty() {
        return invalid("profile has an empty range");
    }
    if p.kinds.is_empty() || p.cards.is_empty() {
        return invalid("profile needs at least one kind and one cardinality mode");
    }
    if *p.necessary.start() > *p.plain.end() {
        return invalid("more necessary vertices than plain vertices");
    }
    if *p.necessary.start() > *p.budget.end() {
        return invalid("necessary vertices cannot fit in the budget");
    }
    if *p.budget.end() == 0 {
        return invalid("budget must allow at least 1");
    }
    if p.plain.start().max(p.necessary.start()) + 2 * p.pairs.start() > p.max_vertices {
        return invalid("smallest instance of the profile exceeds max_vertices");
    }
    if !(0.0..=1.0).contains(&p.edge_prob) {
        return invalid("edge probability must lie in [0, 1]");
    }
    Ok(())
}

fn gen_annotated(rng: &mut ChaCha8Rng, p: &AnnotatedProfile) -> Result<AnnotatedInstance> {
    check_annotated(p)?;
    let pairs = rng.gen_range(p.pairs.clone());
    let floor = (*p.plain.start()).max(*p.necessary.start());
    let mut plain = rng.gen_range(p.plain.clone()).max(floor);
    plain = plain
        .min(p.max_vertices.saturating_sub(2 * pairs))
        .max(floor);
    let n = plain + 2 * pairs;

    let mut edges = Vec::new();
    for u in 0..plain {
        for v in u + 1..plain {
            if rng.gen_bool(p.edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let mut forbidden = Vec::new();
    for j in 0..pairs {
        let hub = plain + 2 * j;
        let leaf = hub + 1;
        edges.push((hub, leaf));
        forbidden.extend([hub, leaf]);
        let attach = rng.gen_range(0..=plain.min(2));
        let mut targets: Vec<usize> = (0..plain).collect();
        targets.shuffle(rng);
        for &t in &targets[..attach] {
            edges.push((hub, t));
        }
    }

    let nec_count = rng.gen_range(p.necessary.clone()).min(plain);
    let mut plain_ids: Vec<usize> = (0..plain).collect();
    plain_ids.shuffle(rng);
    let necessary: Vec<usize> = plain_ids[..nec_count].to_vec();

    let lo = (*p.budget.start()).max(nec_count).max(1);
    let hi = (*p.budget.end()).max(lo);
    let kind = *p.kinds.choose(rng).expect("nonempty");
    let card = *p.cards.choose(rng).expect("nonempty");
    let mut budget = rng.gen_range(lo..=hi);
    if card == Exact {
        budget = budget.min(n).max(lo);
    }

    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let graph = Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v])))?;
    let forbidden: VertexSet = forbidden.into_iter().map(|v| perm[v]).collect();
    let necessary: VertexSet = necessary.into_iter().map(|v| perm[v]).collect();
    AnnotatedInstance::new(graph, forbidden, necessary, budget, kind, card)
}

fn gen_mrss(rng: &mut ChaCha8Rng, p: &MrssProfile) -> Result<MrssInstance> {
    if p.dims.is_empty() || *p.dims.start() == 0 {
        return invalid("MRSS dimension must be at least 1");
    }
    if p.vectors.is_empty() || p.entries.is_empty() || p.target.is_empty() || p.kprime.is_empty() {
        return invalid("profile has an empty range");
    }
    if p.reducible && (*p.vectors.end() == 0 || *p.entries.end() == 0) {
        return invalid("no reducible instance exists for this profile");
    }
    if p.reducible {
        let best = *p.vectors.end() as u64 * *p.entries.end();
        if best < (*p.target.start()).max(1) {
            return invalid("column sums can never reach the target");
        }
    }
    loop {
        let k = rng.gen_range(p.dims.clone());
        let n = rng.gen_range(p.vectors.clone());
        let vectors: Vec<Vec<u64>> = (0..n)
            .map(|_| (0..k).map(|_| rng.gen_range(p.entries.clone())).collect())
            .collect();
        let target: Vec<u64> = (0..k).map(|_| rng.gen_range(p.target.clone())).collect();
        let kprime = rng.gen_range(p.kprime.clone());
        let inst = MrssInstance::new(kprime, vectors, target)?;
        let ok = !p.reducible || (0..k).all(|i| inst.column_sum(i) >= inst.target[i].max(1));
        if ok {
            return Ok(inst);
        }
    }
}
