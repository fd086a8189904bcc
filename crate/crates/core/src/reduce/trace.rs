use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;

use crate::error::{invalid, Error, Result};
use crate::graph::Vertex;

/// One construction of the hardness chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// MRSS to strong offensive alliance with forbidden and necessary vertices.
    MrssGadget,
    /// Collapse the necessary set to a single vertex.
    SingleNecessary,
    /// Strong offensive with one necessary vertex to offensive with forbidden vertices.
    EliminateNecessary,
    /// Offensive with forbidden vertices to plain offensive alliance.
    EliminateForbidden,
}

impl Step {
    pub const ALL: [Step; 4] = [
        Step::MrssGadget,
        Step::SingleNecessary,
        Step::EliminateNecessary,
        Step::EliminateForbidden,
    ];

    /// Name used in trace files.
    pub fn as_str(self) -> &'static str {
        match self {
            Step::MrssGadget => "lemma2",
            Step::SingleNecessary => "corollary1",
            Step::EliminateNecessary => "lemma3",
            Step::EliminateForbidden => "theorem1",
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lemma2" => Ok(Step::MrssGadget),
            "cor1" | "corollary1" => Ok(Step::SingleNecessary),
            "lemma3" => Ok(Step::EliminateNecessary),
            "thm1" | "theorem1" => Ok(Step::EliminateForbidden),
            other => invalid(format!("unknown reduction step {other:?}")),
        }
    }
}

/// Expected (closed-form) against actual output size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SizeCheck {
    pub expected_vertices: usize,
    pub actual_vertices: usize,
    pub expected_edges: usize,
    pub actual_edges: usize,
}

impl SizeCheck {
    pub fn holds(&self) -> bool {
        self.expected_vertices == self.actual_vertices && self.expected_edges == self.actual_edges
    }
}

/// Role-to-vertex map and budget bookkeeping for one construction. Roles are
/// kept in allocation order, which is also ascending vertex id order for the
/// gadget vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub step: Step,
    pub budget_in: usize,
    pub budget_out: usize,
    pub size: SizeCheck,
    /// Source vectors left out of the MRSS gadget because they are all-zero.
    pub dropped_vectors: Vec<usize>,
    pub roles: IndexMap<String, Vertex>,
}

impl ReductionTrace {
    pub fn new(step: Step, budget_in: usize, budget_out: usize) -> Self {
        ReductionTrace {
            step,
            budget_in,
            budget_out,
            size: SizeCheck::default(),
            dropped_vectors: Vec::new(),
            roles: IndexMap::new(),
        }
    }

    pub(crate) fn assign(&mut self, role: String, v: Vertex) {
        let prev = self.roles.insert(role, v);
        debug_assert!(prev.is_none(), "role assigned twice");
    }

    pub fn vertex(&self, role: &str) -> Option<Vertex> {
        self.roles.get(role).copied()
    }

    /// Looks up a role that the construction is known to create.
    pub fn expect(&self, role: &str) -> Result<Vertex> {
        self.vertex(role)
            .ok_or_else(|| Error::InvalidInput(format!("trace has no role {role:?}")))
    }

    /// Role names are unique by construction; this checks vertex ids are too.
    pub fn is_injective(&self) -> bool {
        let mut ids: Vec<Vertex> = self.roles.values().copied().collect();
        ids.sort_unstable();
        ids.windows(2).all(|w| w[0] != w[1])
    }
}
