//! Offensive alliances in graphs: predicates, exact solvers, the gadget
//! reductions that carry multidimensional relaxed subset sum down to plain
//! offensive alliance, and checkers for the structural parameters those
//! reductions preserve (deletion sets into bounded-height trees, feedback
//! vertex sets, treedepth).

pub mod alliance;
pub mod dot;
pub mod error;
pub mod format;
pub mod gen;
pub mod graph;
pub mod mrss;
pub mod reduce;
pub mod solve;
pub mod structparams;

pub use alliance::{
    check_alliance, check_solution, validate_forbidden_structure, violations, AllianceKind,
    AnnotatedInstance, CardinalityMode,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, Vertex, VertexSet};
pub use mrss::{mrss_solve, MrssInstance, MrssOutcome};
pub use solve::{naive_solve, solve, solve_parallel, Answer, ComputeCap, SolveOutcome};
