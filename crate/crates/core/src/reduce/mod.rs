//! The gadget reductions of the hardness chain
//!
//! ```text
//! MRSS -> strong offensive (forbidden + necessary)
//!      -> strong offensive with one necessary vertex
//!      -> offensive (forbidden)
//!      -> offensive
//! ```
//!
//! plus their composition and a black-box equivalence check. Source vertices
//! keep their ids; gadget vertices are appended and named in a
//! [`ReductionTrace`].

mod eliminate_forbidden;
mod eliminate_necessary;
mod mrss_gadget;
mod single_necessary;
mod trace;

pub use eliminate_forbidden::{
    check_eliminate_forbidden_input, eliminate_forbidden, eliminate_forbidden_growth,
};
pub use eliminate_necessary::{check_eliminate_necessary_input, eliminate_necessary};
pub use mrss_gadget::{
    check_mrss_gadget_input, mrss_forward_witness, mrss_gadget_budget, mrss_gadget_deletion_set,
    reduce_mrss,
};
pub use single_necessary::{check_single_necessary_input, single_necessary};
pub use trace::{ReductionTrace, SizeCheck, Step};

use crate::alliance::AnnotatedInstance;
use crate::error::Result;
use crate::mrss::MrssInstance;
use crate::solve::{solve, Answer, ComputeCap};

/// Applies the constructions in order, stopping after `stop_after`. Each
/// intermediate instance is checked against the next step's precondition
/// before that step runs.
pub fn pipeline(
    inst: &MrssInstance,
    stop_after: Step,
    cap: &ComputeCap,
) -> Result<(AnnotatedInstance, Vec<ReductionTrace>)> {
    let (mut current, trace) = reduce_mrss(inst)?;
    let mut traces = vec![trace];
    for step in Step::ALL
        .into_iter()
        .skip(1)
        .take_while(|&s| s <= stop_after)
    {
        let (next, trace) = apply(step, &current, cap)?;
        current = next;
        traces.push(trace);
    }
    Ok((current, traces))
}

/// Runs one annotated-instance step (everything but the MRSS gadget).
pub fn apply(
    step: Step,
    inst: &AnnotatedInstance,
    cap: &ComputeCap,
) -> Result<(AnnotatedInstance, ReductionTrace)> {
    match step {
        Step::MrssGadget => crate::error::invalid("the MRSS gadget takes an MRSS instance"),
        Step::SingleNecessary => {
            check_single_necessary_input(inst)?;
            single_necessary(inst)
        }
        Step::EliminateNecessary => {
            check_eliminate_necessary_input(inst)?;
            eliminate_necessary(inst)
        }
        Step::EliminateForbidden => {
            check_eliminate_forbidden_input(inst)?;
            eliminate_forbidden(inst, cap)
        }
    }
}

/// Solves `reduced` and compares with the source answer. A cap overrun is
/// returned as an error, never as agreement.
pub fn verify_equivalence(
    source: Answer,
    reduced: &AnnotatedInstance,
    cap: &ComputeCap,
) -> Result<bool> {
    Ok(solve(reduced, cap)?.answer == source)
}
