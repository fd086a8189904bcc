//! Multidimensional relaxed subset sum: choose at most `kprime` of the input
//! vectors so that their coordinatewise sum dominates the target.

use crate::error::{invalid, Error, Result};
use crate::solve::{binomial, Answer, ComputeCap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrssInstance {
    pub kprime: usize,
    pub vectors: Vec<Vec<u64>>,
    pub target: Vec<u64>,
}

impl MrssInstance {
    pub fn new(kprime: usize, vectors: Vec<Vec<u64>>, target: Vec<u64>) -> Result<Self> {
        let inst = MrssInstance {
            kprime,
            vectors,
            target,
        };
        inst.validate()?;
        Ok(inst)
    }

    /// Dimension `k`.
    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.target.is_empty() {
            return invalid("MRSS dimension must be at least 1");
        }
        if let Some(i) = self.vectors.iter().position(|s| s.len() != self.dim()) {
            return invalid(format!(
                "vector {i} has {} coordinates, expected {}",
                self.vectors[i].len(),
                self.dim()
            ));
        }
        Ok(())
    }

    /// Sum of coordinate `i` over all vectors.
    pub fn column_sum(&self, i: usize) -> u64 {
        self.vectors.iter().map(|s| s[i]).sum()
    }

    /// Does the index set `chosen` meet the target within the cardinality bound?
    pub fn is_witness(&self, chosen: &[usize]) -> bool {
        chosen.len() <= self.kprime
            && (0..self.dim())
                .all(|i| chosen.iter().map(|&j| self.vectors[j][i]).sum::<u64>() >= self.target[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrssOutcome {
    pub answer: Answer,
    /// Chosen vector indices, ascending; present iff yes.
    pub witness: Option<Vec<usize>>,
    pub explored: u64,
}

/// Enumerates index subsets by increasing size, lexicographically within a
/// size, and returns the first whose sum dominates the target.
pub fn mrss_solve(inst: &MrssInstance, cap: &ComputeCap) -> Result<MrssOutcome> {
    inst.validate()?;
    let n = inst.vectors.len();
    let top = inst.kprime.min(n);
    let projected = (0..=top).fold(0u128, |acc, j| acc.saturating_add(binomial(n, j)));
    if projected > cap.max_candidates {
        return Err(Error::CapExceeded {
            what: "MRSS index subsets",
            needed: projected,
            cap: cap.max_candidates,
        });
    }
    let mut explored = 0u64;
    for size in 0..=top {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            explored += 1;
            if inst.is_witness(&combo) {
                return Ok(MrssOutcome {
                    answer: Answer::Yes,
                    witness: Some(combo),
                    explored,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(MrssOutcome {
        answer: Answer::No,
        witness: None,
        explored,
    })
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}
