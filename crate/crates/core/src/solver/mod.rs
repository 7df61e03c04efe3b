//! Shortest common supersequence solvers.
//!
//! * [`scs_pairwise`]: the classical LCS dynamic program for two words.
//! * [`scs_exact`]: best-first search over matched-prefix vectors.
//! * [`scs_brute_force`]: enumeration by increasing length, used as an oracle.
//! * [`scs_majority_merge`]: the greedy majority-merge heuristic, and
//!   [`random_merge`], its randomized cousin used to sample supersequences.

mod brute;
mod exact;
mod majority;
mod pairwise;

pub use brute::{scs_brute_force, scs_brute_force_all, MAX_BRUTE_FORCE_LEN};
pub use exact::scs_exact;
pub use majority::{random_merge, scs_majority_merge};
pub use pairwise::{lcs_len, scs_pairwise};

use std::time::Duration;

use thiserror::Error;

use crate::words::{Letter, Word};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub states_expanded: u64,
    pub elapsed: Duration,
}

/// A common supersequence together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub supersequence: Word,
    /// Set only when no shorter common supersequence exists.
    pub optimal: bool,
    pub stats: SearchStats,
}

impl SolverResult {
    pub fn length(&self) -> usize {
        self.supersequence.len()
    }
}

/// Limits for [`scs_exact`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_states: u64,
    max_length: usize,
}

impl SearchBudget {
    pub fn new(max_states: u64, max_length: usize) -> Result<Self, SolverError> {
        if max_states == 0 || max_length == 0 {
            return Err(SolverError::InvalidBudget);
        }
        Ok(SearchBudget {
            max_states,
            max_length,
        })
    }

    pub fn max_states(&self) -> u64 {
        self.max_states
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_states: 50_000_000,
            max_length: usize::MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("search budget exhausted; best incumbent has length {}", incumbent.length())]
    BudgetExceeded { incumbent: Box<SolverResult> },
    #[error("refusing to enumerate candidates of length up to {max_len} (limit {limit})")]
    EnumerationTooLarge { max_len: usize, limit: usize },
    #[error("search budget limits must be positive")]
    InvalidBudget,
}

/// Drops empty words and repeated words, keeping first occurrences in order.
pub(crate) fn distinct_nonempty(words: &[Word]) -> Vec<&[Letter]> {
    let mut seen = rustc_hash::FxHashSet::default();
    words
        .iter()
        .filter(|x| !x.is_empty() && seen.insert(x.letters()))
        .map(|x| x.letters())
        .collect()
}

/// `sum over letters of max over words of (remaining occurrences of that letter)`.
///
/// Every letter counted here must still be emitted, so this bounds the
/// remaining length from below. It dominates the longest remaining suffix.
pub(crate) fn letter_count_bound(words: &[&[Letter]], positions: &[usize]) -> usize {
    let mut best = [0usize; 3];
    for (x, &p) in words.iter().zip(positions) {
        let mut counts = [0usize; 3];
        for &l in &x[p..] {
            counts[l.index()] += 1;
        }
        for a in 0..3 {
            best[a] = best[a].max(counts[a]);
        }
    }
    best.iter().sum()
}
