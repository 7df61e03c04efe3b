use std::time::Instant;

use rand::Rng;

use super::{distinct_nonempty, letter_count_bound, SearchStats, SolverResult};
use crate::words::{Letter, Word};

/// Extends `out` by majority merge starting from `positions`, which are
/// advanced to the end of every word. Returns the number of letters emitted.
pub(crate) fn majority_merge_from(
    words: &[&[Letter]],
    positions: &mut [usize],
    out: &mut Word,
) -> usize {
    let mut emitted = 0;
    loop {
        let mut votes = [0usize; 3];
        for (x, &p) in words.iter().zip(positions.iter()) {
            if let Some(l) = x.get(p) {
                votes[l.index()] += 1;
            }
        }
        // max_by_key keeps the last maximum, so scan letters in reverse for 0 < 1 < 2
        let (best, &count) = votes
            .iter()
            .enumerate()
            .rev()
            .max_by_key(|(_, &v)| v)
            .expect("three letters");
        if count == 0 {
            return emitted;
        }
        let letter = Letter::from_index(best).expect("letter index");
        for (x, p) in words.iter().zip(positions.iter_mut()) {
            if x.get(*p) == Some(&letter) {
                *p += 1;
            }
        }
        out.push(letter);
        emitted += 1;
    }
}

/// Greedy heuristic: repeatedly emit the letter that is next for the largest
/// number of words, ties broken by letter order.
///
/// The result is flagged optimal only when it meets the letter-count lower bound.
pub fn scs_majority_merge(words: &[Word]) -> SolverResult {
    let start = Instant::now();
    let ws = distinct_nonempty(words);
    let mut positions = vec![0; ws.len()];
    let lower = letter_count_bound(&ws, &positions);
    let mut out = Word::new();
    let steps = majority_merge_from(&ws, &mut positions, &mut out);
    SolverResult {
        optimal: out.len() == lower,
        supersequence: out,
        stats: SearchStats {
            states_expanded: steps as u64,
            elapsed: start.elapsed(),
        },
    }
}

/// Random common supersequence: repeatedly pick an unfinished word uniformly
/// at random and emit its next letter, advancing every word that shares it.
pub fn random_merge<R: Rng + ?Sized>(words: &[Word], rng: &mut R) -> Word {
    let ws = distinct_nonempty(words);
    let mut positions = vec![0; ws.len()];
    let mut open: Vec<usize> = (0..ws.len()).collect();
    let mut out = Word::new();
    while !open.is_empty() {
        let pick = open[rng.gen_range(0..open.len())];
        let letter = ws[pick][positions[pick]];
        for (x, p) in ws.iter().zip(positions.iter_mut()) {
            if x.get(*p) == Some(&letter) {
                *p += 1;
            }
        }
        out.push(letter);
        open.retain(|&i| positions[i] < ws[i].len());
    }
    out
}
