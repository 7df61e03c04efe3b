//! Enumeration oracle: tries every candidate word in order of length.

use std::time::Instant;

use super::{distinct_nonempty, SearchStats, SolverError, SolverResult};
use crate::words::{is_supersequence, Letter, Word};

pub const MAX_BRUTE_FORCE_LEN: usize = 20;

/// Letters occurring in the input. A shortest supersequence never uses others.
fn used_alphabet(words: &[&[Letter]]) -> Vec<Letter> {
    let mut seen = [false; 3];
    for x in words {
        for &l in x.iter() {
            seen[l.index()] = true;
        }
    }
    Letter::ALL
        .into_iter()
        .filter(|l| seen[l.index()])
        .collect()
}

/// Visits every word of length `len` over `alphabet` in lexicographic order
/// until `visit` returns false.
fn for_each_word(alphabet: &[Letter], len: usize, mut visit: impl FnMut(&[Letter]) -> bool) {
    if len > 0 && alphabet.is_empty() {
        return;
    }
    let mut digits = vec![0usize; len];
    let mut cand: Vec<Letter> = vec![alphabet.first().copied().unwrap_or(Letter::Zero); len];
    loop {
        if !visit(&cand) {
            return;
        }
        // odometer increment from the right
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                cand[i] = alphabet[digits[i]];
                break;
            }
            digits[i] = 0;
            cand[i] = alphabet[0];
        }
    }
}

fn check_limit(max_len: usize) -> Result<(), SolverError> {
    if max_len > MAX_BRUTE_FORCE_LEN {
        return Err(SolverError::EnumerationTooLarge {
            max_len,
            limit: MAX_BRUTE_FORCE_LEN,
        });
    }
    Ok(())
}

/// Lexicographically first shortest common supersequence of length at most
/// `max_len`, or `None` when there is none that short.
pub fn scs_brute_force(
    words: &[Word],
    max_len: usize,
) -> Result<Option<SolverResult>, SolverError> {
    check_limit(max_len)?;
    let start = Instant::now();
    let ws = distinct_nonempty(words);
    let alphabet = used_alphabet(&ws);
    let mut tried = 0u64;
    for len in 0..=max_len {
        let mut found = None;
        for_each_word(&alphabet, len, |cand| {
            tried += 1;
            if ws.iter().all(|x| is_supersequence(x, cand)) {
                found = Some(Word::from(cand.to_vec()));
                return false;
            }
            true
        });
        if let Some(supersequence) = found {
            return Ok(Some(SolverResult {
                supersequence,
                optimal: true,
                stats: SearchStats {
                    states_expanded: tried,
                    elapsed: start.elapsed(),
                },
            }));
        }
    }
    Ok(None)
}

/// Every shortest common supersequence of length at most `max_len`, in
/// lexicographic order. Empty when none is that short.
pub fn scs_brute_force_all(words: &[Word], max_len: usize) -> Result<Vec<Word>, SolverError> {
    check_limit(max_len)?;
    let ws = distinct_nonempty(words);
    let alphabet = used_alphabet(&ws);
    for len in 0..=max_len {
        let mut optima = Vec::new();
        for_each_word(&alphabet, len, |cand| {
            if ws.iter().all(|x| is_supersequence(x, cand)) {
                optima.push(Word::from(cand.to_vec()));
            }
            true
        });
        if !optima.is_empty() {
            return Ok(optima);
        }
    }
    Ok(Vec::new())
}
