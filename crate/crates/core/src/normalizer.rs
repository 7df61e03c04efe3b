//! Rewriting a common supersequence of phi-image words into a phi-image word
//! that is no longer and is still a common supersequence.
//!
//! The first pass removes every factor `00`, `22`, `01`, `12` (merging or
//! swapping, always at the leftmost occurrence), then drops a trailing `0`
//! and a leading `2`, until the word has the form `(02|1)*`. The second pass
//! works on the run-length segmentation and makes every run of `02` even: an
//! odd run followed by a one hands its last `02` over to the next run, and an
//! odd final run loses one `02`.

use std::fmt;

use thiserror::Error;

use crate::words::{is_in_phi_image, is_supersequence, segment, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("input word {index} is not in the phi image")]
    NotPhiImage { index: usize },
    #[error("candidate is not a supersequence of input word {index}")]
    NotSupersequence { index: usize },
    #[error(transparent)]
    Malformed(#[from] WordError),
    #[error("normalized word lost the supersequence property for input word {index}")]
    InvariantBroken { index: usize },
}

/// Rewrite rules, numbered as in the normalization argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// (i) drop a trailing `0`.
    DropTrailingZero,
    /// (ii) drop a leading `2`.
    DropLeadingTwo,
    /// (iii) `00 -> 0`.
    MergeZeros,
    /// (iv) `22 -> 2`.
    MergeTwos,
    /// (v) `01 -> 10`.
    SwapZeroOne,
    /// (vi) `12 -> 21`.
    SwapOneTwo,
    /// `02 1 -> 1 02` at the end of an odd run.
    SegShift,
    /// Remove the last `02` of an odd final run.
    SegTrim,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::DropTrailingZero => "i",
            Rule::DropLeadingTwo => "ii",
            Rule::MergeZeros => "iii",
            Rule::MergeTwos => "iv",
            Rule::SwapZeroOne => "v",
            Rule::SwapOneTwo => "vi",
            Rule::SegShift => "seg-shift",
            Rule::SegTrim => "seg-trim",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One rule application. `position` is the 1-based index, in the word before
/// the step, of the first letter the rule touches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: Rule,
    pub position: usize,
    pub before_len: usize,
    pub after_len: usize,
}

impl RewriteStep {
    /// Replays this step on `w`, which must be the word the step was recorded on.
    pub fn apply(&self, w: &mut Vec<Letter>) {
        assert_eq!(w.len(), self.before_len, "trace replayed on the wrong word");
        let i = self.position - 1;
        match self.rule {
            Rule::DropTrailingZero | Rule::DropLeadingTwo | Rule::MergeZeros | Rule::MergeTwos => {
                w.remove(i);
            }
            Rule::SwapZeroOne | Rule::SwapOneTwo => w.swap(i, i + 1),
            Rule::SegShift => {
                // 0 2 1 -> 1 0 2
                w[i..i + 3].rotate_right(1);
            }
            Rule::SegTrim => {
                w.drain(i..i + 2);
            }
        }
    }
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.rule, self.position, self.before_len, self.after_len
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteTrace {
    pub steps: Vec<RewriteStep>,
}

impl RewriteTrace {
    fn record(&mut self, rule: Rule, position: usize, before_len: usize, after_len: usize) {
        self.steps.push(RewriteStep {
            rule,
            position,
            before_len,
            after_len,
        });
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Every intermediate word, starting with `start` itself.
    pub fn replay(&self, start: &[Letter]) -> Vec<Word> {
        let mut cur = start.to_vec();
        let mut out = vec![Word::from(cur.clone())];
        for step in &self.steps {
            step.apply(&mut cur);
            out.push(Word::from(cur.clone()));
        }
        out
    }

    fn extend(&mut self, other: RewriteTrace) {
        self.steps.extend(other.steps);
    }
}

/// `len * weight + 2 * #(0 before 1 pairs) + #(1 before 2 pairs)`.
///
/// With `weight` above the squared length of the original word, every rule
/// strictly lowers this value: deletions cost `weight`, `01 -> 10` removes two
/// units, `12 -> 21` one, and a seg-shift removes two and adds one.
pub fn termination_potential(w: &[Letter], weight: u128) -> u128 {
    let (mut zeros, mut ones) = (0u128, 0u128);
    let (mut inv01, mut inv12) = (0u128, 0u128);
    for &l in w {
        match l {
            Letter::Zero => zeros += 1,
            Letter::One => {
                inv01 += zeros;
                ones += 1;
            }
            Letter::Two => inv12 += ones,
        }
    }
    w.len() as u128 * weight + 2 * inv01 + inv12
}

/// Rewrites `s` into `(02|1)*` form with the local rules (i) to (vi).
pub fn first_step(s: &[Letter]) -> (Word, RewriteTrace) {
    use Letter::*;

    let mut w = s.to_vec();
    let mut trace = RewriteTrace::default();
    let mut i = 0;
    loop {
        while i + 1 < w.len() {
            let before = w.len();
            let rule = match (w[i], w[i + 1]) {
                (Zero, Zero) => Rule::MergeZeros,
                (Two, Two) => Rule::MergeTwos,
                (Zero, One) => Rule::SwapZeroOne,
                (One, Two) => Rule::SwapOneTwo,
                _ => {
                    i += 1;
                    continue;
                }
            };
            match rule {
                Rule::MergeZeros | Rule::MergeTwos => {
                    w.remove(i + 1);
                }
                _ => w.swap(i, i + 1),
            }
            trace.record(rule, i + 1, before, w.len());
            // only the pair ending at i can have become a match
            i = i.saturating_sub(1);
        }
        let before = w.len();
        if w.last() == Some(&Zero) {
            w.pop();
            trace.record(Rule::DropTrailingZero, before, before, w.len());
            i = w.len().saturating_sub(2);
        } else if w.first() == Some(&Two) {
            w.remove(0);
            trace.record(Rule::DropLeadingTwo, 1, before, w.len());
            i = 0;
        } else {
            break;
        }
    }
    (Word::from(w), trace)
}

/// Makes every run of `02` even, turning a `(02|1)*` word into a phi image.
pub fn second_step(s2: &[Letter]) -> Result<(Word, RewriteTrace), WordError> {
    let mut seg = segment(s2)?;
    let mut trace = RewriteTrace::default();
    let len = seg.word_len();
    let runs = seg.runs_mut();
    let last = runs.len() - 1;
    // index of the first letter of the current run
    let mut start = 0;
    for t in 0..last {
        if runs[t] % 2 == 1 {
            // the last 02 of run t sits just before the separating one
            let position = start + 2 * (runs[t] - 1) + 1;
            runs[t] -= 1;
            runs[t + 1] += 1;
            trace.record(Rule::SegShift, position, len, len);
        }
        start += 2 * runs[t] + 1;
    }
    if runs[last] % 2 == 1 {
        runs[last] -= 1;
        let position = start + 2 * runs[last] + 1;
        trace.record(Rule::SegTrim, position, len, len - 2);
    }
    Ok((seg.to_word(), trace))
}

/// Normalizes `s` into the phi image and checks the result against `words`.
pub fn normalize_with_trace(
    s: &[Letter],
    words: &[Word],
) -> Result<(Word, RewriteTrace), NormalizeError> {
    if let Some(index) = words.iter().position(|x| !is_in_phi_image(x)) {
        return Err(NormalizeError::NotPhiImage { index });
    }
    if let Some(index) = words.iter().position(|x| !is_supersequence(x, s)) {
        return Err(NormalizeError::NotSupersequence { index });
    }
    let (s2, mut trace) = first_step(s);
    let (out, second) = second_step(&s2)?;
    trace.extend(second);
    if let Some(index) = words.iter().position(|x| !is_supersequence(x, &out)) {
        return Err(NormalizeError::InvariantBroken { index });
    }
    debug_assert!(is_in_phi_image(&out) && out.len() <= s.len());
    Ok((out, trace))
}

pub fn normalize(s: &[Letter], words: &[Word]) -> Result<Word, NormalizeError> {
    normalize_with_trace(s, words).map(|(w, _)| w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{segment, w};

    fn check_trace(start: &Word, out: &Word, trace: &RewriteTrace) {
        let states = trace.replay(start);
        assert_eq!(states.last().unwrap(), out);
        let weight = (start.len() as u128).pow(2) + 1;
        for (pair, step) in states.windows(2).zip(&trace.steps) {
            assert!(step.after_len <= step.before_len);
            assert_eq!(pair[1].len(), step.after_len);
            assert!(
                termination_potential(&pair[1], weight) < termination_potential(&pair[0], weight),
                "{step} did not decrease the potential"
            );
        }
    }

    #[test]
    fn first_step_examples() {
        let (out, trace) = first_step(&w("00202"));
        assert_eq!(out, w("0202"));
        assert_eq!(
            trace.steps,
            vec![RewriteStep {
                rule: Rule::MergeZeros,
                position: 1,
                before_len: 5,
                after_len: 4
            }]
        );

        let (out, trace) = first_step(&w("010202"));
        assert_eq!(out, w("10202"));
        let rules: Vec<Rule> = trace.steps.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![Rule::SwapZeroOne, Rule::MergeZeros]);
        check_trace(&w("010202"), &out, &trace);

        let (out, trace) = first_step(&w("0202"));
        assert_eq!(out, w("0202"));
        assert!(trace.is_empty());
    }

    #[test]
    fn first_step_edges() {
        assert_eq!(first_step(&w("")).0, w(""));
        assert_eq!(first_step(&w("0")).0, w(""));
        assert_eq!(first_step(&w("2")).0, w(""));
        assert_eq!(first_step(&w("20")).0, w(""));
        assert_eq!(first_step(&w("2221000")).0, w("1"));
        // 0 1 2 -> 1 0 2
        assert_eq!(first_step(&w("012")).0, w("102"));
    }

    #[test]
    fn first_step_output_is_segmentable() {
        let mut layer = vec![Word::new()];
        for _ in 0..8 {
            let mut next = Vec::new();
            for x in &layer {
                let (out, trace) = first_step(x);
                assert!(out.len() <= x.len());
                assert!(segment(&out).is_ok(), "{x} -> {out}");
                check_trace(x, &out, &trace);
                for l in Letter::ALL {
                    let mut y = x.clone();
                    y.push(l);
                    next.push(y);
                }
            }
            layer = next;
        }
    }

    #[test]
    fn second_step_examples() {
        let (out, trace) = second_step(&w("1021")).unwrap();
        assert_eq!(out, w("11"));
        let rules: Vec<Rule> = trace.steps.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![Rule::SegShift, Rule::SegTrim]);
        check_trace(&w("1021"), &out, &trace);

        let (out, trace) = second_step(&w("0202")).unwrap();
        assert_eq!(out, w("0202"));
        assert!(trace.is_empty());

        let (out, trace) = second_step(&w("021")).unwrap();
        assert_eq!(out, w("1"));
        assert_eq!(trace.replay(&w("021"))[1], w("102"));

        assert!(second_step(&w("012")).is_err());
    }

    #[test]
    fn second_step_keeps_ones_and_never_adds_blocks() {
        for s in ["02", "020202", "0210202102", "1102021", "02020210202", ""] {
            let s = w(s);
            let before = segment(&s).unwrap();
            let (out, trace) = second_step(&s).unwrap();
            let after = segment(&out).unwrap();
            assert!(after.is_phi_image());
            assert_eq!(after.ones(), before.ones());
            assert!(after.half_blocks() <= before.half_blocks());
            check_trace(&s, &out, &trace);
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&w("010202"), &[w("10202")]).unwrap(), w("10202"));
        let s = w("1020210202");
        assert_eq!(normalize(&s, &[w("10202"), w("02021")]).unwrap(), s);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(
            normalize(&w("0202"), &[w("02")]),
            Err(NormalizeError::NotPhiImage { index: 0 })
        );
        assert_eq!(
            normalize(&w("0202"), &[w("0202"), w("1")]),
            Err(NormalizeError::NotSupersequence { index: 1 })
        );
    }
}
