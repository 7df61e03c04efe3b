//! Gadget words for a graph on `n` vertices, with `N = 36 n^2`:
//!
//! ```text
//! A_i   = (0202)^(6n(i-1)+3n) 1 (0202)^(6n(n+1-i))
//! B_j   = (0202)^j 1 (0202)^(N-j)                       0 <= j <= N
//! X_i^j = A_i B_j
//! T_l   = (0202)^(6n(i-1)) 1 (0202)^(6n(j-i-1)+3n) 1 (0202)^(6n(n+2-j)) (0202)^(N-1)
//! ```
//!
//! A cover of size `k` yields a common supersequence of length
//! `168n^2 + 37n - 3 + k`, and any common supersequence that short yields a
//! cover of size at most `k`.
//!
//! Block offsets: for a one in a phi-image word, its offset is the number of
//! `0202` blocks before it. Ones of the cover prefix at offsets in
//! `[6n(i-1), 6n(i-1)+3n)` select vertex `i`; structural ones at offsets in
//! `[6n(i-1)+3n, 6ni]` are the ones every short supersequence must contain.

use super::lemma2::{lemma2_smin, BLOCK, HALF};
use super::{first_non_embedded, Graph, ReductionError, VertexCover};
use crate::normalizer::normalize;
use crate::words::{count_0202_blocks, Letter, Word};

/// The word set of a reduced instance together with its source dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionInstance {
    pub words: Vec<Word>,
    pub n: usize,
    pub m: usize,
    pub threshold_base: usize,
}

impl ReductionInstance {
    pub fn threshold(&self, k: usize) -> usize {
        self.threshold_base + k
    }
}

/// `168n^2 + 37n - 3`.
pub fn threshold_base(n: usize) -> usize {
    168 * n * n + 37 * n - 3
}

/// Length bound of the reduced instance for cover size `k`.
pub fn threshold(n: usize, k: usize) -> usize {
    threshold_base(n) + k
}

/// Number of `0202` blocks in the cover prefix, `6n^2 + 3n`.
pub fn cover_prefix_blocks(n: usize) -> usize {
    6 * n * n + 3 * n
}

/// Word made of `0202` runs separated by single ones.
fn from_block_runs(runs: &[usize]) -> Word {
    let total: usize = runs.iter().sum();
    let mut x = Word::with_capacity(4 * total + runs.len());
    for (t, &c) in runs.iter().enumerate() {
        if t > 0 {
            x.push(Letter::One);
        }
        x.push_repeated(&BLOCK, c);
    }
    x
}

fn vertex_word(n: usize, i: usize, j: usize) -> Word {
    let big = 36 * n * n;
    // A_i B_j: the last run of A_i and the first run of B_j are adjacent
    from_block_runs(&[6 * n * (i - 1) + 3 * n, 6 * n * (n + 1 - i) + j, big - j])
}

fn edge_word(n: usize, i: usize, j: usize) -> Word {
    let big = 36 * n * n;
    from_block_runs(&[
        6 * n * (i - 1),
        6 * n * (j - i - 1) + 3 * n,
        6 * n * (n + 2 - j) + big - 1,
    ])
}

/// Streams the instance words: every `X_i^j` (by `i`, then `j`), then `T_l`
/// in edge order.
pub fn gadget_words(g: &Graph) -> impl Iterator<Item = Word> + '_ {
    let n = g.n();
    let big = 36 * n * n;
    let xs = (1..=n).flat_map(move |i| (0..=big).map(move |j| vertex_word(n, i, j)));
    let ts = g.edges().iter().map(move |&(i, j)| edge_word(n, i, j));
    xs.chain(ts)
}

pub fn build_gadgets(g: &Graph) -> ReductionInstance {
    ReductionInstance {
        words: gadget_words(g).collect(),
        n: g.n(),
        m: g.m(),
        threshold_base: threshold_base(g.n()),
    }
}

/// The supersequence `S' S''` of length `threshold(n, |cover|)` built from a
/// vertex cover, checked against every instance word before it is returned.
pub fn witness_from_cover(g: &Graph, cover: &VertexCover) -> Result<Word, ReductionError> {
    cover.validate(g)?;
    let n = g.n();
    let mut s = Word::with_capacity(threshold(n, cover.len()));
    for i in 1..=n {
        if cover.contains(i) {
            s.push(Letter::One);
        }
        s.push_repeated(&HALF, 6 * n);
        s.push(Letter::One);
        s.push_repeated(&HALF, 6 * n);
    }
    s.push_repeated(&HALF, 6 * n);
    s.extend_from_word(&lemma2_smin(6 * n)?);

    if s.len() != threshold(n, cover.len()) {
        return Err(ReductionError::Invariant(format!(
            "witness has length {}, expected {}",
            s.len(),
            threshold(n, cover.len())
        )));
    }
    let instance = build_gadgets(g);
    if let Some(index) = first_non_embedded(&instance.words, &s) {
        return Err(ReductionError::Invariant(format!(
            "witness does not embed instance word {index}"
        )));
    }
    Ok(s)
}

/// Block offset of every one in a phi-image word, in order.
pub fn one_block_offsets(s: &[Letter]) -> Vec<usize> {
    let mut zeros = 0;
    let mut out = Vec::new();
    for &l in s {
        match l {
            Letter::Zero => zeros += 1,
            Letter::One => out.push(zeros / 2),
            Letter::Two => {}
        }
    }
    out
}

/// Splits a phi-image word at the end of its `6n^2 + 3n`-th block.
pub fn split_cover_prefix(s: &Word, n: usize) -> Result<(Word, Word), ReductionError> {
    let target = cover_prefix_blocks(n);
    let found = count_0202_blocks(s).map_err(|_| ReductionError::NotPhiImage)?;
    if found < target {
        return Err(ReductionError::BlockCount {
            found,
            expected: target,
        });
    }
    let mut zeros = 0;
    let mut cut = 0;
    if target > 0 {
        for (idx, &l) in s.iter().enumerate() {
            if l == Letter::Zero {
                zeros += 1;
                if zeros == 2 * target {
                    // the block ends at the 2 right after this 0
                    cut = idx + 2;
                    break;
                }
            }
        }
    }
    Ok((Word::from(s[..cut].to_vec()), Word::from(s[cut..].to_vec())))
}

/// Whether every vertex `i` has a one in the prefix at some offset in
/// `[6n(i-1)+3n, 6ni]`.
pub fn check_claim1(prefix: &Word, n: usize) -> Result<bool, ReductionError> {
    let found = count_0202_blocks(prefix).map_err(|_| ReductionError::NotPhiImage)?;
    let expected = cover_prefix_blocks(n);
    if found != expected {
        return Err(ReductionError::BlockCount { found, expected });
    }
    let offsets = one_block_offsets(prefix);
    Ok((1..=n).all(|i| {
        let lo = 6 * n * (i - 1) + 3 * n;
        let hi = 6 * n * i;
        offsets.iter().any(|&t| lo <= t && t <= hi)
    }))
}

/// Recovers a vertex cover of size at most `k` from a common supersequence of
/// the instance of length at most `threshold(n, k)`.
pub fn extract_cover(s: &Word, g: &Graph, k: usize) -> Result<VertexCover, ReductionError> {
    let n = g.n();
    let limit = threshold(n, k);
    if s.len() > limit {
        return Err(ReductionError::TooLong {
            len: s.len(),
            threshold: limit,
        });
    }
    let instance = build_gadgets(g);
    if let Some(index) = first_non_embedded(&instance.words, s) {
        return Err(ReductionError::NotSupersequence { index });
    }
    let normal = normalize(s, &instance.words)?;
    let (prefix, _) = split_cover_prefix(&normal, n)?;
    let zone = 6 * n;
    let cover = VertexCover::new(
        one_block_offsets(&prefix)
            .into_iter()
            .filter(|t| t % zone < 3 * n)
            .map(|t| t / zone + 1)
            .filter(|&i| i <= n),
    );
    if cover.len() > k || !cover.is_cover_of(g) {
        return Err(ReductionError::ExtractionFailed { found: cover, k });
    }
    Ok(cover)
}
