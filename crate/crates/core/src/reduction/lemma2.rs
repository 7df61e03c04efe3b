//! The family `S_i = (0202)^i 1 (0202)^(n^2 - i)`, its shortest supersequence,
//! and the two counting bounds every phi-image supersequence of it obeys.

use super::{first_non_embedded, ReductionError};
use crate::words::{count_0202_blocks, count_ones, Letter, Word};

pub(crate) const BLOCK: [Letter; 4] = [Letter::Zero, Letter::Two, Letter::Zero, Letter::Two];
pub(crate) const HALF: [Letter; 2] = [Letter::Zero, Letter::Two];

fn check_order(n: usize) -> Result<(), ReductionError> {
    if n < 2 || n % 2 == 1 {
        return Err(ReductionError::InvalidOrder(n));
    }
    Ok(())
}

/// The `n^2 + 1` words `S_0 ..= S_{n^2}`, each of length `4n^2 + 1`.
pub fn lemma2_family(n: usize) -> Result<Vec<Word>, ReductionError> {
    check_order(n)?;
    let nn = n * n;
    Ok((0..=nn)
        .map(|i| {
            let mut x = Word::with_capacity(4 * nn + 1);
            x.push_repeated(&BLOCK, i);
            x.push(Letter::One);
            x.push_repeated(&BLOCK, nn - i);
            x
        })
        .collect())
}

/// `1 ((02)^n 1)^(2n) (02)^(n-2)`, a shortest supersequence of the family,
/// of length `4n^2 + 4n - 3`.
pub fn lemma2_smin(n: usize) -> Result<Word, ReductionError> {
    check_order(n)?;
    let mut x = Word::with_capacity(4 * n * n + 4 * n);
    x.push(Letter::One);
    for _ in 0..2 * n {
        x.push_repeated(&HALF, n);
        x.push(Letter::One);
    }
    x.push_repeated(&HALF, n - 2);
    Ok(x)
}

/// Block and one counts of `s`, after checking it is a phi-image
/// supersequence of the order-`n` family.
fn counts(s: &Word, n: usize) -> Result<(usize, usize), ReductionError> {
    let family = lemma2_family(n)?;
    let blocks = count_0202_blocks(s).map_err(|_| ReductionError::NotPhiImage)?;
    if let Some(index) = first_non_embedded(&family, s) {
        return Err(ReductionError::NotSupersequence { index });
    }
    Ok((blocks, count_ones(s)))
}

/// With `k` ones, `s` has at least `ceil((n^2 + 1) / k) - 1 + n^2` blocks.
pub fn lemma2_bound_ones_to_blocks(s: &Word, n: usize) -> Result<bool, ReductionError> {
    let (blocks, ones) = counts(s, n)?;
    if ones == 0 {
        return Err(ReductionError::Invariant(
            "supersequence of the family without a one".into(),
        ));
    }
    let nn = n * n;
    Ok(blocks >= (nn + 1).div_ceil(ones) - 1 + nn)
}

/// With `n^2 - 1 + k` blocks, `s` has at least `ceil((n^2 + 1) / k)` ones.
pub fn lemma2_bound_blocks_to_ones(s: &Word, n: usize) -> Result<bool, ReductionError> {
    let (blocks, ones) = counts(s, n)?;
    let nn = n * n;
    if blocks < nn {
        return Err(ReductionError::Invariant(format!(
            "supersequence of the family with only {blocks} blocks"
        )));
    }
    let k = blocks + 1 - nn;
    Ok(ones >= (nn + 1).div_ceil(k))
}
