//! The morphism 0 -> 0202, 1 -> 1 and the run-length view of (02|1)* words.

use super::{Letter, Word, WordError};

const BLOCK: [Letter; 4] = [Letter::Zero, Letter::Two, Letter::Zero, Letter::Two];
const HALF: [Letter; 2] = [Letter::Zero, Letter::Two];

/// Image of a binary word under phi.
pub fn phi_encode(w: &[Letter]) -> Result<Word, WordError> {
    let mut out = Word::with_capacity(w.len() * 4);
    for (index, &l) in w.iter().enumerate() {
        match l {
            Letter::Zero => out.push_repeated(&BLOCK, 1),
            Letter::One => out.push(Letter::One),
            Letter::Two => return Err(WordError::NotBinary { index }),
        }
    }
    Ok(out)
}

/// Parses `w` as a concatenation of `0202` and `1` blocks, returning the
/// preimage, or the index where parsing got stuck.
fn parse_blocks(w: &[Letter]) -> Result<Word, usize> {
    let mut out = Word::with_capacity(w.len());
    let mut i = 0;
    while i < w.len() {
        if w[i] == Letter::One {
            out.push(Letter::One);
            i += 1;
        } else if w[i..].starts_with(&BLOCK) {
            out.push(Letter::Zero);
            i += 4;
        } else {
            return Err(i);
        }
    }
    Ok(out)
}

pub fn is_in_phi_image(w: &[Letter]) -> bool {
    parse_blocks(w).is_ok()
}

/// Inverse of [`phi_encode`].
pub fn phi_decode(w: &[Letter]) -> Result<Word, WordError> {
    parse_blocks(w).map_err(|index| WordError::NotInPhiImage { index })
}

/// A `(02|1)*` word seen as `(02)^c0 1 (02)^c1 1 ... 1 (02)^cr`.
///
/// There is always at least one run; the number of ones is `runs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiSegmentation {
    runs: Vec<usize>,
}

impl PhiSegmentation {
    /// Panics if `runs` is empty.
    pub fn from_runs(runs: Vec<usize>) -> Self {
        assert!(!runs.is_empty(), "a segmentation has at least one run");
        PhiSegmentation { runs }
    }

    pub fn runs(&self) -> &[usize] {
        &self.runs
    }

    pub fn runs_mut(&mut self) -> &mut Vec<usize> {
        &mut self.runs
    }

    pub fn ones(&self) -> usize {
        self.runs.len() - 1
    }

    /// Total number of `02` half-blocks.
    pub fn half_blocks(&self) -> usize {
        self.runs.iter().sum()
    }

    /// Word length, `2 * half_blocks + ones`.
    pub fn word_len(&self) -> usize {
        2 * self.half_blocks() + self.ones()
    }

    pub fn is_phi_image(&self) -> bool {
        self.runs.iter().all(|c| c % 2 == 0)
    }

    pub fn to_word(&self) -> Word {
        let mut out = Word::with_capacity(self.word_len());
        for (t, &c) in self.runs.iter().enumerate() {
            if t > 0 {
                out.push(Letter::One);
            }
            out.push_repeated(&HALF, c);
        }
        out
    }
}

/// Splits a `(02|1)*` word into runs of `02` separated by single ones.
pub fn segment(w: &[Letter]) -> Result<PhiSegmentation, WordError> {
    let mut runs = vec![0];
    let mut i = 0;
    while i < w.len() {
        match w[i] {
            Letter::One => {
                runs.push(0);
                i += 1;
            }
            Letter::Zero => match w.get(i + 1) {
                Some(Letter::Two) => {
                    *runs.last_mut().unwrap() += 1;
                    i += 2;
                }
                Some(_) => return Err(WordError::Malformed { index: i + 1 }),
                None => return Err(WordError::Malformed { index: i }),
            },
            Letter::Two => return Err(WordError::Malformed { index: i }),
        }
    }
    Ok(PhiSegmentation { runs })
}

pub fn count_ones(w: &[Letter]) -> usize {
    w.iter().filter(|&&l| l == Letter::One).count()
}

/// Number of `0202` blocks of a phi-image word.
pub fn count_0202_blocks(w: &[Letter]) -> Result<usize, WordError> {
    phi_decode(w).map(|pre| pre.count(Letter::Zero))
}

/// Input condition of the modified SCS variant: no word has two identical
/// consecutive letters and no word starts with `forbidden_first`.
pub fn validate_mscs_input<'a, I>(words: I, forbidden_first: Letter) -> bool
where
    I: IntoIterator<Item = &'a Word>,
{
    words
        .into_iter()
        .all(|x| x.first() != Some(&forbidden_first) && x.windows(2).all(|p| p[0] != p[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    /// Membership in {0202, 1}* by dynamic programming over prefixes.
    fn in_block_language(x: &[Letter]) -> bool {
        let mut ok = vec![false; x.len() + 1];
        ok[0] = true;
        for i in 1..=x.len() {
            ok[i] = (x[i - 1] == Letter::One && ok[i - 1])
                || (i >= 4 && ok[i - 4] && x[i - 4..i] == BLOCK);
        }
        ok[x.len()]
    }

    #[test]
    fn encode_examples() {
        assert_eq!(phi_encode(&w("01")).unwrap(), w("02021"));
        assert_eq!(phi_encode(&w("")).unwrap(), w(""));
        assert_eq!(phi_encode(&w("10")).unwrap(), w("10202"));
        assert_eq!(
            phi_encode(&w("012")),
            Err(WordError::NotBinary { index: 2 })
        );
    }

    #[test]
    fn image_membership_examples() {
        assert!(is_in_phi_image(&w("0202")));
        assert!(!is_in_phi_image(&w("02")));
        // runs [0, 2, 0, 2], all even
        let x = w("10202110202");
        assert_eq!(segment(&x).unwrap().runs(), &[0, 2, 0, 2]);
        assert!(in_block_language(&x));
        assert!(is_in_phi_image(&x));
        assert_eq!(phi_decode(&x).unwrap(), w("10110"));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(phi_decode(&w("02021")).unwrap(), w("01"));
        assert_eq!(phi_decode(&w("")).unwrap(), w(""));
        assert_eq!(phi_decode(&w("1")).unwrap(), w("1"));
        assert_eq!(
            phi_decode(&w("1021")),
            Err(WordError::NotInPhiImage { index: 1 })
        );
    }

    #[test]
    fn segment_examples() {
        assert_eq!(segment(&w("1021")).unwrap().runs(), &[0, 1, 0]);
        assert_eq!(segment(&w("0202")).unwrap().runs(), &[2]);
        assert_eq!(segment(&w("11")).unwrap().runs(), &[0, 0, 0]);
        assert_eq!(segment(&w("")).unwrap().runs(), &[0]);
        assert_eq!(segment(&w("1021")).unwrap().to_word(), w("1021"));
        assert_eq!(segment(&w("0012")), Err(WordError::Malformed { index: 1 }));
        assert_eq!(segment(&w("120")), Err(WordError::Malformed { index: 1 }));
        assert_eq!(segment(&w("10")), Err(WordError::Malformed { index: 1 }));
    }

    #[test]
    fn counts() {
        let mut smin = w("1");
        smin.push_repeated(&w("02021"), 4);
        assert_eq!(count_ones(&smin), 5);
        assert_eq!(count_0202_blocks(&smin).unwrap(), 4);
        assert_eq!(count_ones(&w("")), 0);
        assert_eq!(count_0202_blocks(&w("")).unwrap(), 0);
        assert_eq!(count_ones(&w("02021")), 1);
        assert_eq!(count_0202_blocks(&w("02021")).unwrap(), 1);
        assert!(count_0202_blocks(&w("021")).is_err());
    }

    #[test]
    fn mscs_validation() {
        assert!(!validate_mscs_input(&[w("0202111")], Letter::Two));
        assert!(validate_mscs_input(&[w("02021")], Letter::Two));
        assert!(!validate_mscs_input(&[w("202")], Letter::Two));
        assert!(validate_mscs_input(&[], Letter::Two));
        assert!(validate_mscs_input(&[w("")], Letter::Two));
    }

    #[test]
    fn membership_agrees_with_grammar_on_all_short_words() {
        let mut layer = vec![Word::new()];
        for _ in 0..9 {
            let mut next = Vec::new();
            for x in &layer {
                assert_eq!(is_in_phi_image(x), in_block_language(x), "{x}");
                let seg_says = segment(x).map(|s| s.is_phi_image()).unwrap_or(false);
                assert_eq!(seg_says, in_block_language(x), "{x}");
                for l in Letter::ALL {
                    let mut y = x.clone();
                    y.push(l);
                    next.push(y);
                }
            }
            layer = next;
        }
    }
}
