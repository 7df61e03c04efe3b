//! Letters over the ternary alphabet, words, and embeddings.
//!
//! A [`Word`] is a plain sequence of [`Letter`]s. The supersequence relation is
//! decided by greedy leftmost matching, which is complete: if any embedding of
//! `sub` into `sup` exists, the leftmost one does.

mod phi;

pub use phi::{
    count_0202_blocks, count_ones, is_in_phi_image, phi_decode, phi_encode, segment,
    validate_mscs_input, PhiSegmentation,
};

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {found:?} at index {index} (expected '0', '1' or '2')")]
    InvalidLetter { index: usize, found: char },
    #[error("letter 2 at index {index} is outside the binary alphabet")]
    NotBinary { index: usize },
    #[error("word is not in the phi image (first offending index {index})")]
    NotInPhiImage { index: usize },
    #[error("word is not of the form (02|1)* (first offending index {index})")]
    Malformed { index: usize },
}

/// A symbol of the alphabet {0, 1, 2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Letter {
    Zero = 0,
    One = 1,
    Two = 2,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::Zero, Letter::One, Letter::Two];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Letter> {
        Letter::ALL.get(i).copied()
    }

    pub fn to_char(self) -> char {
        (b'0' + self as u8) as char
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '0' => Some(Letter::Zero),
            '1' => Some(Letter::One),
            '2' => Some(Letter::Two),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite (possibly empty) sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn with_capacity(cap: usize) -> Self {
        Word(Vec::with_capacity(cap))
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn extend_from_word(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Appends `count` copies of `pattern`.
    pub fn push_repeated(&mut self, pattern: &[Letter], count: usize) {
        self.0.reserve(pattern.len() * count);
        for _ in 0..count {
            self.0.extend_from_slice(pattern);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = Word::with_capacity(self.len() + other.len());
        out.extend_from_word(self);
        out.extend_from_word(other);
        out
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn is_binary(&self) -> bool {
        !self.0.contains(&Letter::Two)
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(index, c)| {
                Letter::from_char(c).ok_or(WordError::InvalidLetter { index, found: c })
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|l| l.to_char()).collect();
        f.pad(&s)
    }
}

/// Parses a word literal, panicking on bad input. Meant for tests and constants.
pub fn w(s: &str) -> Word {
    s.parse()
        .unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}

/// Strictly increasing, letter-preserving map from positions of a source word
/// into positions of a target word. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    /// Builds an embedding after checking it against `sub` and `sup`.
    pub fn new(map: Vec<usize>, sub: &[Letter], sup: &[Letter]) -> Option<Self> {
        let emb = Embedding { map };
        emb.is_valid_for(sub, sup).then_some(emb)
    }

    /// 1-based target indices, one per source position.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_valid_for(&self, sub: &[Letter], sup: &[Letter]) -> bool {
        self.map.len() == sub.len()
            && self.map.windows(2).all(|p| p[0] < p[1])
            && self
                .map
                .iter()
                .zip(sub)
                .all(|(&t, &l)| t >= 1 && t <= sup.len() && sup[t - 1] == l)
    }
}

/// Returns true iff `sup` contains `sub` as a (not necessarily contiguous) subsequence.
pub fn is_supersequence(sub: &[Letter], sup: &[Letter]) -> bool {
    let mut rest = sup.iter();
    sub.iter().all(|l| rest.any(|s| s == l))
}

/// The embedding mapping every source letter to its earliest feasible target index.
pub fn leftmost_embedding(sub: &[Letter], sup: &[Letter]) -> Option<Embedding> {
    let mut map = Vec::with_capacity(sub.len());
    let mut next = 0;
    for &l in sub {
        let off = sup[next..].iter().position(|&s| s == l)?;
        next += off + 1;
        map.push(next);
    }
    Some(Embedding { map })
}

/// True iff `sup` is a supersequence of every word in `words`.
pub fn is_common_supersequence<'a, I>(words: I, sup: &[Letter]) -> bool
where
    I: IntoIterator<Item = &'a Word>,
{
    words.into_iter().all(|x| is_supersequence(x, sup))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every embedding of `sub` into `sup`, by exhaustive search.
    fn all_embeddings(sub: &[Letter], sup: &[Letter]) -> Vec<Vec<usize>> {
        fn go(
            sub: &[Letter],
            sup: &[Letter],
            from: usize,
            acc: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if acc.len() == sub.len() {
                out.push(acc.clone());
                return;
            }
            for t in from..sup.len() {
                if sup[t] == sub[acc.len()] {
                    acc.push(t + 1);
                    go(sub, sup, t + 1, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(sub, sup, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn supersequence_examples() {
        assert!(is_supersequence(&w("00111"), &w("0011100")));
        assert!(is_supersequence(&w(""), &w("")));
        assert!(is_supersequence(&w(""), &w("2101")));
        assert!(!is_supersequence(&w("10"), &w("01")));
        assert!(!is_supersequence(&w("0"), &w("")));
    }

    #[test]
    fn leftmost_embedding_examples() {
        assert_eq!(
            leftmost_embedding(&w("01"), &w("0011")).unwrap().map(),
            &[1, 3]
        );
        let x = w("021102");
        assert_eq!(
            leftmost_embedding(&x, &x).unwrap().map(),
            &[1, 2, 3, 4, 5, 6]
        );
        assert!(leftmost_embedding(&w("2"), &w("01")).is_none());
        assert_eq!(
            leftmost_embedding(&w(""), &w("01")).unwrap().map(),
            &[] as &[usize]
        );
    }

    #[test]
    fn leftmost_is_pointwise_minimal() {
        // brute force: each index of the greedy map is the minimum over all embeddings
        let sub = w("01");
        let sup = w("0011");
        let all = all_embeddings(&sub, &sup);
        assert_eq!(all.len(), 4);
        let lm = leftmost_embedding(&sub, &sup).unwrap();
        for k in 0..sub.len() {
            assert_eq!(lm.map()[k], all.iter().map(|e| e[k]).min().unwrap());
        }
    }

    #[test]
    fn greedy_matches_exhaustive_search() {
        // all pairs of ternary words with |u| <= 4, |v| <= 6
        let words_up_to = |n: usize| -> Vec<Word> {
            let mut out = vec![Word::new()];
            let mut layer = vec![Word::new()];
            for _ in 0..n {
                let mut next = Vec::new();
                for x in &layer {
                    for l in Letter::ALL {
                        let mut y = x.clone();
                        y.push(l);
                        next.push(y);
                    }
                }
                out.extend(next.iter().cloned());
                layer = next;
            }
            out
        };
        let subs = words_up_to(4);
        let sups = words_up_to(6);
        for u in &subs {
            for v in &sups {
                let all = all_embeddings(u, v);
                let lm = leftmost_embedding(u, v);
                assert_eq!(is_supersequence(u, v), !all.is_empty(), "{u} in {v}");
                assert_eq!(lm.is_some(), !all.is_empty());
                if let Some(e) = lm {
                    assert!(e.is_valid_for(u, v));
                    assert!(all.contains(&e.map().to_vec()));
                }
            }
        }
    }

    #[test]
    fn embedding_validation() {
        let sub = w("01");
        let sup = w("0011");
        assert!(Embedding::new(vec![1, 4], &sub, &sup).is_some());
        assert!(Embedding::new(vec![3, 4], &sub, &sup).is_none());
        assert!(Embedding::new(vec![2, 2], &sub, &sup).is_none());
        assert!(Embedding::new(vec![0, 3], &sub, &sup).is_none());
        assert!(Embedding::new(vec![1, 5], &sub, &sup).is_none());
        assert!(Embedding::new(vec![1], &sub, &sup).is_none());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("0122").to_string(), "0122");
        assert_eq!(
            "01a".parse::<Word>(),
            Err(WordError::InvalidLetter {
                index: 2,
                found: 'a'
            })
        );
        assert_eq!(w("").len(), 0);
        assert_eq!(w("0202").count(Letter::Two), 2);
    }
}
