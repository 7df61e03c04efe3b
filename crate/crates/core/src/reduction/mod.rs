//! Vertex Cover to phi-SCS: the hardness core family, the gadget words, the
//! witness built from a cover, and cover extraction from a short supersequence.

mod cover;
mod gadgets;
mod lemma2;

pub use cover::{minimum_vertex_covers, vertex_cover_brute_force, MAX_BRUTE_FORCE_VERTICES};
pub use gadgets::{
    build_gadgets, check_claim1, cover_prefix_blocks, extract_cover, gadget_words,
    one_block_offsets, split_cover_prefix, threshold, threshold_base, witness_from_cover,
    ReductionInstance,
};
pub use lemma2::{
    lemma2_bound_blocks_to_ones, lemma2_bound_ones_to_blocks, lemma2_family, lemma2_smin,
};

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::normalizer::NormalizeError;
use crate::words::{is_supersequence, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge ({0}, {1}) is not of the form 1 <= i < j <= n")]
    BadEdge(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("not a vertex cover: edge ({0}, {1}) is uncovered")]
    NotACover(usize, usize),
    #[error("the hardness core family needs an even order n >= 2, got {0}")]
    InvalidOrder(usize),
    #[error("word is not in the phi image")]
    NotPhiImage,
    #[error("word is not a supersequence of instance word {index}")]
    NotSupersequence { index: usize },
    #[error("word has length {len}, above the threshold {threshold}")]
    TooLong { len: usize, threshold: usize },
    #[error("word has {found} blocks of 0202, expected {expected}")]
    BlockCount { found: usize, expected: usize },
    #[error("refusing brute force on {n} vertices (limit {limit})")]
    GraphTooLarge { n: usize, limit: usize },
    #[error("extracted set {found} is not a vertex cover of size at most {k}")]
    ExtractionFailed { found: VertexCover, k: usize },
    #[error("internal invariant broken: {0}")]
    Invariant(String),
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
}

/// Undirected simple graph on vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges must satisfy `1 <= i < j <= n` and be distinct.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, ReductionError> {
        if n == 0 {
            return Err(ReductionError::NoVertices);
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &edges {
            if i == 0 || i >= j || j > n {
                return Err(ReductionError::BadEdge(i, j));
            }
            if !seen.insert((i, j)) {
                return Err(ReductionError::DuplicateEdge(i, j));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Every graph on `n` labelled vertices, one per subset of the possible edges.
    pub fn all_on(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| Graph {
            n,
            edges: pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect(),
        })
    }
}

/// A set of vertices, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexCover {
    vertices: BTreeSet<usize>,
}

impl VertexCover {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexCover {
            vertices: vertices.into_iter().collect(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks range and coverage against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), ReductionError> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v == 0 || v > g.n()) {
            return Err(ReductionError::VertexOutOfRange(v));
        }
        match g
            .edges()
            .iter()
            .find(|(i, j)| !self.contains(*i) && !self.contains(*j))
        {
            Some(&(i, j)) => Err(ReductionError::NotACover(i, j)),
            None => Ok(()),
        }
    }

    pub fn is_cover_of(&self, g: &Graph) -> bool {
        self.validate(g).is_ok()
    }
}

impl fmt::Display for VertexCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Index of the first word of `words` that `s` is not a supersequence of.
/// Checks run in parallel; the reported index is the smallest failing one.
pub fn first_non_embedded(words: &[Word], s: &Word) -> Option<usize> {
    words.par_iter().position_first(|x| !is_supersequence(x, s))
}
