//! Best-first search for a shortest common supersequence.
//!
//! A state is the vector of matched-prefix lengths, one per distinct input
//! word. Appending a letter advances every word whose next unmatched letter it
//! is; letters that advance nothing are never emitted. The search is A* with
//! the letter-count lower bound, which is consistent (one emitted letter lowers
//! it by at most one), so the first goal popped is optimal.
//!
//! Ties are broken by lowest `f`, then deepest `g`, then earliest discovery.
//! Successors are generated in letter order 0 < 1 < 2, so the returned word
//! is reproducible.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::time::Instant;

use rustc_hash::FxHashMap;

use super::majority::majority_merge_from;
use super::{distinct_nonempty, SearchBudget, SearchStats, SolverError, SolverResult};
use crate::words::{Letter, Word};

const NO_PARENT: u32 = u32::MAX;

struct Node {
    g: u32,
    h: u32,
    parent: u32,
    letter: Letter,
    closed: bool,
}

/// Per-word suffix letter counts, `counts[p][a]` for the suffix starting at `p`.
fn suffix_counts(x: &[Letter]) -> Vec<[u32; 3]> {
    let mut out = vec![[0u32; 3]; x.len() + 1];
    for p in (0..x.len()).rev() {
        out[p] = out[p + 1];
        out[p][x[p].index()] += 1;
    }
    out
}

struct Search<'a> {
    words: Vec<&'a [Letter]>,
    suffix: Vec<Vec<[u32; 3]>>,
    /// Flat positions, `words.len()` entries per node.
    positions: Vec<u32>,
    nodes: Vec<Node>,
    index: FxHashMap<Box<[u32]>, u32>,
}

impl<'a> Search<'a> {
    fn new(words: Vec<&'a [Letter]>) -> Self {
        let suffix = words.iter().map(|x| suffix_counts(x)).collect();
        Search {
            words,
            suffix,
            positions: Vec::new(),
            nodes: Vec::new(),
            index: FxHashMap::default(),
        }
    }

    fn width(&self) -> usize {
        self.words.len()
    }

    fn pos(&self, id: u32) -> &[u32] {
        let k = self.width();
        &self.positions[id as usize * k..(id as usize + 1) * k]
    }

    fn bound(&self, pos: &[u32]) -> u32 {
        let mut best = [0u32; 3];
        for (s, &p) in self.suffix.iter().zip(pos) {
            let c = s[p as usize];
            for a in 0..3 {
                best[a] = best[a].max(c[a]);
            }
        }
        best.iter().sum()
    }

    fn insert(&mut self, pos: Box<[u32]>, g: u32, h: u32, parent: u32, letter: Letter) -> u32 {
        let id = self.nodes.len() as u32;
        self.positions.extend_from_slice(&pos);
        self.nodes.push(Node {
            g,
            h,
            parent,
            letter,
            closed: false,
        });
        self.index.insert(pos, id);
        id
    }

    fn path(&self, mut id: u32) -> Word {
        let mut letters = Vec::with_capacity(self.nodes[id as usize].g as usize);
        while self.nodes[id as usize].parent != NO_PARENT {
            letters.push(self.nodes[id as usize].letter);
            id = self.nodes[id as usize].parent;
        }
        letters.reverse();
        Word::from(letters)
    }

    /// Completes the partial solution at `id` greedily.
    fn complete(&self, id: u32) -> Word {
        let mut out = self.path(id);
        let mut pos: Vec<usize> = self.pos(id).iter().map(|&p| p as usize).collect();
        majority_merge_from(&self.words, &mut pos, &mut out);
        out
    }
}

/// Optimal common supersequence of `words`, or the best incumbent if the
/// budget runs out first.
pub fn scs_exact(words: &[Word], budget: &SearchBudget) -> Result<SolverResult, SolverError> {
    let start = Instant::now();
    let ws = distinct_nonempty(words);
    let mut search = Search::new(ws);
    let k = search.width();

    let origin: Box<[u32]> = vec![0u32; k].into_boxed_slice();
    let h0 = search.bound(&origin);
    let root = search.insert(origin, 0, h0, NO_PARENT, Letter::Zero);

    // max-heap on (lowest f, highest g, lowest id)
    let mut open = BinaryHeap::new();
    open.push((Reverse(h0), 0u32, Reverse(root)));

    let mut expanded: u64 = 0;
    // popped node closest to the goal, for the incumbent
    let mut frontier_best = root;
    let mut succ = vec![0u32; k];

    while let Some((Reverse(f), g, Reverse(id))) = open.pop() {
        let node = &search.nodes[id as usize];
        if node.closed || node.g != g {
            continue;
        }
        if node.h == 0 {
            let supersequence = search.path(id);
            debug_assert_eq!(supersequence.len() as u32, f);
            return Ok(SolverResult {
                supersequence,
                optimal: true,
                stats: SearchStats {
                    states_expanded: expanded,
                    elapsed: start.elapsed(),
                },
            });
        }
        if expanded >= budget.max_states() {
            break;
        }
        search.nodes[id as usize].closed = true;
        expanded += 1;
        {
            let best = &search.nodes[frontier_best as usize];
            let node = &search.nodes[id as usize];
            if (node.h, Reverse(node.g)) < (best.h, Reverse(best.g)) {
                frontier_best = id;
            }
        }

        for letter in Letter::ALL {
            let mut advanced = false;
            succ.copy_from_slice(search.pos(id));
            for (i, p) in succ.iter_mut().enumerate() {
                if search.words[i].get(*p as usize) == Some(&letter) {
                    *p += 1;
                    advanced = true;
                }
            }
            if !advanced {
                continue;
            }
            let g2 = g + 1;
            match search.index.get(succ.as_slice()).copied() {
                Some(other) => {
                    let n = &mut search.nodes[other as usize];
                    if !n.closed && g2 < n.g {
                        n.g = g2;
                        n.parent = id;
                        n.letter = letter;
                        open.push((Reverse(g2 + n.h), g2, Reverse(other)));
                    }
                }
                None => {
                    let h2 = search.bound(&succ);
                    if (g2 + h2) as usize > budget.max_length() {
                        continue;
                    }
                    let other = search.insert(succ.clone().into_boxed_slice(), g2, h2, id, letter);
                    open.push((Reverse(g2 + h2), g2, Reverse(other)));
                }
            }
        }
    }

    let mut incumbent = search.complete(frontier_best);
    let from_scratch = search.complete(root);
    if from_scratch.len() < incumbent.len() {
        incumbent = from_scratch;
    }
    Err(SolverError::BudgetExceeded {
        incumbent: Box::new(SolverResult {
            supersequence: incumbent,
            optimal: false,
            stats: SearchStats {
                states_expanded: expanded,
                elapsed: start.elapsed(),
            },
        }),
    })
}
