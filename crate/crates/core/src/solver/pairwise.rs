use std::time::Instant;

use super::{SearchStats, SolverResult};
use crate::words::{Letter, Word};

/// Table of `lcs(u[i..], v[j..])`, row-major with `v.len() + 1` columns.
fn suffix_lcs_table(u: &[Letter], v: &[Letter]) -> Vec<u32> {
    let cols = v.len() + 1;
    let mut t = vec![0u32; (u.len() + 1) * cols];
    for i in (0..u.len()).rev() {
        for j in (0..v.len()).rev() {
            t[i * cols + j] = if u[i] == v[j] {
                t[(i + 1) * cols + j + 1] + 1
            } else {
                t[(i + 1) * cols + j].max(t[i * cols + j + 1])
            };
        }
    }
    t
}

pub fn lcs_len(u: &[Letter], v: &[Letter]) -> usize {
    suffix_lcs_table(u, v)[0] as usize
}

/// Optimal supersequence of two words, of length `|u| + |v| - lcs(u, v)`.
///
/// When both branches are optimal the smaller letter is emitted first.
pub fn scs_pairwise(u: &[Letter], v: &[Letter]) -> SolverResult {
    let start = Instant::now();
    let t = suffix_lcs_table(u, v);
    let cols = v.len() + 1;
    let at = |i: usize, j: usize| t[i * cols + j];

    let mut out = Word::with_capacity(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < u.len() && j < v.len() {
        if u[i] == v[j] {
            out.push(u[i]);
            i += 1;
            j += 1;
            continue;
        }
        let skip_u = at(i + 1, j);
        let skip_v = at(i, j + 1);
        if skip_u > skip_v || (skip_u == skip_v && u[i] < v[j]) {
            out.push(u[i]);
            i += 1;
        } else {
            out.push(v[j]);
            j += 1;
        }
    }
    u[i..].iter().chain(&v[j..]).for_each(|&l| out.push(l));

    SolverResult {
        supersequence: out,
        optimal: true,
        stats: SearchStats {
            states_expanded: t.len() as u64,
            elapsed: start.elapsed(),
        },
    }
}
