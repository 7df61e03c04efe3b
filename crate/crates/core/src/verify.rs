//! Desk-scale verification suite behind `scs verify`.
//!
//! Every check records what was expected and what was observed; failures are
//! collected rather than aborting the run.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::normalizer::{normalize_with_trace, termination_potential};
use crate::reduction::{
    extract_cover, lemma2_bound_blocks_to_ones, lemma2_bound_ones_to_blocks, lemma2_family,
    lemma2_smin, minimum_vertex_covers, threshold, witness_from_cover, Graph,
};
use crate::solver::{random_merge, scs_brute_force, scs_brute_force_all, scs_exact, SearchBudget};
use crate::words::{
    count_0202_blocks, count_ones, is_common_supersequence, is_in_phi_image, phi_encode, w, Letter,
    Word,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Intro,
    Lemma2,
    Reduction,
    Normalizer,
    Oracle,
    All,
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "intro" => Ok(Scope::Intro),
            "lemma2" => Ok(Scope::Lemma2),
            "reduction" => Ok(Scope::Reduction),
            "normalizer" => Ok(Scope::Normalizer),
            "oracle" => Ok(Scope::Oracle),
            "all" => Ok(Scope::All),
            other => Err(format!("unknown scope {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<24} expected: {} | observed: {} ({:.2?})",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.observed,
            self.elapsed
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

/// Runs `body`, which returns `(expected, observed, pass)`, and times it.
fn check(name: &str, body: impl FnOnce() -> (String, String, bool)) -> Check {
    let start = Instant::now();
    let (expected, observed, pass) = body();
    Check {
        name: name.to_string(),
        expected,
        observed,
        pass,
        elapsed: start.elapsed(),
    }
}

fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|s| w(s)).collect()
}

fn show(len: Option<usize>) -> String {
    len.map_or("none".into(), |l| l.to_string())
}

fn exact_len(ws: &[Word]) -> Option<Word> {
    scs_exact(ws, &SearchBudget::default())
        .ok()
        .map(|r| r.supersequence)
}

/// The seven binary words of length 3 other than `111`.
pub fn cube_minus_111() -> Vec<Word> {
    words(&["000", "001", "010", "011", "100", "101", "110"])
}

/// Applies `0 -> 02`, `1 -> 12`.
pub fn double_with_twos(x: &Word) -> Word {
    let mut out = Word::with_capacity(2 * x.len());
    for &l in x.iter() {
        out.push(l);
        out.push(Letter::Two);
    }
    out
}

/// Every word obtained from `base` by inserting twos, up to total length `max_len`.
pub fn two_insertions(base: &Word, max_len: usize) -> Vec<Word> {
    fn go(base: &[Letter], budget: usize, acc: &mut Vec<Letter>, out: &mut Vec<Word>) {
        // choose how many twos go into the gap before base[0] (or at the end)
        for t in 0..=budget {
            let mark = acc.len();
            for _ in 0..t {
                acc.push(Letter::Two);
            }
            match base.split_first() {
                Some((&first, rest)) => {
                    acc.push(first);
                    go(rest, budget - t, acc, out);
                }
                None => out.push(Word::from(acc.clone())),
            }
            acc.truncate(mark);
        }
    }
    let mut out = Vec::new();
    if base.len() <= max_len {
        go(base, max_len - base.len(), &mut Vec::new(), &mut out);
    }
    out
}

pub fn intro_checks() -> Vec<Check> {
    let mut out = Vec::new();

    out.push(check("intro-binary-pair", || {
        let ws = words(&["00111", "11100"]);
        let got = exact_len(&ws).map(|s| s.len());
        let named = w("0011100");
        let named_ok = named.len() == 7 && is_common_supersequence(&ws, &named);
        (
            "optimum 7, 0011100 optimal".into(),
            format!("optimum {}, 0011100 valid={named_ok}", show(got)),
            got == Some(7) && named_ok,
        )
    }));

    out.push(check("intro-phi-pair", || {
        let ws = words(&["0202111", "1110202"]);
        let got = exact_len(&ws).map(|s| s.len());
        let named = w("1110202111");
        let named_ok = named.len() == 10 && is_common_supersequence(&ws, &named);
        // reading 02 back as 0 gives a binary candidate that is one too long
        let candidate: Word = {
            let mut c = Word::new();
            let mut i = 0;
            while i < named.len() {
                c.push(named[i]);
                i += if named[i] == Letter::Zero { 2 } else { 1 };
            }
            c
        };
        (
            "optimum 10, 1110202111 optimal, candidate 11100111 of length 8".into(),
            format!(
                "optimum {}, named valid={named_ok}, candidate {candidate} of length {}",
                show(got),
                candidate.len()
            ),
            got == Some(10) && named_ok && candidate == w("11100111"),
        )
    }));

    out.push(check("intro-cube", || {
        let ws = cube_minus_111();
        let got = exact_len(&ws);
        let all = scs_brute_force_all(&ws, 5).unwrap_or_default();
        (
            "01010, unique among length-5 words".into(),
            format!(
                "exact {}, optima {:?}",
                got.as_ref().map(|s| s.to_string()).unwrap_or_default(),
                all.iter().map(|s| s.to_string()).collect::<Vec<_>>()
            ),
            got == Some(w("01010")) && all == vec![w("01010")],
        )
    }));

    out.push(check("intro-cube-doubled", || {
        let ws: Vec<Word> = cube_minus_111().iter().map(double_with_twos).collect();
        let got = exact_len(&ws).map(|s| s.len());
        let named = w("012012012");
        let named_ok = is_common_supersequence(&ws, &named);
        let insertions = two_insertions(&w("01010"), 9);
        let hits = insertions.iter().filter(|s| is_common_supersequence(&ws, s)).count();
        let ten_ok = is_common_supersequence(&ws, &w("0212021202"));
        (
            "optimum 9, 012012012 optimal, no 2-insertion of 01010 up to length 9, 0212021202 valid".into(),
            format!(
                "optimum {}, named valid={named_ok}, {hits} of {} insertions valid, length-10 valid={ten_ok}",
                show(got),
                insertions.len()
            ),
            got == Some(9) && named_ok && hits == 0 && ten_ok,
        )
    }));

    out
}

/// Random phi-image supersequences of the order-`n` family: random merges,
/// then normalization.
pub fn sample_family_supersequences(n: usize, samples: usize, seed: u64) -> Vec<Word> {
    let family = lemma2_family(n).expect("even order");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let s = random_merge(&family, &mut rng);
            normalize_with_trace(&s, &family)
                .expect("normalizing a valid supersequence")
                .0
        })
        .collect()
}

pub fn lemma2_checks(samples: usize, seed: u64) -> Vec<Check> {
    let mut out = Vec::new();

    out.push(check("lemma2-optimum-n2", || {
        let fam = lemma2_family(2).expect("n = 2");
        let got = exact_len(&fam).map(|s| s.len());
        ("21".into(), show(got), got == Some(21))
    }));

    out.push(check("lemma2-smin", || {
        let mut observed = Vec::new();
        let mut pass = true;
        for n in [2, 4, 6] {
            let s = lemma2_smin(n).expect("even order");
            let ok = s.len() == 4 * n * n + 4 * n - 3
                && is_common_supersequence(&lemma2_family(n).expect("even order"), &s);
            pass &= ok;
            observed.push(format!("n={n}: len {} valid={ok}", s.len()));
        }
        (
            "length 4n^2+4n-3 and valid for n in {2,4,6}".into(),
            observed.join(", "),
            pass,
        )
    }));

    out.push(check("lemma2-tight-n2", || {
        let s = lemma2_smin(2).expect("n = 2");
        let ones = count_ones(&s);
        let blocks = count_0202_blocks(&s).unwrap_or(0);
        let both = lemma2_bound_ones_to_blocks(&s, 2) == Ok(true)
            && lemma2_bound_blocks_to_ones(&s, 2) == Ok(true);
        // equality: ceil(5/5) - 1 + 4 = 4 blocks, ceil(5/1) = 5 ones
        (
            "5 ones, 4 blocks, both bounds met with equality".into(),
            format!("{ones} ones, {blocks} blocks, bounds hold={both}"),
            ones == 5 && blocks == 4 && both,
        )
    }));

    out.push(check("lemma2-bounds", || {
        let mut violations = 0;
        let mut total = 0;
        for n in [2, 4] {
            for s in sample_family_supersequences(n, samples, seed ^ n as u64) {
                total += 1;
                if lemma2_bound_ones_to_blocks(&s, n) != Ok(true)
                    || lemma2_bound_blocks_to_ones(&s, n) != Ok(true)
                {
                    violations += 1;
                }
            }
        }
        (
            format!("0 violations over {total} supersequences"),
            format!("{violations} violations"),
            violations == 0,
        )
    }));

    out
}

/// Witness construction and cover extraction for every graph on up to
/// `max_n` vertices and every minimum cover. Witness lengths are compared
/// against `formula(n, k)`.
pub fn reduction_checks(max_n: usize, formula: &dyn Fn(usize, usize) -> usize) -> Vec<Check> {
    (1..=max_n)
        .map(|n| {
            check(&format!("reduction-n{n}"), || {
                let mut graphs = 0;
                let mut pairs = 0;
                let mut failures = Vec::new();
                for g in Graph::all_on(n) {
                    graphs += 1;
                    for cover in minimum_vertex_covers(&g).expect("small graph") {
                        pairs += 1;
                        if let Err(msg) = round_trip(&g, &cover, formula) {
                            failures.push(msg);
                        }
                    }
                }
                let observed = match failures.first() {
                    None => format!("{graphs} graphs, {pairs} covers, 0 failures"),
                    Some(first) => format!("{} failures, first: {first}", failures.len()),
                };
                (
                    "witness length matches, extraction recovers a cover".into(),
                    observed,
                    failures.is_empty(),
                )
            })
        })
        .collect()
}

fn round_trip(
    g: &Graph,
    cover: &crate::reduction::VertexCover,
    formula: &dyn Fn(usize, usize) -> usize,
) -> Result<(), String> {
    let label = format!("edges {:?} cover {cover}", g.edges());
    let s = witness_from_cover(g, cover).map_err(|e| format!("{label}: {e}"))?;
    if s.len() != formula(g.n(), cover.len()) {
        return Err(format!(
            "{label}: witness length {} vs {}",
            s.len(),
            formula(g.n(), cover.len())
        ));
    }
    let found = extract_cover(&s, g, cover.len()).map_err(|e| format!("{label}: {e}"))?;
    if !found.is_cover_of(g) || found.len() > cover.len() {
        return Err(format!("{label}: extracted {found}"));
    }
    Ok(())
}

/// Random `(S, L)` pairs with `L` in the phi image and `S` a noisy common
/// supersequence of `L`.
pub fn random_normalizer_case<R: Rng>(rng: &mut R) -> (Word, Vec<Word>) {
    let count = rng.gen_range(1..=4);
    let ws: Vec<Word> = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=6);
            let bin: Word = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Letter::Zero
                    } else {
                        Letter::One
                    }
                })
                .collect();
            phi_encode(&bin).expect("binary word")
        })
        .collect();
    let mut s = random_merge(&ws, rng).into_letters();
    for _ in 0..rng.gen_range(0..=6) {
        let at = rng.gen_range(0..=s.len());
        s.insert(at, Letter::ALL[rng.gen_range(0..3)]);
    }
    (Word::from(s), ws)
}

pub fn normalizer_checks(cases: usize, seed: u64) -> Vec<Check> {
    vec![check("normalizer-random", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut violations = 0;
        for _ in 0..cases {
            let (s, ws) = random_normalizer_case(&mut rng);
            let ok = match normalize_with_trace(&s, &ws) {
                Ok((out, trace)) => {
                    let weight = (s.len() as u128).pow(2) + 1;
                    let states = trace.replay(&s);
                    is_in_phi_image(&out)
                        && out.len() <= s.len()
                        && is_common_supersequence(&ws, &out)
                        && states.last() == Some(&out)
                        && states.windows(2).all(|p| {
                            termination_potential(&p[1], weight)
                                < termination_potential(&p[0], weight)
                        })
                }
                Err(_) => false,
            };
            if !ok {
                violations += 1;
            }
        }
        (
            format!("0 violations over {cases} cases"),
            format!("{violations} violations"),
            violations == 0,
        )
    })]
}

pub fn random_ternary_set<R: Rng>(rng: &mut R, max_words: usize, max_len: usize) -> Vec<Word> {
    let count = rng.gen_range(1..=max_words);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            (0..len).map(|_| Letter::ALL[rng.gen_range(0..3)]).collect()
        })
        .collect()
}

pub fn oracle_checks(cases: usize, seed: u64) -> Vec<Check> {
    vec![check("exact-vs-brute-force", || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut mismatches = 0;
        for _ in 0..cases {
            let ws = random_ternary_set(&mut rng, 4, 5);
            let exact = exact_len(&ws).map(|s| s.len());
            let brute = scs_brute_force(&ws, 20).ok().flatten().map(|r| r.length());
            if exact.is_none() || exact != brute {
                mismatches += 1;
            }
        }
        (
            format!("0 mismatches over {cases} sets"),
            format!("{mismatches} mismatches"),
            mismatches == 0,
        )
    })]
}

pub fn run(scope: Scope) -> Report {
    const SEED: u64 = 0x5c5;
    let mut checks = Vec::new();
    if matches!(scope, Scope::Intro | Scope::All) {
        checks.extend(intro_checks());
    }
    if matches!(scope, Scope::Lemma2 | Scope::All) {
        checks.extend(lemma2_checks(1000, SEED));
    }
    if matches!(scope, Scope::Reduction | Scope::All) {
        checks.extend(reduction_checks(4, &threshold));
    }
    if matches!(scope, Scope::Normalizer | Scope::All) {
        checks.extend(normalizer_checks(10_000, SEED));
    }
    if matches!(scope, Scope::Oracle | Scope::All) {
        checks.extend(oracle_checks(1000, SEED));
    }
    Report { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_insertion_enumeration() {
        let all = two_insertions(&w("01"), 3);
        let got: Vec<String> = all.iter().map(|s| s.to_string()).collect();
        assert_eq!(got, ["01", "012", "021", "201"]);
        // 6 gaps, up to 4 twos: C(4 + 6, 6) words
        assert_eq!(two_insertions(&w("01010"), 9).len(), 210);
        assert!(two_insertions(&w("010"), 2).is_empty());
    }

    #[test]
    fn doubling() {
        assert_eq!(double_with_twos(&w("01")), w("0212"));
    }

    #[test]
    fn scope_parsing() {
        assert_eq!("all".parse::<Scope>(), Ok(Scope::All));
        assert!("everything".parse::<Scope>().is_err());
    }

    #[test]
    fn intro_scope_passes() {
        let report = run(Scope::Intro);
        assert_eq!(report.checks.len(), 4);
        assert!(report.all_pass(), "{:#?}", report.checks);
    }

    #[test]
    fn mutated_threshold_is_caught() {
        let honest = reduction_checks(2, &threshold);
        assert!(honest.iter().all(|c| c.pass));
        let mutated = |n: usize, k: usize| 168 * n * n + 36 * n - 3 + k;
        let report = reduction_checks(2, &mutated);
        assert!(report.iter().any(|c| !c.pass));
    }
}
