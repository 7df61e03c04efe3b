use proptest::collection::vec;
use proptest::prelude::*;

use scs_core::normalizer::{first_step, normalize, second_step};
use scs_core::reduction::{build_gadgets, threshold, Graph};
use scs_core::solver::{lcs_len, scs_exact, scs_majority_merge, scs_pairwise, SearchBudget};
use scs_core::words::{
    count_0202_blocks, count_ones, is_common_supersequence, is_in_phi_image, is_supersequence,
    leftmost_embedding, phi_decode, phi_encode, segment, validate_mscs_input, Letter,
    PhiSegmentation, Word,
};

fn word_from(digits: &[u8]) -> Word {
    digits
        .iter()
        .map(|&d| Letter::from_index(d as usize).unwrap())
        .collect()
}

fn ternary(max: usize) -> impl Strategy<Value = Word> {
    vec(0u8..3, 0..=max).prop_map(|d| word_from(&d))
}

fn binary(max: usize) -> impl Strategy<Value = Word> {
    vec(0u8..2, 0..=max).prop_map(|d| word_from(&d))
}

fn exact(ws: &[Word]) -> Word {
    scs_exact(ws, &SearchBudget::default())
        .unwrap()
        .supersequence
}

/// Subsequence test by recursion on the first letters.
fn subseq(x: &[Letter], y: &[Letter]) -> bool {
    match (x.split_first(), y.split_first()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((a, xs)), Some((b, ys))) => (a == b && subseq(xs, ys)) || subseq(x, ys),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn greedy_matches_recursive_check(x in ternary(6), y in ternary(10)) {
        prop_assert_eq!(is_supersequence(&x, &y), subseq(&x, &y));
    }

    #[test]
    fn leftmost_embedding_is_earliest(x in ternary(5), y in ternary(10)) {
        match leftmost_embedding(&x, &y) {
            None => prop_assert!(!subseq(&x, &y)),
            Some(e) => {
                prop_assert!(e.is_valid_for(&x, &y));
                for (k, &t) in e.map().iter().enumerate() {
                    // 1-based index: x[..=k] fits in y[..t] but not in y[..t-1]
                    prop_assert!(subseq(&x[..=k], &y[..t]));
                    prop_assert!(!subseq(&x[..=k], &y[..t - 1]));
                }
            }
        }
    }

    #[test]
    fn phi_round_trip(x in binary(12)) {
        let y = phi_encode(&x).unwrap();
        prop_assert_eq!(y.len(), 4 * x.count(Letter::Zero) + x.count(Letter::One));
        prop_assert!(is_in_phi_image(&y));
        prop_assert_eq!(count_ones(&y), x.count(Letter::One));
        prop_assert_eq!(count_0202_blocks(&y).unwrap(), x.count(Letter::Zero));
        prop_assert_eq!(phi_decode(&y).unwrap(), x);
    }

    #[test]
    fn phi_image_iff_even_runs(runs in vec(0usize..5, 1..6)) {
        let seg = PhiSegmentation::from_runs(runs.clone());
        let w = seg.to_word();
        let back = segment(&w).unwrap();
        prop_assert_eq!(back.runs(), &runs[..]);
        prop_assert_eq!(is_in_phi_image(&w), runs.iter().all(|c| c % 2 == 0));
    }

    #[test]
    fn mscs_validity_matches_definition(xs in vec(ternary(6), 0..4), first in 0usize..3) {
        let forbidden = Letter::from_index(first).unwrap();
        let expected = xs.iter().all(|x| {
            let t = x.to_string();
            !["00", "11", "22"].iter().any(|d| t.contains(d)) && !t.starts_with(forbidden.to_char())
        });
        prop_assert_eq!(validate_mscs_input(&xs, forbidden), expected);
    }

    #[test]
    fn pairwise_agrees_with_exact(u in ternary(7), v in ternary(7)) {
        let p = scs_pairwise(&u, &v);
        prop_assert!(p.optimal);
        prop_assert!(is_common_supersequence([&u, &v], &p.supersequence));
        prop_assert_eq!(p.length(), u.len() + v.len() - lcs_len(&u, &v));
        prop_assert_eq!(p.length(), exact(&[u, v]).len());
    }

    #[test]
    fn solvers_sandwich(xs in vec(ternary(5), 1..5)) {
        let e = scs_exact(&xs, &SearchBudget::default()).unwrap();
        let m = scs_majority_merge(&xs);
        prop_assert!(e.optimal);
        prop_assert!(is_common_supersequence(&xs, &e.supersequence));
        prop_assert!(is_common_supersequence(&xs, &m.supersequence));
        let longest = xs.iter().map(|x| x.len()).max().unwrap();
        let total: usize = xs.iter().map(|x| x.len()).sum();
        prop_assert!(longest <= e.length() && e.length() <= m.length() && m.length() <= total);
        if m.optimal {
            prop_assert_eq!(m.length(), e.length());
        }
    }

    #[test]
    fn adding_a_word_never_shortens(xs in vec(ternary(4), 1..4), extra in ternary(4)) {
        let before = exact(&xs).len();
        let mut more = xs.clone();
        more.push(extra);
        prop_assert!(exact(&more).len() >= before);
    }

    #[test]
    fn phi_of_binary_optimum_bounds_phi_instance(xs in vec(binary(4), 1..4)) {
        let s = exact(&xs);
        let ys: Vec<Word> = xs.iter().map(|x| phi_encode(x).unwrap()).collect();
        let bound = 4 * s.count(Letter::Zero) + s.count(Letter::One);
        prop_assert!(exact(&ys).len() <= bound);
    }

    #[test]
    fn solving_is_deterministic(xs in vec(ternary(5), 1..4)) {
        let a = scs_exact(&xs, &SearchBudget::default()).unwrap();
        let b = scs_exact(&xs, &SearchBudget::default()).unwrap();
        prop_assert_eq!(a.supersequence, b.supersequence);
        prop_assert_eq!(scs_majority_merge(&xs).supersequence, scs_majority_merge(&xs).supersequence);
    }

    #[test]
    fn first_step_reaches_regular_form(s in ternary(16)) {
        let (out, trace) = first_step(&s);
        prop_assert!(out.len() <= s.len());
        let text = out.to_string();
        for bad in ["00", "22", "01", "12"] {
            prop_assert!(!text.contains(bad), "{} contains {}", text, bad);
        }
        prop_assert!(!text.starts_with('2') && !text.ends_with('0'));
        prop_assert!(segment(&out).is_ok());
        prop_assert!(trace.steps.iter().all(|st| st.after_len <= st.before_len));
        let states = trace.replay(&s);
        prop_assert_eq!(states.last().unwrap(), &out);
    }

    #[test]
    fn second_step_keeps_ones(runs in vec(0usize..6, 1..6)) {
        let s2 = PhiSegmentation::from_runs(runs).to_word();
        let (out, _) = second_step(&s2).unwrap();
        prop_assert!(is_in_phi_image(&out));
        prop_assert_eq!(count_ones(&out), count_ones(&s2));
        prop_assert!(out.count(Letter::Zero) <= s2.count(Letter::Zero));
        prop_assert!(out.len() <= s2.len());
    }

    #[test]
    fn normalizing_is_deterministic_and_idempotent(xs in vec(binary(4), 1..4), noise in ternary(4)) {
        let ys: Vec<Word> = xs.iter().map(|x| phi_encode(x).unwrap()).collect();
        let s = exact(&ys).concat(&noise);
        let a = normalize(&s, &ys).unwrap();
        prop_assert_eq!(&a, &normalize(&s, &ys).unwrap());
        prop_assert_eq!(&normalize(&a, &ys).unwrap(), &a);
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=3).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len())
            .prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gadget_shapes(g in small_graph()) {
        let n = g.n();
        let inst = build_gadgets(&g);
        prop_assert_eq!(inst.words.len(), n * (36 * n * n + 1) + g.m());
        prop_assert_eq!(inst.threshold(0), threshold(n, 0));
        let (xs, ts) = inst.words.split_at(n * (36 * n * n + 1));
        for (group, len, blocks) in [(xs, 168 * n * n + 12 * n + 2, 42 * n * n + 3 * n), (ts, 168 * n * n + 12 * n - 2, 42 * n * n + 3 * n - 1)] {
            for x in group {
                prop_assert!(is_in_phi_image(x));
                prop_assert_eq!(x.len(), len);
                prop_assert_eq!(count_0202_blocks(x).unwrap(), blocks);
                prop_assert_eq!(count_ones(x), 2);
                prop_assert!(!x.to_string().contains("11"));
            }
        }
    }
}
