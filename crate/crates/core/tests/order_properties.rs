mod common;

use braidtwist::dehornoy::{compare, dehornoy_floor, handle_reduce, order_sign, to_sigma1_positive_word, OrderSign};
use braidtwist::garside::{are_equal, is_trivial};
use braidtwist::word::{BraidWord, EmbedMode};
use braidtwist::Limits;
use common::*;
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

/// Sign read off a handle-free word: the lowest generator present occurs
/// with a single sign.
fn oracle_sign(u: &BraidWord) -> OrderSign {
    let r = handle_reduce(u, &lim()).unwrap();
    match r.letters().iter().min_by_key(|e| e.abs()) {
        None => OrderSign::Zero,
        Some(&e) if e > 0 => OrderSign::Positive,
        Some(_) => OrderSign::Negative,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn trichotomy((u, v) in pair_strategy(2, 5, 20)) {
        let uv = compare(&u, &v, &lim()).unwrap();
        let vu = compare(&v, &u, &lim()).unwrap();
        prop_assert_eq!(uv, vu.reverse());
        prop_assert_eq!(uv == OrderSign::Zero, are_equal(&u, &v).unwrap());
    }

    #[test]
    fn left_invariance((u, v) in pair_strategy(2, 5, 15), seed in any::<u64>()) {
        let w = BraidWord::random(&mut rng(seed), u.strands(), 15);
        let a = compare(&u, &v, &lim()).unwrap();
        let b = compare(&w.concat(&u).unwrap(), &w.concat(&v).unwrap(), &lim()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sign_matches_reduced_word(u in word_strategy(2, 6, 30)) {
        prop_assert_eq!(order_sign(&u, &lim()).unwrap(), oracle_sign(&u));
        prop_assert_eq!(order_sign(&u, &lim()).unwrap() == OrderSign::Zero, is_trivial(&u));
    }

    #[test]
    fn handle_reduction_preserves_the_braid(u in word_strategy(2, 5, 30)) {
        let r = handle_reduce(&u, &lim()).unwrap();
        prop_assert!(are_equal(&u, &r).unwrap());
        let lowest = r.letters().iter().map(|e| e.abs()).min();
        if let Some(m) = lowest {
            let signs: Vec<bool> = r.letters().iter().filter(|e| e.abs() == m).map(|&e| e > 0).collect();
            prop_assert!(signs.iter().all(|&s| s == signs[0]));
        }
    }

    #[test]
    fn floor_satisfies_its_definition(u in word_strategy(2, 5, 20)) {
        let n = u.strands();
        let m = dehornoy_floor(&u, &lim()).unwrap();
        let tw = BraidWord::full_twist(n);
        let below = tw.power(m).unwrap();
        let above = tw.power(m + 1).unwrap();
        prop_assert_ne!(compare(&below, &u, &lim()).unwrap(), OrderSign::Negative);
        prop_assert_eq!(compare(&u, &above, &lim()).unwrap(), OrderSign::Positive);
    }

    #[test]
    fn floor_translates_under_full_twists(u in word_strategy(2, 5, 20), m in -3i64..=3) {
        let shifted = BraidWord::full_twist(u.strands()).power(m).unwrap().concat(&u).unwrap();
        prop_assert_eq!(
            dehornoy_floor(&shifted, &lim()).unwrap(),
            dehornoy_floor(&u, &lim()).unwrap() + m
        );
    }

    #[test]
    fn floor_is_nearly_conjugation_invariant((u, g) in pair_strategy(2, 5, 15)) {
        let a = dehornoy_floor(&u, &lim()).unwrap();
        let b = dehornoy_floor(&u.conjugate(&g).unwrap(), &lim()).unwrap();
        prop_assert!((a - b).abs() <= 1);
    }

    #[test]
    fn embedded_braids_have_floor_minus_one_or_zero(u in word_strategy(2, 5, 20)) {
        let e = u.embed(EmbedMode::Shift);
        let f = dehornoy_floor(&e, &lim()).unwrap();
        prop_assert!(f == -1 || f == 0);
    }
}

#[test]
fn positive_words_are_positive() {
    let mut r = rng(21);
    for trial in 0..2_000 {
        let n = 2 + trial % 4;
        let u = BraidWord::random(&mut r, n, 20);
        let p: Vec<i32> = u.letters().iter().map(|e| e.abs()).collect();
        let p = word(n, &p);
        let expected = if p.is_empty() { OrderSign::Zero } else { OrderSign::Positive };
        assert_eq!(order_sign(&p, &lim()).unwrap(), expected, "{p}");
    }
}

#[test]
fn sigma_i_positive_words_are_positive() {
    let mut r = rng(22);
    for trial in 0..2_000 {
        let n = 3 + trial % 3;
        let i = 1 + (trial % (n - 1)) as i32;
        let u = sigma_positive(&mut r, n, i, 20);
        assert_eq!(order_sign(&u, &lim()).unwrap(), OrderSign::Positive, "{u}");
        assert_eq!(order_sign(&u.inverse(), &lim()).unwrap(), OrderSign::Negative);
    }
}

#[test]
fn sign_is_stable_under_rewriting() {
    let mut r = rng(23);
    for trial in 0..2_000 {
        let n = 2 + trial % 4;
        let u = BraidWord::random(&mut r, n, 15);
        let v = scramble(&u, &mut r, 4);
        assert_eq!(order_sign(&u, &lim()).unwrap(), order_sign(&v, &lim()).unwrap());
    }
}

#[test]
fn transitivity_on_random_triples() {
    let mut r = rng(24);
    for _ in 0..500 {
        let mut ws: Vec<BraidWord> = (0..3).map(|_| BraidWord::random(&mut r, 4, 10)).collect();
        ws.sort_by(|a, b| match compare(a, b, &lim()).unwrap() {
            OrderSign::Positive => std::cmp::Ordering::Less,
            OrderSign::Zero => std::cmp::Ordering::Equal,
            OrderSign::Negative => std::cmp::Ordering::Greater,
        });
        assert_ne!(compare(&ws[0], &ws[2], &lim()).unwrap(), OrderSign::Negative);
    }
}

#[test]
fn sigma1_positive_rewrite_keeps_the_braid() {
    let mut r = rng(25);
    let mut found = 0;
    while found < 300 {
        let n = 3 + found % 3;
        let u = BraidWord::random(&mut r, n, 15);
        let reduced = handle_reduce(&u, &lim()).unwrap();
        if !reduced.contains(1) || reduced.contains(-1) {
            assert!(to_sigma1_positive_word(&u, &lim()).is_err());
            continue;
        }
        let w = to_sigma1_positive_word(&u, &lim()).unwrap();
        assert!(are_equal(&u, &w).unwrap());
        assert!(w.contains(1) && !w.contains(-1));
        found += 1;
    }
}
