#![allow(dead_code)]

use braidtwist::word::BraidWord;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

pub fn word_strategy(min_n: usize, max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (min_n..=max_n).prop_flat_map(move |n| {
        let top = (n as i32 - 1).max(1);
        let len = if n < 2 { 0..=0 } else { 0..=max_len };
        prop::collection::vec(
            (1..=top, any::<bool>()).prop_map(|(i, pos)| if pos { i } else { -i }),
            len,
        )
        .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

/// Two words on the same strand count.
pub fn pair_strategy(min_n: usize, max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (word_strategy(n, n, max_len), word_strategy(n, n, max_len))
    })
}

/// Rewrites `u` into another word for the same braid: inserts braid
/// relators, far commutators and trivial pairs, and swaps commuting
/// neighbours.
pub fn scramble<R: Rng>(u: &BraidWord, rng: &mut R, moves: usize) -> BraidWord {
    let n = u.strands() as i32;
    let mut letters = u.letters().to_vec();
    if n < 2 {
        return u.clone();
    }
    for _ in 0..moves {
        let pos = rng.gen_range(0..=letters.len());
        let insert: Vec<i32> = match rng.gen_range(0..4) {
            0 if n >= 3 => {
                let i = rng.gen_range(1..n - 1);
                let j = i + 1;
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                // a_i a_j a_i (a_j a_i a_j)^{-1}
                vec![s * i, s * j, s * i, -s * j, -s * i, -s * j]
            }
            1 if n >= 4 => {
                let i = rng.gen_range(1..n - 2);
                let j = rng.gen_range(i + 2..n);
                vec![i, j, -i, -j]
            }
            2 => {
                let i = rng.gen_range(1..n);
                let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                vec![s * i, -s * i]
            }
            _ => {
                if letters.len() >= 2 {
                    let p = rng.gen_range(0..letters.len() - 1);
                    if (letters[p].abs() - letters[p + 1].abs()).abs() >= 2 {
                        letters.swap(p, p + 1);
                    }
                }
                Vec::new()
            }
        };
        letters.splice(pos..pos, insert);
    }
    BraidWord::new(u.strands(), letters).unwrap()
}

/// A word containing `a_i`, no `a_i^{-1}` and no lower generator.
pub fn sigma_positive<R: Rng>(rng: &mut R, n: usize, index: i32, len: usize) -> BraidWord {
    let top = n as i32 - 1;
    let mut letters: Vec<i32> = (0..len)
        .map(|_| {
            let j = rng.gen_range(index..=top);
            if j == index || rng.gen_bool(0.5) {
                j
            } else {
                -j
            }
        })
        .collect();
    let pos = rng.gen_range(0..=letters.len());
    letters.insert(pos, index);
    BraidWord::new(n, letters).unwrap()
}
