//! Rewriting a `σ_1`-positive braid as a conjugate of `Δ^{2l} ∏ L_i R_i`.
//!
//! Write the word (doubled if it has an odd number of `a_1`) cyclically as
//! `∏_{i=1}^{2l} a_1 β_i` with every `β_i` free of `a_1^{±1}`. Each pair
//! satisfies
//!
//! ```text
//! a_1 β_{2i-1} a_1 β_{2i} = Δ² Δ_R^{-1} (a_1^{-1} ⋯ a_{n-2}^{-1}) bar(β_{2i-1}) Δ_L^{-1}
//!                               (a_{n-1}^{-1} ⋯ a_2^{-1}) β_{2i}
//! ```
//!
//! and moving every `Δ_R^{-1}` to the right of its block gives
//! `Δ_R^{-1} · Δ^{2l} ∏ L_i R_i · Δ_R` with
//! `L_i = (a_1^{-1} ⋯ a_{n-2}^{-1}) bar(β_{2i-1}) Δ_L^{-1}` (no `a_{n-1}^{±1}`) and
//! `R_i = (a_{n-1}^{-1} ⋯ a_2^{-1}) β_{2i} Δ_R^{-1}` (no `a_1^{±1}`).

use serde::Serialize;

use crate::dehornoy::to_sigma1_positive_word;
use crate::error::{BraidError, Result};
use crate::garside::are_equal;
use crate::word::BraidWord;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub strands: usize,
    pub l: usize,
    pub left_factors: Vec<BraidWord>,
    pub right_factors: Vec<BraidWord>,
    /// `c` with `c^{-1} · Δ^{2l} ∏ L_i R_i · c` equal to the input.
    pub conjugator: BraidWord,
    /// Whether the input was squared to make the `a_1` count even.
    pub doubled: bool,
}

/// Text form used by the CLI: words in the standard text format.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionRecord {
    pub l: usize,
    pub doubled: bool,
    pub conjugator: String,
    #[serde(rename = "L")]
    pub left: Vec<String>,
    #[serde(rename = "R")]
    pub right: Vec<String>,
}

impl From<&Decomposition> for DecompositionRecord {
    fn from(d: &Decomposition) -> Self {
        DecompositionRecord {
            l: d.l,
            doubled: d.doubled,
            conjugator: d.conjugator.to_string(),
            left: d.left_factors.iter().map(|w| w.to_string()).collect(),
            right: d.right_factors.iter().map(|w| w.to_string()).collect(),
        }
    }
}

/// A word cut at its `a_1` letters after a cyclic rotation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct A1Split {
    /// Letters moved from the front to the back so the word starts with `a_1`.
    pub rotated_prefix: BraidWord,
    /// `β_1, …, β_m` with the rotated word equal to `∏ a_1 β_i`.
    pub pieces: Vec<BraidWord>,
}

fn is_sigma1_positive_word(u: &BraidWord) -> bool {
    u.contains(1) && !u.contains(-1)
}

pub fn factor_by_a1(u: &BraidWord) -> Result<A1Split> {
    if !is_sigma1_positive_word(u) {
        return Err(BraidError::NotSigma1PositiveWord);
    }
    let n = u.strands();
    let start = u.letters().iter().position(|&e| e == 1).unwrap_or(0);
    let rotated = u.rotate_left(start);
    let mut pieces: Vec<Vec<i32>> = Vec::new();
    for &e in rotated.letters() {
        if e == 1 {
            pieces.push(Vec::new());
        } else if let Some(last) = pieces.last_mut() {
            last.push(e);
        }
    }
    Ok(A1Split {
        rotated_prefix: u.prefix(start),
        pieces: pieces
            .into_iter()
            .map(|p| BraidWord::from_raw(n, p))
            .collect(),
    })
}

/// `a_1^{-1} a_2^{-1} ⋯ a_{n-2}^{-1}`
fn left_prefix(n: usize) -> BraidWord {
    BraidWord::from_raw(n, (1..=n as i32 - 2).map(|i| -i).collect())
}

/// `a_{n-1}^{-1} ⋯ a_2^{-1}`
fn right_prefix(n: usize) -> BraidWord {
    BraidWord::from_raw(n, (2..=n as i32 - 1).rev().map(|i| -i).collect())
}

/// Decomposes a word containing `a_1` and no `a_1^{-1}`.
pub fn decompose(u: &BraidWord) -> Result<Decomposition> {
    let n = u.strands();
    if n < 3 {
        return Err(BraidError::BadStrandCount { strands: n, min: 3 });
    }
    if !is_sigma1_positive_word(u) {
        return Err(BraidError::NotSigma1PositiveWord);
    }
    let doubled = u.count(1) % 2 == 1;
    let word = if doubled { u.concat(u)? } else { u.clone() };
    let split = factor_by_a1(&word)?;
    let delta_l_inv = BraidWord::delta_left(n)?.inverse();
    let delta_r = BraidWord::delta_right(n)?;
    let delta_r_inv = delta_r.inverse();
    let (lp, rp) = (left_prefix(n), right_prefix(n));

    let mut left_factors = Vec::new();
    let mut right_factors = Vec::new();
    for pair in split.pieces.chunks(2) {
        let (odd, even) = (&pair[0], &pair[1]);
        let l = BraidWord::product(n, [&lp, &odd.bar(), &delta_l_inv])?;
        let r = BraidWord::product(n, [&rp, even, &delta_r_inv])?;
        left_factors.push(l.free_reduce());
        right_factors.push(r.free_reduce());
    }
    // word = p·s and the rotation s·p = Δ_R^{-1} β' Δ_R, so
    // word = (Δ_R p^{-1})^{-1} β' (Δ_R p^{-1})
    let conjugator = delta_r.concat(&split.rotated_prefix.inverse())?.free_reduce();
    Ok(Decomposition {
        strands: n,
        l: left_factors.len(),
        left_factors,
        right_factors,
        conjugator,
        doubled,
    })
}

/// Converts `u` to a `σ_1`-positive word by handle reduction when it is not
/// one already, then decomposes. Returns the word actually decomposed.
pub fn decompose_braid(u: &BraidWord, limits: &Limits) -> Result<(BraidWord, Decomposition)> {
    let word = if is_sigma1_positive_word(u) {
        u.clone()
    } else {
        to_sigma1_positive_word(u, limits)?
    };
    let d = decompose(&word)?;
    Ok((word, d))
}

impl Decomposition {
    /// `Δ^{2l} ∏ L_i R_i`
    pub fn core_word(&self) -> Result<BraidWord> {
        let mut out = BraidWord::full_twist(self.strands).power(self.l as i64)?;
        for (l, r) in self.left_factors.iter().zip(&self.right_factors) {
            out = BraidWord::product(self.strands, [&out, l, r])?;
        }
        Ok(out)
    }

    /// `c^{-1} · Δ^{2l} ∏ L_i R_i · c`
    pub fn reconstruct(&self) -> Result<BraidWord> {
        BraidWord::product(
            self.strands,
            [&self.conjugator.inverse(), &self.core_word()?, &self.conjugator],
        )
    }

    /// The letter constraints: `l` factors on each side, each `L_i` free of
    /// `a_{n-1}^{±1}` and each `R_i` free of `a_1^{±1}`.
    pub fn letter_constraints_hold(&self) -> bool {
        let top = self.strands as i32 - 1;
        self.left_factors.len() == self.l
            && self.right_factors.len() == self.l
            && self.left_factors.iter().all(|w| w.avoids_index(top))
            && self.right_factors.iter().all(|w| w.avoids_index(1))
    }
}

/// Checks the letter constraints and the group identity against `u` (or
/// `u²` when the decomposition was doubled).
pub fn verify_decomposition(d: &Decomposition, u: &BraidWord) -> bool {
    if d.strands != u.strands() || !d.letter_constraints_hold() {
        return false;
    }
    let target = if d.doubled {
        match u.concat(u) {
            Ok(t) => t,
            Err(_) => return false,
        }
    } else {
        u.clone()
    };
    match d.reconstruct() {
        Ok(r) => are_equal(&r, &target).unwrap_or(false),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn split_examples() {
        let s = factor_by_a1(&w(3, &[1, 2, 1, 2])).unwrap();
        assert!(s.rotated_prefix.is_empty());
        assert_eq!(s.pieces, vec![w(3, &[2]), w(3, &[2])]);

        let s = factor_by_a1(&w(3, &[2, 1, 2])).unwrap();
        assert_eq!(s.rotated_prefix, w(3, &[2]));
        assert_eq!(s.pieces, vec![w(3, &[2, 2])]);

        assert_eq!(
            factor_by_a1(&w(3, &[1, -1, 2])),
            Err(BraidError::NotSigma1PositiveWord)
        );
        assert_eq!(
            factor_by_a1(&w(3, &[2])),
            Err(BraidError::NotSigma1PositiveWord)
        );
    }

    #[test]
    fn worked_example_in_b3() {
        let u = w(3, &[1, 2, 1, 2]);
        let d = decompose(&u).unwrap();
        assert_eq!(d.l, 1);
        assert!(!d.doubled);
        assert_eq!(d.left_factors, vec![w(3, &[-1])]);
        assert_eq!(d.right_factors, vec![w(3, &[-2])]);
        assert_eq!(d.conjugator, w(3, &[2]));
        // a_1 a_2 a_1 a_2 = Δ² a_2^{-1} a_1^{-1}, conjugated: Δ² a_1^{-1} a_2^{-1}
        let core = d.core_word().unwrap();
        let expected = BraidWord::full_twist(3).concat(&w(3, &[-1, -2])).unwrap();
        assert!(are_equal(&core, &expected).unwrap());
        assert!(verify_decomposition(&d, &u));
    }

    #[test]
    fn odd_count_is_doubled() {
        let u = w(4, &[1, 2, 3]);
        let d = decompose(&u).unwrap();
        assert!(d.doubled);
        assert_eq!(d.l, 1);
        assert!(verify_decomposition(&d, &u));
    }

    #[test]
    fn a1_squared_has_empty_pieces() {
        let u = w(3, &[1, 1]);
        let s = factor_by_a1(&u).unwrap();
        assert!(s.pieces.iter().all(|p| p.is_empty()));
        let d = decompose(&u).unwrap();
        assert!(verify_decomposition(&d, &u));
    }

    #[test]
    fn rotation_is_folded_into_conjugator() {
        let u = w(4, &[3, -2, 1, 2, 1, 3, 3]);
        let d = decompose(&u).unwrap();
        assert!(verify_decomposition(&d, &u));
    }

    #[test]
    fn tampering_is_detected() {
        let u = w(3, &[1, 2, 1, 2]);
        let mut d = decompose(&u).unwrap();
        d.conjugator = w(3, &[-2]);
        assert!(!verify_decomposition(&d, &u));
        let mut d = decompose(&u).unwrap();
        d.right_factors[0] = w(3, &[1]);
        assert!(!verify_decomposition(&d, &u));
    }

    #[test]
    fn rejects_small_or_non_positive() {
        assert!(matches!(
            decompose(&w(2, &[1, 1])),
            Err(BraidError::BadStrandCount { .. })
        ));
        assert_eq!(
            decompose(&w(3, &[1, -1, 1])),
            Err(BraidError::NotSigma1PositiveWord)
        );
    }

    #[test]
    fn non_syntactic_input_goes_through_handle_reduction() {
        let u = w(3, &[1, 2, -1]);
        let (word, d) = decompose_braid(&u, &Limits::default()).unwrap();
        assert!(are_equal(&word, &u).unwrap());
        assert!(verify_decomposition(&d, &word));
        assert!(verify_decomposition(&d, &u));
    }
}
