//! Braid words over the Artin generators.
//!
//! A letter `e` encodes `a_|e|` raised to `sign(e)`. Words carry their strand
//! count, and every binary operation checks that the counts agree.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};
use crate::perm::Permutation;
use crate::DEFAULT_MAX_WORD_LENGTH;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// How a word on `n - 1` strands is placed inside `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedMode {
    /// `a_i -> a_{i+1}`: the last `n - 1` strands.
    Shift,
    /// `a_i -> a_i`: the first `n - 1` strands.
    Keep,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::BadStrandCount { strands, min: 1 });
        }
        for &e in &letters {
            check_letter(e as i64, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&e| e != 0 && (e.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid group needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated signed generator indices, e.g. `"1 -2 1"`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::BadStrandCount { strands, min: 1 });
        }
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let e: i64 = token
                .parse()
                .map_err(|_| BraidError::MalformedToken(token.to_string()))?;
            if e == 0 {
                return Err(BraidError::MalformedToken(token.to_string()));
            }
            check_letter(e, strands)?;
            letters.push(e as i32);
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i32> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, letter: i32) -> usize {
        self.letters.iter().filter(|&&e| e == letter).count()
    }

    pub fn contains(&self, letter: i32) -> bool {
        self.letters.contains(&letter)
    }

    /// True if no letter `±index` occurs.
    pub fn avoids_index(&self, index: i32) -> bool {
        !self.letters.iter().any(|e| e.abs() == index)
    }

    pub fn check_same_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_strands(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Concatenates many words; all must share `strands`.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<BraidWord>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut out = BraidWord::identity(strands);
        for w in words {
            out.check_same_strands(w)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&e| -e).collect(),
        }
    }

    /// `self^k` under the default length guard.
    pub fn power(&self, k: i64) -> Result<BraidWord> {
        self.power_bounded(k, DEFAULT_MAX_WORD_LENGTH)
    }

    /// `self^k`, failing with `WordTooLong` if the result would exceed
    /// `max_len` letters. Negative `k` powers the inverse.
    pub fn power_bounded(&self, k: i64, max_len: usize) -> Result<BraidWord> {
        let total = self.len() as u128 * k.unsigned_abs() as u128;
        if total > max_len as u128 {
            return Err(BraidError::WordTooLong {
                length: total,
                limit: max_len,
            });
        }
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(total as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// `g · self · g^{-1}`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord> {
        g.concat(self)?.concat(&g.inverse())
    }

    /// Cancels adjacent `e, -e` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &e in &self.letters {
            if out.last() == Some(&-e) {
                out.pop();
            } else {
                out.push(e);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    /// The flip `a_i -> a_{n-i}`, i.e. conjugation by the half twist.
    pub fn bar(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|&e| e.signum() * (n - e.abs()))
                .collect(),
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.strands).collect();
        // position -> strand, updated letter by letter
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        // images currently maps final position -> starting strand
        Permutation::from_images_unchecked(images).inverse()
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Places a word on `n - 1` strands into `B_n`.
    pub fn embed(&self, mode: EmbedMode) -> BraidWord {
        let shift = match mode {
            EmbedMode::Shift => 1,
            EmbedMode::Keep => 0,
        };
        BraidWord {
            strands: self.strands + 1,
            letters: self
                .letters
                .iter()
                .map(|&e| e.signum() * (e.abs() + shift))
                .collect(),
        }
    }

    /// Positive half twist `Δ = ∏_{i=1}^{n-1} a_1 a_2 ⋯ a_{n-i}`.
    pub fn delta(n: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 1..n {
            letters.extend(1..=(n - i) as i32);
        }
        BraidWord::from_raw(n.max(1), letters)
    }

    /// Positive full twist `Δ² = (a_1 ⋯ a_{n-1})^n`.
    pub fn full_twist(n: usize) -> BraidWord {
        let small = Self::delta_small(n);
        let mut letters = Vec::with_capacity(small.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&small.letters);
        }
        BraidWord::from_raw(n.max(1), letters)
    }

    /// `δ = a_1 a_2 ⋯ a_{n-1}`.
    pub fn delta_small(n: usize) -> BraidWord {
        BraidWord::from_raw(n.max(1), (1..n as i32).collect())
    }

    /// Half twist on the first `n - 1` strands.
    pub fn delta_left(n: usize) -> Result<BraidWord> {
        if n < 3 {
            return Err(BraidError::BadStrandCount { strands: n, min: 3 });
        }
        Ok(Self::delta(n - 1).embed(EmbedMode::Keep))
    }

    /// Half twist on the last `n - 1` strands.
    pub fn delta_right(n: usize) -> Result<BraidWord> {
        if n < 3 {
            return Err(BraidError::BadStrandCount { strands: n, min: 3 });
        }
        Ok(Self::delta(n - 1).embed(EmbedMode::Shift))
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate_left(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(k % self.letters.len());
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Uniformly random word: length uniform in `0..=max_len`, letters
    /// uniform over `±1, …, ±(n-1)`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
        let len = rng.gen_range(0..=max_len);
        Self::random_of_length(rng, strands, len)
    }

    pub fn random_of_length<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
        assert!(strands >= 2 || len == 0, "B_1 has no generators");
        let top = strands as i32 - 1;
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=top);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::from_raw(strands.max(1), letters)
    }

    pub fn prefix(&self, k: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters[..k].to_vec(),
        }
    }
}

fn check_letter(e: i64, strands: usize) -> Result<()> {
    if e == 0 {
        return Err(BraidError::MalformedToken("0".into()));
    }
    if e.unsigned_abs() >= strands as u64 {
        return Err(BraidError::IndexOutOfRange {
            letter: e,
            strands,
        });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}
