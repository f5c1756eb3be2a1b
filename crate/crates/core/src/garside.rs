//! Left-greedy Garside normal form.
//!
//! Every braid is written uniquely as `Δ^inf · s_1 ⋯ s_r` where each `s_j` is
//! a simple element (a positive braid in which any two strands cross at most
//! once) strictly between the identity and `Δ`, and every adjacent pair is
//! left-weighted. Simple elements are stored as their permutations.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::perm::Permutation;
use crate::word::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub factors: Vec<Permutation>,
}

type Simple = Vec<usize>;

fn is_delta(s: &[usize]) -> bool {
    let n = s.len();
    s.iter().enumerate().all(|(p, &q)| q == n - 1 - p)
}

fn is_identity(s: &[usize]) -> bool {
    s.iter().enumerate().all(|(p, &q)| p == q)
}

/// `Δ^{-1} s Δ`, which on permutations is `p -> n-1-s(n-1-p)`.
fn flip(s: &[usize]) -> Simple {
    let n = s.len();
    (0..n).map(|p| n - 1 - s[n - 1 - p]).collect()
}

fn inverse_images(s: &[usize]) -> Simple {
    let mut inv = vec![0; s.len()];
    for (p, &q) in s.iter().enumerate() {
        inv[q] = p;
    }
    inv
}

/// Generators `a_i` (as 0-based `i - 1`) with `s = a_i · s'`, `s'` simple.
fn starts_with(s: &[usize], i: usize) -> bool {
    s[i] > s[i + 1]
}

/// Makes `(a, b)` left-weighted by moving letters from the front of `b` to
/// the back of `a`. Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.len();
    let mut changed = false;
    let mut a_inv = inverse_images(a);
    loop {
        let mut moved = false;
        for i in 0..n - 1 {
            // i in S(b) but not in F(a)
            if starts_with(b, i) && a_inv[i] < a_inv[i + 1] {
                // a <- a · a_i : swap final positions i, i+1
                a_inv.swap(i, i + 1);
                a[a_inv[i]] = i;
                a[a_inv[i + 1]] = i + 1;
                // b <- a_i^{-1} · b : swap starting positions i, i+1
                b.swap(i, i + 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
        changed = true;
    }
    changed
}

/// Starting set of a simple element, as 1-based generator indices.
pub fn starting_set(s: &Permutation) -> Vec<usize> {
    let im = s.images();
    (0..im.len().saturating_sub(1))
        .filter(|&i| starts_with(im, i))
        .map(|i| i + 1)
        .collect()
}

/// Finishing set of a simple element, as 1-based generator indices.
pub fn finishing_set(s: &Permutation) -> Vec<usize> {
    starting_set(&s.inverse())
}

/// A positive word for a simple element.
pub fn simple_to_word(s: &Permutation) -> BraidWord {
    let n = s.strands();
    let mut cur: Simple = s.images().to_vec();
    let mut letters = Vec::new();
    'outer: loop {
        for i in 0..n.saturating_sub(1) {
            if starts_with(&cur, i) {
                letters.push(i as i32 + 1);
                cur.swap(i, i + 1);
                continue 'outer;
            }
        }
        break;
    }
    BraidWord::from_raw(n, letters)
}

struct Builder {
    strands: usize,
    infimum: i64,
    factors: Vec<Simple>,
}

impl Builder {
    /// Right-multiplies the current left-weighted sequence by a simple element
    /// and restores left-weightedness with one right-to-left pass.
    fn push(&mut self, s: Simple) {
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|s| is_delta(s)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
        while self.factors.last().is_some_and(|s| is_identity(s)) {
            self.factors.pop();
        }
    }

    fn finish(self) -> GarsideNormalForm {
        let nf = GarsideNormalForm {
            strands: self.strands,
            infimum: self.infimum,
            factors: self
                .factors
                .into_iter()
                .map(Permutation::from_images_unchecked)
                .collect(),
        };
        debug_assert!(nf.is_valid(), "normal form invariants violated: {nf:?}");
        nf
    }
}

pub fn to_normal_form(u: &BraidWord) -> GarsideNormalForm {
    let n = u.strands();
    let letters = u.letters();
    let negatives = letters.iter().filter(|&&e| e < 0).count();
    let mut b = Builder {
        strands: n,
        infimum: -(negatives as i64),
        factors: Vec::new(),
    };
    if n < 2 {
        return b.finish();
    }
    // a_i^{-1} = Δ^{-1} (Δ a_i^{-1}); every Δ^{-1} is pulled to the front,
    // flipping each simple it passes.
    let mut negatives_after = negatives;
    for &e in letters {
        let i = e.unsigned_abs() as usize - 1;
        let mut s: Simple = if e > 0 {
            let mut id: Simple = (0..n).collect();
            id.swap(i, i + 1);
            id
        } else {
            negatives_after -= 1;
            // apply Δ, then swap positions i, i+1
            (0..n)
                .map(|p| {
                    let q = n - 1 - p;
                    if q == i {
                        i + 1
                    } else if q == i + 1 {
                        i
                    } else {
                        q
                    }
                })
                .collect()
        };
        if negatives_after % 2 == 1 {
            s = flip(&s);
        }
        b.push(s);
    }
    b.finish()
}

impl GarsideNormalForm {
    pub fn identity(strands: usize) -> Self {
        GarsideNormalForm {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn is_trivial(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// `Δ^k · self`.
    pub fn delta_shift(&self, k: i64) -> Self {
        GarsideNormalForm {
            strands: self.strands,
            infimum: self.infimum + k,
            factors: self.factors.clone(),
        }
    }

    /// Checks the defining invariants: no identity or `Δ` factor, and all
    /// adjacent pairs left-weighted.
    pub fn is_valid(&self) -> bool {
        if self
            .factors
            .iter()
            .any(|s| s.strands() != self.strands || is_delta(s.images()) || s.is_identity())
        {
            return false;
        }
        self.factors.windows(2).all(|w| {
            let fin = finishing_set(&w[0]);
            starting_set(&w[1]).iter().all(|i| fin.contains(i))
        })
    }

    /// The word `Δ^inf · s_1 ⋯ s_r`.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = BraidWord::delta(n);
        let base = if self.infimum < 0 {
            delta.inverse()
        } else {
            delta
        };
        let mut letters = Vec::new();
        for _ in 0..self.infimum.unsigned_abs() {
            letters.extend_from_slice(base.letters());
        }
        for s in &self.factors {
            letters.extend_from_slice(simple_to_word(s).letters());
        }
        BraidWord::from_raw(n, letters)
    }
}

pub fn are_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.check_same_strands(v)?;
    Ok(to_normal_form(u) == to_normal_form(v))
}

pub fn is_trivial(u: &BraidWord) -> bool {
    to_normal_form(u).is_trivial()
}

pub fn infimum(u: &BraidWord) -> i64 {
    to_normal_form(u).infimum
}

pub fn supremum(u: &BraidWord) -> i64 {
    to_normal_form(u).supremum()
}

pub fn canonical_length(u: &BraidWord) -> usize {
    to_normal_form(u).canonical_length()
}
