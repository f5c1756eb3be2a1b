//! Permutations of strand positions.
//!
//! `images[p]` is the final position of the strand that starts at position
//! `p` (0-based). A braid word acts on positions letter by letter from left
//! to right, so the permutation of `u·v` is `perm(u).then(&perm(v))`.

use serde::{Deserialize, Serialize};

use crate::error::{BraidError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition of positions `i-1` and `i`, i.e. the image of the
    /// Artin generator `a_i`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(BraidError::InvalidArgument(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based images (the serialized form).
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(BraidError::InvalidArgument(
                "1-based permutation contains 0".into(),
            ));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn strands(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn image(&self, p: usize) -> usize {
        self.images[p]
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.strands(), other.strands());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            inv[q] = p;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p];
            }
        }
        cycles
    }

    /// Number of pairs `p < q` with `images[p] > images[q]`.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for p in 0..n {
            for q in p + 1..n {
                if self.images[p] > self.images[q] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = BraidError;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::from_one_based(&v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.one_based()
    }
}
