//! Quasipositive factorizations and slice-Bennequin type inequalities.
//!
//! A quasipositive braid is a product of `l` conjugates `w a_i w^{-1}`. Its
//! closure bounds a surface in the 4-ball with Euler characteristic exactly
//! `χ₄ = n - l`, which makes both sides of the inequalities below
//! computable.

use std::fmt;

use num_traits::Signed;
use rand::Rng;
use serde::{Serialize, Serializer};

use crate::error::{BraidError, Result};
use crate::fdtc::floor_interval;
use crate::interval::{Rational, RationalInterval};
use crate::word::BraidWord;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasipositiveFactorization {
    strands: usize,
    factors: Vec<(BraidWord, usize)>,
}

impl QuasipositiveFactorization {
    pub fn new(strands: usize, factors: Vec<(BraidWord, usize)>) -> Result<Self> {
        for (w, i) in &factors {
            if w.strands() != strands {
                return Err(BraidError::StrandMismatch {
                    left: strands,
                    right: w.strands(),
                });
            }
            if *i == 0 || *i >= strands {
                return Err(BraidError::IndexOutOfRange {
                    letter: *i as i64,
                    strands,
                });
            }
        }
        Ok(QuasipositiveFactorization { strands, factors })
    }

    /// A positive word as a factorization with empty conjugators.
    pub fn from_positive_word(u: &BraidWord) -> Result<Self> {
        if u.letters().iter().any(|&e| e < 0) {
            return Err(BraidError::InvalidArgument("word is not positive".into()));
        }
        let id = BraidWord::identity(u.strands());
        Self::new(
            u.strands(),
            u.letters().iter().map(|&e| (id.clone(), e as usize)).collect(),
        )
    }

    /// Parses `w:k` pairs separated by `;`, e.g. `"2:1;:2"` for
    /// `(a_2 a_1 a_2^{-1})(a_2)`. The empty string is the empty product.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut factors = Vec::new();
        for entry in text.split(';') {
            if entry.trim().is_empty() {
                continue;
            }
            let (w, k) = entry
                .rsplit_once(':')
                .ok_or_else(|| BraidError::MalformedFactorization(entry.to_string()))?;
            let k: i64 = k
                .trim()
                .parse()
                .map_err(|_| BraidError::MalformedFactorization(entry.to_string()))?;
            if k < 1 || k as usize >= strands {
                return Err(BraidError::IndexOutOfRange { letter: k, strands });
            }
            factors.push((BraidWord::parse(w, strands)?, k as usize));
        }
        Self::new(strands, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[(BraidWord, usize)] {
        &self.factors
    }

    /// Number of factors `l`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factorization of `self · other`.
    pub fn then(&self, other: &QuasipositiveFactorization) -> Result<Self> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Ok(QuasipositiveFactorization {
            strands: self.strands,
            factors,
        })
    }

    /// Factorization of `self^times`.
    pub fn repeat(&self, times: usize) -> Self {
        QuasipositiveFactorization {
            strands: self.strands,
            factors: self
                .factors
                .iter()
                .cloned()
                .cycle()
                .take(self.factors.len() * times)
                .collect(),
        }
    }

    /// Random factorization with `0..=max_factors` factors and conjugators
    /// of length `0..=max_conj_len`.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        strands: usize,
        max_factors: usize,
        max_conj_len: usize,
    ) -> Self {
        let l = rng.gen_range(0..=max_factors);
        let factors = (0..l)
            .map(|_| {
                let w = BraidWord::random(rng, strands, max_conj_len);
                (w, rng.gen_range(1..strands))
            })
            .collect();
        QuasipositiveFactorization { strands, factors }
    }
}

impl fmt::Display for QuasipositiveFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, (w, i)) in self.factors.iter().enumerate() {
            if j > 0 {
                f.write_str(";")?;
            }
            write!(f, "{w}:{i}")?;
        }
        Ok(())
    }
}

/// `∏ w_j a_{i_j} w_j^{-1}`.
pub fn qp_build(f: &QuasipositiveFactorization) -> BraidWord {
    let mut letters = Vec::new();
    for (w, i) in &f.factors {
        letters.extend_from_slice(w.letters());
        letters.push(*i as i32);
        letters.extend(w.letters().iter().rev().map(|&e| -e));
    }
    BraidWord::from_raw(f.strands, letters)
}

/// Euler characteristic `n - l` of a minimal surface in the 4-ball bounded
/// by the closure.
pub fn qp_chi4(f: &QuasipositiveFactorization) -> i64 {
    f.strands as i64 - f.len() as i64
}

/// Slice genus `(1 - χ₄)/2`, defined only when the closure is a knot.
pub fn qp_slice_genus(f: &QuasipositiveFactorization) -> Option<i64> {
    if qp_build(f).closure_components() == 1 {
        Some((1 - qp_chi4(f)) / 2)
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Verified,
    Violated,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lhs {
    Exact(Rational),
    Interval(RationalInterval),
}

impl Serialize for Lhs {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Lhs::Exact(x) => s.serialize_str(&x.to_string()),
            Lhs::Interval(iv) => iv.serialize(s),
        }
    }
}

fn serialize_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: Lhs,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: Rational,
    pub status: Status,
}

impl InequalityReport {
    /// `lhs ≤ rhs`, decided exactly or from an enclosure of `lhs`.
    fn one_sided(name: &str, lhs: Lhs, rhs: Rational) -> Self {
        let status = match lhs {
            Lhs::Exact(x) if x <= rhs => Status::Verified,
            Lhs::Exact(_) => Status::Violated,
            Lhs::Interval(iv) if iv.hi() <= rhs => Status::Verified,
            Lhs::Interval(iv) if iv.lo() > rhs => Status::Violated,
            Lhs::Interval(_) => Status::Inconclusive,
        };
        InequalityReport {
            name: name.to_string(),
            lhs,
            rhs,
            status,
        }
    }
}

fn int(x: i64) -> Rational {
    Rational::from_integer(x)
}

fn require_fdtc_strands(f: &QuasipositiveFactorization) -> Result<()> {
    if f.strands < 3 {
        return Err(BraidError::BadStrandCount {
            strands: f.strands,
            min: 3,
        });
    }
    Ok(())
}

/// `|wr(β)| ≤ -χ₄ + n`; both sides equal `l` on quasipositive braids.
pub fn check_writhe_bennequin(f: &QuasipositiveFactorization) -> InequalityReport {
    let wr = qp_build(f).writhe();
    let rhs = -qp_chi4(f) + f.strands as i64;
    InequalityReport::one_sided("writhe_slice_bennequin", Lhs::Exact(int(wr).abs()), int(rhs))
}

/// `|ω(β)| ≤ -χ₄ + n`, from an enclosure of `ω` at power `k`.
pub fn check_fdtc_bennequin(
    f: &QuasipositiveFactorization,
    k: u64,
    limits: &Limits,
) -> Result<InequalityReport> {
    require_fdtc_strands(f)?;
    let omega = floor_interval(&qp_build(f), k, limits)?;
    let rhs = -qp_chi4(f) + f.strands as i64;
    Ok(InequalityReport::one_sided(
        "fdtc_slice_bennequin",
        Lhs::Interval(omega.abs()),
        int(rhs),
    ))
}

/// `ω(β) ≤ -χ₄ + n - 1` for quasipositive `β ≠ 1`.
pub fn check_qp_fdtc_bound(
    f: &QuasipositiveFactorization,
    k: u64,
    limits: &Limits,
) -> Result<InequalityReport> {
    if f.is_empty() {
        return Err(BraidError::EmptyFactorization);
    }
    require_fdtc_strands(f)?;
    let omega = floor_interval(&qp_build(f), k, limits)?;
    let rhs = -qp_chi4(f) + f.strands as i64 - 1;
    Ok(InequalityReport::one_sided(
        "fdtc_quasipositive_bound",
        Lhs::Interval(omega),
        int(rhs),
    ))
}

/// `1 - χ₄(closure of β^{nk} δ) ≤ nk (1 - χ₄(closure of β)) + nk (n - 1)`.
///
/// `β^{nk} δ` is quasipositive with `nkl + n - 1` factors, so the left side
/// is read off its factorization; both sides come out to `nkl`.
pub fn check_chi_bookkeeping(f: &QuasipositiveFactorization, k: u64) -> Result<InequalityReport> {
    if k == 0 {
        return Err(BraidError::InvalidArgument("k must be at least 1".into()));
    }
    let n = f.strands;
    let nk = (n as u64)
        .checked_mul(k)
        .and_then(|x| usize::try_from(x).ok())
        .ok_or(BraidError::Overflow("n·k"))?;
    let delta = QuasipositiveFactorization::from_positive_word(&BraidWord::delta_small(n))?;
    let big = f.repeat(nk).then(&delta)?;
    let lhs = 1 - qp_chi4(&big);
    let nk = nk as i64;
    let rhs = nk
        .checked_mul(1 - qp_chi4(f))
        .and_then(|a| nk.checked_mul(n as i64 - 1).and_then(|b| a.checked_add(b)))
        .ok_or(BraidError::Overflow("bookkeeping"))?;
    Ok(InequalityReport::one_sided(
        "euler_characteristic_bookkeeping",
        Lhs::Exact(int(lhs)),
        int(rhs),
    ))
}

/// Whether the report's left side is exactly its right side.
pub fn is_equality(r: &InequalityReport) -> bool {
    matches!(r.lhs, Lhs::Exact(x) if x == r.rhs)
}
