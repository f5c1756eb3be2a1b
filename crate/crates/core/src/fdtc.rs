//! Certified enclosures of the fractional Dehn twist coefficient.
//!
//! The coefficient is the homogenization `ω(β) = lim ⌊β^k⌋ / k` of the
//! Dehornoy floor. For every `k ≥ 1`, `⌊β^k⌋ ≤ k·ω(β) ≤ ⌊β^k⌋ + 1`, which
//! gives an exact rational interval of width `1/k`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use num_traits::Zero;

use crate::dehornoy::dehornoy_floor;
use crate::error::{BraidError, Result};
use crate::interval::{Rational, RationalInterval};
use crate::word::BraidWord;
use crate::Limits;

fn check_k(k: u64) -> Result<i64> {
    if k == 0 {
        return Err(BraidError::InvalidArgument("k must be at least 1".into()));
    }
    i64::try_from(k).map_err(|_| BraidError::Overflow("power exponent"))
}

/// `⌊u^k⌋`.
pub fn power_floor(u: &BraidWord, k: u64, limits: &Limits) -> Result<i64> {
    let k = check_k(k)?;
    let w = u.power_bounded(k, limits.max_word_length)?;
    dehornoy_floor(&w, limits)
}

/// The interval with endpoints `floor / k` and `(floor + 1) / k`.
pub fn interval_from_floor(floor: i64, k: u64) -> Result<RationalInterval> {
    let k = check_k(k)?;
    let top = floor.checked_add(1).ok_or(BraidError::Overflow("floor + 1"))?;
    RationalInterval::new(Rational::new(floor, k), Rational::new(top, k))
}

/// `[⌊u^k⌋/k, (⌊u^k⌋+1)/k]`, which contains `ω(u)`.
pub fn floor_interval(u: &BraidWord, k: u64, limits: &Limits) -> Result<RationalInterval> {
    interval_from_floor(power_floor(u, k, limits)?, k)
}

/// Smallest `k` with `1/k ≤ tolerance`.
pub fn power_for_tolerance(tolerance: Rational) -> Result<u64> {
    if tolerance <= Rational::zero() {
        return Err(BraidError::InvalidArgument(
            "tolerance must be positive".into(),
        ));
    }
    let k = tolerance.recip().ceil().to_integer();
    u64::try_from(k.max(1)).map_err(|_| BraidError::Overflow("tolerance"))
}

/// Enclosure of `ω(u)` of width at most `tolerance`.
pub fn fdtc_estimate(u: &BraidWord, tolerance: Rational, limits: &Limits) -> Result<RationalInterval> {
    floor_interval(u, power_for_tolerance(tolerance)?, limits)
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvergenceRow {
    pub k: u64,
    pub floor: i64,
    pub interval: RationalInterval,
}

/// Rows for `k = 1..=k_max`, computed in parallel and returned in order.
pub fn convergence_table(u: &BraidWord, k_max: u64, limits: &Limits) -> Result<Vec<ConvergenceRow>> {
    check_k(k_max)?;
    (1..=k_max)
        .into_par_iter()
        .map(|k| {
            let floor = power_floor(u, k, limits)?;
            Ok(ConvergenceRow {
                k,
                floor,
                interval: interval_from_floor(floor, k)?,
            })
        })
        .collect()
}

/// Homogenization table `(k, f(u^k)/k)` for `k = 1..=k_max`.
pub fn homogenize<F>(f: F, u: &BraidWord, k_max: u64, limits: &Limits) -> Result<Vec<(u64, Rational)>>
where
    F: Fn(&BraidWord) -> Result<i64>,
{
    check_k(k_max)?;
    let mut rows = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let w = u.power_bounded(k as i64, limits.max_word_length)?;
        rows.push((k, Rational::new(f(&w)?, k as i64)));
    }
    Ok(rows)
}

/// Enclosure of `ω(αβ) - ω(α) - ω(β)` of width `3/k`.
pub fn defect_witness(
    alpha: &BraidWord,
    beta: &BraidWord,
    k: u64,
    limits: &Limits,
) -> Result<RationalInterval> {
    let product = alpha.concat(beta)?;
    let ab = floor_interval(&product, k, limits)?;
    let a = floor_interval(alpha, k, limits)?;
    let b = floor_interval(beta, k, limits)?;
    ab.checked_sub(&a)?.checked_sub(&b)
}

/// The pair `α = a_2 ⋯ a_{n-1} a_{n-1} ⋯ a_2`, `β = a_1 a_1`, whose product
/// is conjugate to `Δ² Δ_R^{-2}`; the defect gap of `ω` on it is exactly 1.
pub fn lemma_witness(n: usize) -> Result<(BraidWord, BraidWord)> {
    if n < 3 {
        return Err(BraidError::BadStrandCount { strands: n, min: 3 });
    }
    let top = n as i32 - 1;
    let mut alpha: Vec<i32> = (2..=top).collect();
    alpha.extend((2..=top).rev());
    Ok((
        BraidWord::new(n, alpha)?,
        BraidWord::new(n, vec![1, 1])?,
    ))
}

/// The braid `a_1 a_2 ⋯ a_{n-1} a_{n-1} ⋯ a_2 a_1`, a conjugate of the
/// lemma pair's product.
pub fn lemma_product_cyclic(n: usize) -> Result<BraidWord> {
    let (alpha, _) = lemma_witness(n)?;
    let mut letters = vec![1];
    letters.extend_from_slice(alpha.letters());
    letters.push(1);
    BraidWord::new(n, letters)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefectWitness {
    pub alpha: String,
    pub beta: String,
    pub gap: RationalInterval,
    pub source: WitnessSource,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    Lemma,
    Random { sample: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefectSearch {
    pub best: DefectWitness,
    pub lemma: Option<DefectWitness>,
    pub evaluated: usize,
}

/// Samples `sample_count` random pairs (lengths up to `max_len`) and keeps
/// the one whose gap enclosure has the largest lower bound. The lemma pair
/// is always a candidate when `n ≥ 3`; ties go to the earlier candidate.
pub fn defect_search(
    n: usize,
    sample_count: usize,
    max_len: usize,
    k: u64,
    seed: u64,
    limits: &Limits,
) -> Result<DefectSearch> {
    if n < 2 {
        return Err(BraidError::BadStrandCount { strands: n, min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<(BraidWord, BraidWord, WitnessSource)> = Vec::with_capacity(sample_count + 1);
    if n >= 3 {
        let (a, b) = lemma_witness(n)?;
        candidates.push((a, b, WitnessSource::Lemma));
    }
    for sample in 0..sample_count {
        let a = BraidWord::random(&mut rng, n, max_len);
        let b = BraidWord::random(&mut rng, n, max_len);
        candidates.push((a, b, WitnessSource::Random { sample }));
    }
    let witnesses: Vec<DefectWitness> = candidates
        .par_iter()
        .map(|(a, b, source)| {
            Ok(DefectWitness {
                alpha: a.to_string(),
                beta: b.to_string(),
                gap: defect_witness(a, b, k, limits)?,
                source: *source,
            })
        })
        .collect::<Result<_>>()?;
    let lemma = witnesses
        .iter()
        .find(|w| w.source == WitnessSource::Lemma)
        .cloned();
    let best = witnesses
        .iter()
        .fold(None::<&DefectWitness>, |best, w| match best {
            Some(b) if b.gap.lo() >= w.gap.lo() => Some(b),
            _ => Some(w),
        })
        .cloned()
        .ok_or_else(|| BraidError::InvalidArgument("no candidates to evaluate".into()))?;
    Ok(DefectSearch {
        best,
        lemma,
        evaluated: witnesses.len(),
    })
}
