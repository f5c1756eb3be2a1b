//! Braid group computations: exact word problem via the left-greedy Garside
//! normal form, the Dehornoy order by handle reduction, certified rational
//! enclosures of the fractional Dehn twist coefficient, the full-twist
//! decomposition of sigma_1-positive braids, and slice-Bennequin checks on
//! quasipositive factorizations.

pub mod bennequin;
pub mod decompose;
pub mod dehornoy;
pub mod error;
pub mod fdtc;
pub mod garside;
pub mod interval;
pub mod perm;
pub mod word;

pub use bennequin::{InequalityReport, Lhs, QuasipositiveFactorization, Status};
pub use decompose::Decomposition;
pub use dehornoy::OrderSign;
pub use error::{BraidError, Result};
pub use garside::GarsideNormalForm;
pub use interval::{Rational, RationalInterval};
pub use perm::Permutation;
pub use word::BraidWord;

/// Default cap on materialized word length (2^20 letters).
pub const DEFAULT_MAX_WORD_LENGTH: usize = 1 << 20;

/// Default cap on handle-reduction steps per call.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// Resource guards threaded through the expensive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_word_length: usize,
    pub step_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_word_length: DEFAULT_MAX_WORD_LENGTH,
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}
