//! Exact rational intervals.

use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{BraidError, Result};

pub type Rational = Ratio<i64>;

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(BraidError::InvalidArgument(format!(
                "empty interval [{lo}, {hi}]"
            )));
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        RationalInterval { lo: x, hi: x }
    }

    pub fn lo(&self) -> Rational {
        self.lo
    }

    pub fn hi(&self) -> Rational {
        self.hi
    }

    pub fn width(&self) -> Rational {
        self.hi - self.lo
    }

    pub fn contains(&self, x: Rational) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn intersects(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn checked_add(&self, other: &RationalInterval) -> Result<Self> {
        Ok(RationalInterval {
            lo: self.lo.checked_add(&other.lo).ok_or(BraidError::Overflow("interval add"))?,
            hi: self.hi.checked_add(&other.hi).ok_or(BraidError::Overflow("interval add"))?,
        })
    }

    pub fn checked_sub(&self, other: &RationalInterval) -> Result<Self> {
        Ok(RationalInterval {
            lo: self.lo.checked_sub(&other.hi).ok_or(BraidError::Overflow("interval sub"))?,
            hi: self.hi.checked_sub(&other.lo).ok_or(BraidError::Overflow("interval sub"))?,
        })
    }

    /// Multiplies both endpoints by a scalar, swapping them if it is negative.
    pub fn checked_scale(&self, c: Rational) -> Result<Self> {
        let a = self.lo.checked_mul(&c).ok_or(BraidError::Overflow("interval scale"))?;
        let b = self.hi.checked_mul(&c).ok_or(BraidError::Overflow("interval scale"))?;
        Ok(RationalInterval {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn shift(&self, c: Rational) -> Result<Self> {
        self.checked_add(&RationalInterval::point(c))
    }

    /// Enclosure of `{|x| : x in self}`.
    pub fn abs(&self) -> Self {
        if self.lo >= Rational::zero() {
            *self
        } else if self.hi <= Rational::zero() {
            RationalInterval {
                lo: -self.hi,
                hi: -self.lo,
            }
        } else {
            RationalInterval {
                lo: Rational::zero(),
                hi: self.lo.abs().max(self.hi),
            }
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("RationalInterval", 2)?;
        st.serialize_field("lo", &self.lo.to_string())?;
        st.serialize_field("hi", &self.hi.to_string())?;
        st.end()
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| BraidError::InvalidArgument(format!("not a rational: {text:?}")))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(a: (i64, i64), b: (i64, i64)) -> RationalInterval {
        RationalInterval::new(ratio(a.0, a.1), ratio(b.0, b.1)).unwrap()
    }

    #[test]
    fn rejects_empty() {
        assert!(RationalInterval::new(ratio(1, 2), ratio(1, 3)).is_err());
    }

    #[test]
    fn arithmetic_is_outward() {
        let a = iv((0, 1), (1, 2));
        let b = iv((1, 3), (1, 1));
        assert_eq!(a.checked_add(&b).unwrap(), iv((1, 3), (3, 2)));
        assert_eq!(a.checked_sub(&b).unwrap(), iv((-1, 1), (1, 6)));
        assert_eq!(a.checked_scale(ratio(-2, 1)).unwrap(), iv((-1, 1), (0, 1)));
        assert_eq!(a.checked_sub(&b).unwrap().width(), a.width() + b.width());
    }

    #[test]
    fn abs_cases() {
        assert_eq!(iv((-3, 1), (-1, 1)).abs(), iv((1, 1), (3, 1)));
        assert_eq!(iv((-3, 1), (2, 1)).abs(), iv((0, 1), (3, 1)));
        assert_eq!(iv((1, 2), (2, 1)).abs(), iv((1, 2), (2, 1)));
    }

    #[test]
    fn overflow_is_reported() {
        let big = RationalInterval::point(Rational::from_integer(i64::MAX));
        assert_eq!(big.checked_add(&big), Err(BraidError::Overflow("interval add")));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(iv((1, 1), (11, 10)).to_string(), "[1, 11/10]");
        assert_eq!(parse_rational("1/16").unwrap(), ratio(1, 16));
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn intersections() {
        assert!(iv((0, 1), (1, 2)).intersects(&iv((1, 2), (1, 1))));
        assert!(!iv((0, 1), (1, 3)).intersects(&iv((1, 2), (1, 1))));
    }
}
