//! The exponent-sum homomorphism `exp: B_n → Z`.
//!
//! Each defining relation has the same number of letters of each sign on both
//! sides, so the sum of letter signs is an invariant of the braid, not just of
//! the word. Band letters count like Artin letters: every `a_{t,s}` has
//! exponent sum one.

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

/// A signed exponent sum. Arithmetic is checked: overflow is an error, never a wrap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentSum(pub i64);

impl ExponentSum {
    pub const ZERO: ExponentSum = ExponentSum(0);

    #[inline]
    pub fn value(self) -> i64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn checked_add(self, rhs: ExponentSum) -> Result<ExponentSum> {
        self.0.checked_add(rhs.0).map(ExponentSum).ok_or(BraidError::Overflow("adding exponent sums"))
    }

    pub fn checked_scale(self, k: i64) -> Result<ExponentSum> {
        self.0.checked_mul(k).map(ExponentSum).ok_or(BraidError::Overflow("scaling an exponent sum"))
    }

    /// The integer `q` with `rhs = q · self`, if one exists. Signs are free;
    /// `self` must be nonzero.
    ///
    /// ```
    /// use braidlog::ExponentSum;
    /// assert_eq!(ExponentSum(-2).exact_quotient(ExponentSum(6)), Some(-3));
    /// assert_eq!(ExponentSum(2).exact_quotient(ExponentSum(3)), None);
    /// assert_eq!(ExponentSum(0).exact_quotient(ExponentSum(3)), None);
    /// ```
    pub fn exact_quotient(self, rhs: ExponentSum) -> Option<i64> {
        if self.0 == 0 {
            return None;
        }
        // checked_rem guards i64::MIN / -1
        match rhs.0.checked_rem(self.0)? {
            0 => rhs.0.checked_div(self.0),
            _ => None,
        }
    }
}

impl Neg for ExponentSum {
    type Output = ExponentSum;

    fn neg(self) -> ExponentSum {
        ExponentSum(self.0.checked_neg().expect("exponent sum negation overflow"))
    }
}

impl fmt::Display for ExponentSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sum of letter signs, in one left-to-right pass.
///
/// ```
/// use braidlog::{exp_sum, wordio, BraidIndex};
/// let w = wordio::parse("s1 s3^-3 s2^2 s1", BraidIndex::new(4).unwrap()).unwrap();
/// assert_eq!(exp_sum(&w).value(), 1);
/// ```
pub fn exp_sum(w: &BraidWord) -> ExponentSum {
    // a word holds at most isize::MAX letters, so the i64 sum cannot overflow
    ExponentSum(w.letters().iter().map(|l| l.sign.value()).sum())
}
