//! Membership in a cyclic subgroup `⟨x⟩ ⊂ B_n` and the braid logarithm.
//!
//! Since `exp` is a homomorphism to `Z`, `y = x^k` forces
//! `exp(y) = k · exp(x)`. When `exp(x) ≠ 0` that pins down the only possible
//! exponent `c = exp(y) / exp(x)`, and one word-problem comparison of `x^c`
//! against `y` settles membership. When `exp(x) = 0` nothing is pinned down
//! and the procedure refuses with [`Verdict::ZeroExponentUnsupported`].
//!
//! ```
//! use braidlog::{gwp, wordio, BraidIndex, Verdict};
//! let n = BraidIndex::new(3).unwrap();
//! let x = wordio::parse("s1 s2", n).unwrap();
//! let y = wordio::parse("s2 s1 s2 s2 s1 s2", n).unwrap();
//! assert_eq!(gwp(&x, &y).unwrap().verdict, Verdict::Power(3));
//! ```

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::Result;
use crate::exponent::exp_sum;
use crate::normalform::{left_canonical_form_with_ops, LeftCanonicalForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NotPowerReason {
    /// `exp(x)` does not divide `exp(y)`.
    ExpNotDivisible,
    /// The unique candidate `x^c` differs from `y`.
    ComparisonFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `x^c = y`.
    Power(i64),
    NotPower(NotPowerReason),
    /// `exp(x) = 0`: no candidate exponent is determined.
    ZeroExponentUnsupported,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Power(c) => write!(f, "x^{c} = y"),
            Verdict::NotPower(_) => write!(f, "y is not a power of x"),
            Verdict::ZeroExponentUnsupported => write!(f, "unsupported: exp(x) = 0"),
        }
    }
}

/// Normal forms of `x^c` and `y`, identical when the verdict is a power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub power_form: LeftCanonicalForm,
    pub target_form: LeftCanonicalForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GwpResult {
    pub verdict: Verdict,
    /// Present only for [`Verdict::Power`].
    pub certificate: Option<Certificate>,
}

/// Work counters for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepStats {
    /// Letters read while summing exponents.
    pub letters_scanned: u64,
    /// Length of the formed word `x^c`.
    pub power_length: u64,
    /// Factor-pair left-weighting operations across both normal forms.
    pub factor_ops: u64,
    /// `min(L(x^c), L(y))`, zero when no comparison ran.
    pub min_canonical_length: u64,
    pub wall_ns: u64,
}

/// Decides whether `y ∈ ⟨x⟩` and recovers the exponent.
pub fn gwp(x: &BraidWord, y: &BraidWord) -> Result<GwpResult> {
    gwp_with_stats(x, y).map(|(result, _)| result)
}

/// As [`gwp`], also returning work counters and wall time.
pub fn gwp_with_stats(x: &BraidWord, y: &BraidWord) -> Result<(GwpResult, StepStats)> {
    x.check_same_index(y)?;
    let start = Instant::now();
    let mut stats = StepStats::default();

    let ex = exp_sum(x);
    let ey = exp_sum(y);
    stats.letters_scanned = (x.len() + y.len()) as u64;

    let verdict_only = |verdict, mut stats: StepStats| {
        stats.wall_ns = elapsed_ns(start);
        Ok((GwpResult { verdict, certificate: None }, stats))
    };

    if ex.is_zero() {
        return verdict_only(Verdict::ZeroExponentUnsupported, stats);
    }
    let Some(c) = ex.exact_quotient(ey) else {
        return verdict_only(Verdict::NotPower(NotPowerReason::ExpNotDivisible), stats);
    };
    // |exp(y)| ≤ |y| and |exp(x)| ≥ 1
    debug_assert!(c.unsigned_abs() <= x.len().max(y.len()) as u64);

    let power = x.try_pow(c)?;
    stats.power_length = power.len() as u64;
    let (power_form, ops_power) = left_canonical_form_with_ops(&power);
    let (target_form, ops_target) = left_canonical_form_with_ops(y);
    stats.factor_ops = ops_power + ops_target;
    stats.min_canonical_length = power_form.canonical_length().min(target_form.canonical_length()) as u64;

    if power_form == target_form {
        stats.wall_ns = elapsed_ns(start);
        let certificate = Some(Certificate { power_form, target_form });
        Ok((GwpResult { verdict: Verdict::Power(c), certificate }, stats))
    } else {
        verdict_only(Verdict::NotPower(NotPowerReason::ComparisonFailed), stats)
    }
}

fn elapsed_ns(start: Instant) -> u64 {
    u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX)
}

/// Machine-readable form of a run, as emitted by `braid log --json` and `braid batch`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwpReport {
    /// `"power"`, `"not_power"` or `"unsupported"`.
    pub verdict: String,
    pub c: Option<i64>,
    pub reason: Option<NotPowerReason>,
    pub stats: StepStats,
}

impl GwpReport {
    pub fn new(verdict: Verdict, stats: StepStats) -> Self {
        let (tag, c, reason) = match verdict {
            Verdict::Power(c) => ("power", Some(c), None),
            Verdict::NotPower(r) => ("not_power", None, Some(r)),
            Verdict::ZeroExponentUnsupported => ("unsupported", None, None),
        };
        GwpReport { verdict: tag.to_string(), c, reason, stats }
    }

    /// The verdict encoded by this report, if it is well formed.
    pub fn verdict(&self) -> Option<Verdict> {
        match (self.verdict.as_str(), self.c, self.reason) {
            ("power", Some(c), None) => Some(Verdict::Power(c)),
            ("not_power", None, Some(r)) => Some(Verdict::NotPower(r)),
            ("unsupported", None, None) => Some(Verdict::ZeroExponentUnsupported),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{fuzz, BraidIndex};
    use crate::error::BraidError;

    fn w(n: u32, s: &[i32]) -> BraidWord {
        BraidWord::from_artin(BraidIndex::new(n).unwrap(), s).unwrap()
    }

    #[test]
    fn fuzzed_cube() {
        let x = w(3, &[1, 2]);
        let y = fuzz(&x.pow(3), 50, 2024);
        let r = gwp(&x, &y).unwrap();
        assert_eq!(r.verdict, Verdict::Power(3));
        let cert = r.certificate.unwrap();
        assert_eq!(cert.power_form, cert.target_form);
    }

    #[test]
    fn divisibility_rejects() {
        let r = gwp(&w(4, &[1, 2]), &w(4, &[1, 2, 3])).unwrap();
        assert_eq!(r.verdict, Verdict::NotPower(NotPowerReason::ExpNotDivisible));
        assert!(r.certificate.is_none());
    }

    #[test]
    fn comparison_rejects() {
        let r = gwp(&w(3, &[1]), &w(3, &[2])).unwrap();
        assert_eq!(r.verdict, Verdict::NotPower(NotPowerReason::ComparisonFailed));
    }

    #[test]
    fn zero_and_negative_powers() {
        assert_eq!(gwp(&w(3, &[1]), &w(3, &[1, -1])).unwrap().verdict, Verdict::Power(0));
        assert_eq!(gwp(&w(3, &[1]), &w(3, &[-1, -1, -1])).unwrap().verdict, Verdict::Power(-3));
        // negative exp(x)
        assert_eq!(gwp(&w(3, &[-2]), &w(3, &[2, 2])).unwrap().verdict, Verdict::Power(-2));
    }

    #[test]
    fn zero_exponent_refused() {
        for y in [&[][..], &[1], &[1, -2], &[2, 2, 2]] {
            let r = gwp(&w(3, &[1, -2]), &w(3, y)).unwrap();
            assert_eq!(r.verdict, Verdict::ZeroExponentUnsupported);
        }
    }

    #[test]
    fn index_mismatch() {
        assert_eq!(gwp(&w(3, &[1]), &w(4, &[1])), Err(BraidError::IndexMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn stats_contract() {
        let x = w(4, &[1, 2, -3]);
        let (r, s) = gwp_with_stats(&x, &x.pow(-4)).unwrap();
        assert_eq!(r.verdict, Verdict::Power(-4));
        assert_eq!(s.power_length, 12);
        assert_eq!(s.letters_scanned, 15);
        assert!(s.factor_ops > 0);

        let (_, s) = gwp_with_stats(&w(4, &[1, 2]), &w(4, &[1, 2, 3])).unwrap();
        assert_eq!((s.power_length, s.factor_ops, s.min_canonical_length), (0, 0, 0));

        let id = BraidWord::identity(BraidIndex::new(3).unwrap());
        let (r, s) = gwp_with_stats(&id, &id).unwrap();
        assert_eq!(r.verdict, Verdict::ZeroExponentUnsupported);
        assert_eq!((s.letters_scanned, s.power_length, s.factor_ops), (0, 0, 0));
    }

    #[test]
    fn report_round_trip() {
        for v in [
            Verdict::Power(-7),
            Verdict::NotPower(NotPowerReason::ComparisonFailed),
            Verdict::NotPower(NotPowerReason::ExpNotDivisible),
            Verdict::ZeroExponentUnsupported,
        ] {
            let report = GwpReport::new(v, StepStats { factor_ops: 3, ..Default::default() });
            let json = serde_json::to_string(&report).unwrap();
            let back: GwpReport = serde_json::from_str(&json).unwrap();
            assert_eq!(back, report);
            assert_eq!(back.verdict(), Some(v));
        }
    }

    #[test]
    fn verdict_messages() {
        assert_eq!(Verdict::Power(3).to_string(), "x^3 = y");
        assert_eq!(Verdict::NotPower(NotPowerReason::ExpNotDivisible).to_string(), "y is not a power of x");
        assert_eq!(Verdict::ZeroExponentUnsupported.to_string(), "unsupported: exp(x) = 0");
    }
}
