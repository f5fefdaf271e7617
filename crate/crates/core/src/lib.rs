//! Braid logarithms: deciding whether `y` lies in the cyclic subgroup of the
//! braid group `B_n` generated by `x`, and recovering `c` with `x^c = y`.
//!
//! The decision rests on the exponent-sum homomorphism `exp: B_n → Z`. When
//! `exp(x) ≠ 0` the only candidate exponent is `exp(y) / exp(x)`, and a
//! single word-problem comparison finishes the job. The word problem is
//! solved with the Garside left canonical form ([`normalform`]); handle
//! reduction ([`oracle`]) is kept as an independent second solver.
//!
//! ```
//! use braidlog::{gwp, wordio, BraidIndex, Verdict};
//!
//! let n = BraidIndex::new(4).unwrap();
//! let x = wordio::parse("s1 s3^-1 s2^2", n).unwrap();
//! let y = x.pow(-5);
//! assert_eq!(gwp(&x, &y).unwrap().verdict, Verdict::Power(-5));
//! ```
//!
//! A longer walk-through lives in the `book/` directory at the repository
//! root; its code blocks are compiled as doc-tests of this crate.

#![forbid(unsafe_code)]

pub mod bench;
pub mod braid;
pub mod error;
pub mod exponent;
pub mod gwp;
pub mod normalform;
pub mod oracle;
pub mod wordio;

pub use braid::{apply_random_relation, fuzz, BraidIndex, BraidWord, Generator, Letter, Sign};
pub use error::BraidError;
pub use exponent::{exp_sum, ExponentSum};
pub use gwp::{gwp, gwp_with_stats, Certificate, GwpReport, GwpResult, NotPowerReason, StepStats, Verdict};
pub use normalform::{canonical_length, equal, left_canonical_form, LeftCanonicalForm, PermutationBraid};
pub use oracle::{handle_equal, handle_reduce, permutation_projection, Permutation};

// Book chapters, compiled by `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    struct Readme;
    #[doc = include_str!("../../../book/src/intro.md")]
    struct Intro;
    #[doc = include_str!("../../../book/src/words.md")]
    struct Words;
    #[doc = include_str!("../../../book/src/exponent.md")]
    struct Exponent;
    #[doc = include_str!("../../../book/src/normal-form.md")]
    struct NormalForm;
    #[doc = include_str!("../../../book/src/oracle.md")]
    struct Oracle;
    #[doc = include_str!("../../../book/src/logarithm.md")]
    struct Logarithm;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
