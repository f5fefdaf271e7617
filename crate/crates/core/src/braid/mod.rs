//! Braid words over the Artin and band (Birman–Ko–Lee) generators.
//!
//! A [`BraidWord`] is an immutable sequence of signed [`Letter`]s over a
//! declared [`BraidIndex`]. Every operation returns a fresh word; nothing here
//! applies the group relations except [`BraidWord::free_reduce`], which only
//! cancels adjacent inverse pairs.

mod rewrite;

use std::fmt;

use crate::error::{BraidError, Result};

pub use rewrite::{applicable_moves, apply_random_relation, fuzz, Move};

/// Number of strands `n` of the braid group `B_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidIndex(u16);

impl BraidIndex {
    /// Largest supported strand count.
    pub const MAX: u16 = u16::MAX;

    pub fn new(n: u32) -> Result<Self> {
        if (2..=Self::MAX as u32).contains(&n) {
            Ok(BraidIndex(n as u16))
        } else {
            Err(BraidError::InvalidIndex(n))
        }
    }

    #[inline]
    pub fn strands(self) -> u16 {
        self.0
    }

    /// Number of Artin generators, `n - 1`.
    #[inline]
    pub fn generators(self) -> u16 {
        self.0 - 1
    }
}

impl fmt::Display for BraidIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    #[inline]
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    #[inline]
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// An unsigned generator: `σ_i` or the band generator `a_{t,s}` with `t > s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Artin(u16),
    Band { t: u16, s: u16 },
}

impl Generator {
    /// The pair of strands `(t, s)`, `t > s`, crossed by this generator.
    /// `σ_i` crosses `(i + 1, i)`.
    #[inline]
    pub fn strand_pair(self) -> (u16, u16) {
        match self {
            Generator::Artin(i) => (i + 1, i),
            Generator::Band { t, s } => (t, s),
        }
    }

    pub fn is_valid(self, index: BraidIndex) -> bool {
        let n = index.strands();
        match self {
            Generator::Artin(i) => i >= 1 && i < n,
            Generator::Band { t, s } => s >= 1 && s < t && t <= n,
        }
    }
}

/// A generator together with its exponent sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Generator,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(generator: Generator, sign: Sign) -> Self {
        Letter { generator, sign }
    }

    pub const fn sigma(i: u16) -> Self {
        Letter::new(Generator::Artin(i), Sign::Pos)
    }

    pub const fn sigma_inv(i: u16) -> Self {
        Letter::new(Generator::Artin(i), Sign::Neg)
    }

    pub const fn band(t: u16, s: u16) -> Self {
        Letter::new(Generator::Band { t, s }, Sign::Pos)
    }

    pub const fn band_inv(t: u16, s: u16) -> Self {
        Letter::new(Generator::Band { t, s }, Sign::Neg)
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter::new(self.generator, self.sign.flip())
    }

    #[inline]
    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }

    /// Artin index if this is an Artin letter.
    #[inline]
    pub fn artin(self) -> Option<u16> {
        match self.generator {
            Generator::Artin(i) => Some(i),
            Generator::Band { .. } => None,
        }
    }
}

/// A braid word: signed letters over a fixed braid index. The empty word is
/// the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    index: BraidIndex,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word, checking every letter against `index`.
    pub fn new(index: BraidIndex, letters: Vec<Letter>) -> Result<Self> {
        if let Some(position) = letters.iter().position(|l| !l.generator.is_valid(index)) {
            return Err(BraidError::OutOfRangeLetter { position });
        }
        Ok(BraidWord { index, letters })
    }

    pub fn identity(index: BraidIndex) -> Self {
        BraidWord { index, letters: Vec::new() }
    }

    /// Artin word from signed generator indices: `2` is `σ_2`, `-1` is `σ_1^{-1}`.
    ///
    /// ```
    /// use braidlog::{BraidIndex, BraidWord, Letter};
    /// let n = BraidIndex::new(3).unwrap();
    /// let w = BraidWord::from_artin(n, &[1, -2]).unwrap();
    /// assert_eq!(w.letters(), &[Letter::sigma(1), Letter::sigma_inv(2)]);
    /// ```
    pub fn from_artin(index: BraidIndex, signed: &[i32]) -> Result<Self> {
        let mut letters = Vec::with_capacity(signed.len());
        for (position, &g) in signed.iter().enumerate() {
            let i = u16::try_from(g.unsigned_abs()).map_err(|_| BraidError::OutOfRangeLetter { position })?;
            let sign = if g < 0 { Sign::Neg } else { Sign::Pos };
            letters.push(Letter::new(Generator::Artin(i), sign));
        }
        Self::new(index, letters)
    }

    /// Internal constructor for letters already known to be in range.
    pub(crate) fn from_valid(index: BraidIndex, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.generator.is_valid(index)));
        BraidWord { index, letters }
    }

    #[inline]
    pub fn index(&self) -> BraidIndex {
        self.index
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length `M`, counted in unit letters.
    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_artin(&self) -> bool {
        self.letters.iter().all(|l| l.artin().is_some())
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub(crate) fn check_same_index(&self, other: &BraidWord) -> Result<()> {
        if self.index == other.index {
            Ok(())
        } else {
            Err(BraidError::IndexMismatch { left: self.index.0, right: other.index.0 })
        }
    }

    /// Reverses the word and flips every sign.
    pub fn inverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        BraidWord { index: self.index, letters }
    }

    /// Syntactic concatenation; no cancellation happens at the seam.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_same_index(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { index: self.index, letters })
    }

    /// `x^k`: `k` copies of `x`, or `|k|` copies of `x^{-1}` when `k < 0`.
    /// `x^0` is the identity word.
    ///
    /// Fails only if the resulting length does not fit in memory addressing.
    pub fn try_pow(&self, k: i64) -> Result<BraidWord> {
        let reps = usize::try_from(k.unsigned_abs()).map_err(|_| BraidError::Overflow("forming a power"))?;
        let total = reps.checked_mul(self.len()).ok_or(BraidError::Overflow("forming a power"))?;
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(total);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        Ok(BraidWord { index: self.index, letters })
    }

    /// Like [`try_pow`](Self::try_pow), panicking on length overflow.
    pub fn pow(&self, k: i64) -> BraidWord {
        self.try_pow(k).expect("power length overflows usize")
    }

    /// Cancels adjacent `g g^{-1}` and `g^{-1} g` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        BraidWord { index: self.index, letters: free_reduce_letters(&self.letters) }
    }

    /// Rewrites every band letter into Artin letters:
    /// `a_{t,s} = (σ_{t-1} ⋯ σ_{s+1}) σ_s (σ_{s+1}^{-1} ⋯ σ_{t-1}^{-1})`.
    pub fn to_artin(&self) -> BraidWord {
        if self.is_artin() {
            return self.clone();
        }
        let mut letters = Vec::with_capacity(self.len());
        for &l in &self.letters {
            match l.generator {
                Generator::Artin(_) => letters.push(l),
                Generator::Band { t, s } => expand_band(t, s, l.sign, &mut letters),
            }
        }
        BraidWord { index: self.index, letters }
    }

    /// `τ`: the flip automorphism `σ_i ↦ σ_{n-i}` (conjugation by `Δ`).
    /// Band letters are expanded to Artin letters first.
    pub fn flip(&self) -> BraidWord {
        let n = self.index.strands();
        let letters = self
            .to_artin()
            .letters
            .iter()
            .map(|l| match l.generator {
                Generator::Artin(i) => Letter::new(Generator::Artin(n - i), l.sign),
                Generator::Band { .. } => unreachable!("expanded above"),
            })
            .collect();
        BraidWord { index: self.index, letters }
    }
}

fn expand_band(t: u16, s: u16, sign: Sign, out: &mut Vec<Letter>) {
    for j in (s + 1..t).rev() {
        out.push(Letter::sigma(j));
    }
    out.push(Letter::new(Generator::Artin(s), sign));
    for j in s + 1..t {
        out.push(Letter::sigma_inv(j));
    }
}

pub(crate) fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top.is_inverse_of(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: u32) -> BraidIndex {
        BraidIndex::new(n).unwrap()
    }

    fn w(n: u32, s: &[i32]) -> BraidWord {
        BraidWord::from_artin(b(n), s).unwrap()
    }

    #[test]
    fn index_bounds() {
        assert_eq!(BraidIndex::new(1), Err(BraidError::InvalidIndex(1)));
        assert_eq!(BraidIndex::new(0), Err(BraidError::InvalidIndex(0)));
        assert_eq!(b(2).generators(), 1);
        assert!(BraidIndex::new(70_000).is_err());
    }

    #[test]
    fn make_word() {
        let one = BraidWord::new(b(3), vec![Letter::sigma(1)]).unwrap();
        assert_eq!(one.len(), 1);
        assert!(BraidWord::new(b(3), vec![]).unwrap().is_empty());
        assert_eq!(BraidWord::new(b(3), vec![Letter::sigma(5)]), Err(BraidError::OutOfRangeLetter { position: 0 }));
        assert_eq!(
            BraidWord::new(b(3), vec![Letter::sigma(1), Letter::sigma(0)]),
            Err(BraidError::OutOfRangeLetter { position: 1 })
        );
        assert!(BraidWord::new(b(3), vec![Letter::band(3, 1)]).is_ok());
        assert!(BraidWord::new(b(3), vec![Letter::band(4, 1)]).is_err());
        assert!(BraidWord::new(b(3), vec![Letter::band(2, 2)]).is_err());
        assert!(BraidWord::new(b(3), vec![Letter::band(1, 2)]).is_err());
    }

    #[test]
    fn invert() {
        assert_eq!(w(3, &[1, -2]).inverse(), w(3, &[2, -1]));
        assert_eq!(BraidWord::identity(b(3)).inverse(), BraidWord::identity(b(3)));
        assert_eq!(w(3, &[1; 5]).inverse(), w(3, &[-1; 5]));
    }

    #[test]
    fn concatenate() {
        assert_eq!(w(3, &[1]).concat(&w(3, &[2])).unwrap(), w(3, &[1, 2]));
        let x = w(3, &[1, -2, 2]);
        assert_eq!(x.concat(&BraidWord::identity(b(3))).unwrap(), x);
        assert_eq!(w(3, &[1]).concat(&w(3, &[-1])).unwrap().len(), 2);
        assert_eq!(w(3, &[1]).concat(&w(4, &[1])), Err(BraidError::IndexMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn powers() {
        assert_eq!(w(3, &[1, 2]).pow(3), w(3, &[1, 2, 1, 2, 1, 2]));
        assert!(w(3, &[1]).pow(0).is_empty());
        assert_eq!(w(3, &[1]).pow(-2), w(3, &[-1, -1]));
        assert_eq!(w(3, &[1, -2]).pow(-1), w(3, &[2, -1]));
    }

    #[test]
    fn free_reduction() {
        assert!(w(3, &[1, -1]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, -2, 1]).free_reduce(), w(3, &[1, 1]));
        assert_eq!(w(3, &[1, 2]).free_reduce(), w(3, &[1, 2]));
        assert!(w(3, &[1, 2, -2, -1]).free_reduce().is_empty());
    }

    #[test]
    fn band_expansion() {
        let n = b(3);
        let a21 = BraidWord::new(n, vec![Letter::band(2, 1)]).unwrap();
        assert_eq!(a21.to_artin(), w(3, &[1]));
        let a31 = BraidWord::new(n, vec![Letter::band(3, 1)]).unwrap();
        assert_eq!(a31.to_artin(), w(3, &[2, 1, -2]));
        let a32i = BraidWord::new(n, vec![Letter::band_inv(3, 2)]).unwrap();
        assert_eq!(a32i.to_artin(), w(3, &[-2]));
        let a41i = BraidWord::new(b(4), vec![Letter::band_inv(4, 1)]).unwrap();
        assert_eq!(a41i.to_artin(), w(4, &[3, 2, -1, -2, -3]));
    }

    #[test]
    fn flip_is_involution() {
        let x = w(5, &[1, -3, 4, 2]);
        assert_eq!(x.flip(), w(5, &[4, -2, 1, 3]));
        assert_eq!(x.flip().flip(), x);
        let band = BraidWord::new(b(3), vec![Letter::band(3, 1)]).unwrap();
        assert_eq!(band.flip(), w(3, &[1, 2, -1]));
    }
}
