//! Garside left canonical form and the word problem.
//!
//! Every braid has a unique factorisation `Δ^inf · A_1 ⋯ A_L` where each
//! `A_k` is a permutation braid other than `1` and `Δ`, and every adjacent
//! pair is left-weighted. Two words are equal in `B_n` exactly when their
//! forms coincide.
//!
//! The form is built incrementally. Each letter becomes one permutation
//! braid: `σ_i` itself, or `Δσ_i^{-1}` for `σ_i^{-1} = Δ^{-1}(Δσ_i^{-1})`.
//! The `Δ^{-1}` are collected on the left through `AΔ^{-1} = Δ^{-1}τ(A)`, so
//! a factor is flipped once per inverse letter to its right. Appending a
//! factor makes pairs left-weighted from the right end backwards, stopping as
//! soon as a left factor is left unchanged.

use std::fmt;

use crate::braid::{BraidIndex, BraidWord, Letter, Sign};
use crate::error::Result;
use crate::oracle::Permutation;

/// A positive braid in which every pair of strands crosses at most once,
/// stored as its permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationBraid {
    /// start position -> end position, zero-based
    img: Box<[u16]>,
    /// end position -> start position
    inv: Box<[u16]>,
}

impl PermutationBraid {
    pub fn identity(index: BraidIndex) -> Self {
        let id: Box<[u16]> = (0..index.strands()).collect();
        PermutationBraid { inv: id.clone(), img: id }
    }

    /// The half twist `Δ`, reversing all strands.
    pub fn delta(index: BraidIndex) -> Self {
        let n = index.strands();
        let rev: Box<[u16]> = (0..n).rev().collect();
        PermutationBraid { inv: rev.clone(), img: rev }
    }

    /// `σ_i` for one-based `i`.
    pub fn sigma(index: BraidIndex, i: u16) -> Self {
        let mut p = Self::identity(index);
        p.right_mul(i as usize - 1);
        p
    }

    /// `Δσ_i^{-1}` for one-based `i`.
    pub fn delta_sigma_inv(index: BraidIndex, i: u16) -> Self {
        let mut p = Self::delta(index);
        p.right_div(i as usize - 1);
        p
    }

    /// Permutation braid with the given one-based images (see
    /// [`Permutation`] for the convention).
    pub fn from_permutation(p: &Permutation) -> Self {
        let img: Box<[u16]> = p.images().iter().map(|v| v - 1).collect();
        let mut inv = vec![0; img.len()].into_boxed_slice();
        for (a, &v) in img.iter().enumerate() {
            inv[v as usize] = a as u16;
        }
        PermutationBraid { img, inv }
    }

    pub fn permutation(&self) -> Permutation {
        let images: Vec<u16> = self.img.iter().map(|v| v + 1).collect();
        Permutation::from_images(&images).expect("permutation braid holds a bijection")
    }

    #[inline]
    fn strands(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(a, &v)| a == v as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.strands();
        self.img.iter().enumerate().all(|(a, &v)| v as usize == n - 1 - a)
    }

    /// Number of crossings, i.e. inversions of the permutation.
    pub fn crossings(&self) -> usize {
        let mut count = 0;
        for a in 0..self.strands() {
            for b in a + 1..self.strands() {
                if self.img[a] > self.img[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Zero-based `g` is in the starting set iff the strands starting at
    /// `g, g+1` cross, i.e. `σ_{g+1}` is a prefix.
    #[inline]
    fn starts_with(&self, g: usize) -> bool {
        self.img[g] > self.img[g + 1]
    }

    /// Zero-based `g` is in the finishing set iff the strands ending at
    /// `g, g+1` cross, i.e. `σ_{g+1}` is a suffix.
    #[inline]
    fn ends_with(&self, g: usize) -> bool {
        self.inv[g] > self.inv[g + 1]
    }

    /// One-based generators `i` with `σ_i` a prefix.
    pub fn starting_set(&self) -> Vec<u16> {
        (0..self.strands() - 1).filter(|&g| self.starts_with(g)).map(|g| g as u16 + 1).collect()
    }

    /// One-based generators `i` with `σ_i` a suffix.
    pub fn finishing_set(&self) -> Vec<u16> {
        (0..self.strands() - 1).filter(|&g| self.ends_with(g)).map(|g| g as u16 + 1).collect()
    }

    /// `self ← self · σ_{g+1}`; the caller guarantees `g` is not in the finishing set.
    #[inline]
    fn right_mul(&mut self, g: usize) {
        let (a, b) = (self.inv[g], self.inv[g + 1]);
        self.img[a as usize] = g as u16 + 1;
        self.img[b as usize] = g as u16;
        self.inv.swap(g, g + 1);
    }

    /// `self ← self · σ_{g+1}^{-1}`; the caller guarantees `g` is in the finishing set.
    #[inline]
    fn right_div(&mut self, g: usize) {
        self.right_mul(g);
    }

    /// `self ← σ_{g+1}^{-1} · self`; the caller guarantees `g` is in the starting set.
    #[inline]
    fn left_div(&mut self, g: usize) {
        self.img.swap(g, g + 1);
        self.inv[self.img[g] as usize] = g as u16;
        self.inv[self.img[g + 1] as usize] = g as u16 + 1;
    }

    /// `τ`, conjugation by `Δ`.
    pub fn flip(&self) -> Self {
        let n = self.strands() as u16 - 1;
        let img = (0..=n).map(|a| n - self.img[(n - a) as usize]).collect();
        let inv = (0..=n).map(|a| n - self.inv[(n - a) as usize]).collect();
        PermutationBraid { img, inv }
    }

    /// A positive Artin word for this factor, peeling the lowest starting
    /// generator each time. For `Δ` this gives the lexicographically least word.
    pub fn to_letters(&self) -> Vec<Letter> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while let Some(g) = (0..rest.strands() - 1).find(|&g| rest.starts_with(g)) {
            out.push(Letter::sigma(g as u16 + 1));
            rest.left_div(g);
        }
        out
    }
}

/// One-based images, e.g. `[3 1 2]` for `σ1 σ2` in `B_3`.
impl fmt::Display for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.img.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// Makes `(left, right)` left-weighted by moving every starting generator of
/// `right` that is not a finishing generator of `left` across. Returns
/// whether anything moved.
fn left_weight(left: &mut PermutationBraid, right: &mut PermutationBraid) -> bool {
    let mut moved = false;
    let last = left.strands() - 1;
    let mut g = 0;
    while g < last {
        if right.starts_with(g) && !left.ends_with(g) {
            left.right_mul(g);
            right.left_div(g);
            moved = true;
            // only neighbours of g can have changed status
            g = g.saturating_sub(1);
        } else {
            g += 1;
        }
    }
    moved
}

/// `Δ^inf · A_1 ⋯ A_L`, the unique left-weighted factorisation of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeftCanonicalForm {
    index: BraidIndex,
    inf: i64,
    factors: Vec<PermutationBraid>,
}

impl LeftCanonicalForm {
    pub fn index(&self) -> BraidIndex {
        self.index
    }

    /// Power of `Δ`.
    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// Canonical length `L`, the number of non-`Δ` factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// Checks the structural invariants: no trivial or `Δ` factor and every
    /// adjacent pair left-weighted.
    pub fn is_valid(&self) -> bool {
        let proper = self.factors.iter().all(|f| !f.is_identity() && !f.is_delta());
        let weighted = self
            .factors
            .windows(2)
            .all(|pair| (0..pair[1].strands() - 1).all(|g| !pair[1].starts_with(g) || pair[0].ends_with(g)));
        proper && weighted
    }

    /// An Artin word for the braid: the lexicographic word for `Δ` repeated
    /// `|inf|` times (inverted when `inf < 0`), then each factor.
    pub fn to_word(&self) -> BraidWord {
        let delta = PermutationBraid::delta(self.index).to_letters();
        let mut letters = Vec::new();
        for _ in 0..self.inf.unsigned_abs() {
            if self.inf > 0 {
                letters.extend_from_slice(&delta);
            } else {
                letters.extend(delta.iter().rev().map(|l| l.inverse()));
            }
        }
        for f in &self.factors {
            letters.extend(f.to_letters());
        }
        BraidWord::from_valid(self.index, letters)
    }
}

/// `D^<inf> · [images] · …`; a pure `Δ` power prints as `D^<inf>` alone.
impl fmt::Display for LeftCanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for factor in &self.factors {
            write!(f, " · {factor}")?;
        }
        Ok(())
    }
}

struct Builder {
    index: BraidIndex,
    factors: Vec<PermutationBraid>,
    ops: u64,
}

impl Builder {
    fn push(&mut self, factor: PermutationBraid) {
        self.factors.push(factor);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (head, tail) = self.factors.split_at_mut(j);
            self.ops += 1;
            if !left_weight(&mut head[j - 1], &mut tail[0]) {
                break;
            }
            j -= 1;
        }
        if self.factors.last().is_some_and(PermutationBraid::is_identity) {
            self.factors.pop();
        }
    }

    fn finish(mut self, inf: i64) -> (LeftCanonicalForm, u64) {
        let deltas = self.factors.iter().take_while(|f| f.is_delta()).count();
        self.factors.drain(..deltas);
        let lcf = LeftCanonicalForm { index: self.index, inf: inf + deltas as i64, factors: self.factors };
        debug_assert!(lcf.is_valid(), "normal form lost left-weightedness: {lcf}");
        (lcf, self.ops)
    }
}

/// Left canonical form of `w`. Band letters are expanded to Artin letters first.
///
/// ```
/// use braidlog::{left_canonical_form, wordio, BraidIndex};
/// let n = BraidIndex::new(3).unwrap();
/// let delta = left_canonical_form(&wordio::parse("s1 s2 s1", n).unwrap());
/// assert_eq!((delta.inf(), delta.canonical_length()), (1, 0));
/// ```
pub fn left_canonical_form(w: &BraidWord) -> LeftCanonicalForm {
    left_canonical_form_with_ops(w).0
}

/// As [`left_canonical_form`], also returning the number of factor-pair
/// left-weighting operations performed.
pub fn left_canonical_form_with_ops(w: &BraidWord) -> (LeftCanonicalForm, u64) {
    let artin = w.to_artin();
    let index = w.index();
    let negatives = artin.letters().iter().filter(|l| l.sign == Sign::Neg).count();
    let mut builder = Builder { index, factors: Vec::with_capacity(artin.len()), ops: 0 };
    let mut seen = 0;
    for l in artin.letters() {
        let i = l.artin().expect("expanded to Artin letters");
        let factor = match l.sign {
            Sign::Pos => PermutationBraid::sigma(index, i),
            Sign::Neg => {
                seen += 1;
                PermutationBraid::delta_sigma_inv(index, i)
            }
        };
        let factor = if (negatives - seen) % 2 == 1 { factor.flip() } else { factor };
        builder.push(factor);
    }
    builder.finish(-(negatives as i64))
}

/// Decides `u = v` in `B_n` by comparing left canonical forms.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.check_same_index(v)?;
    Ok(left_canonical_form(u) == left_canonical_form(v))
}

/// Canonical length of the braid represented by `w`.
pub fn canonical_length(w: &BraidWord) -> usize {
    left_canonical_form(w).canonical_length()
}
