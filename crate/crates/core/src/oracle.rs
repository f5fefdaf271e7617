//! Independent correctness oracles.
//!
//! Two checks that share no code with the Garside normal form:
//!
//! * [`permutation_projection`], the quotient `B_n → S_n`. Equal braids have
//!   equal projections; the converse fails.
//! * [`handle_reduce`], Dehornoy's handle reduction, a complete solution of
//!   the word problem: a word reduces to the empty word iff it is trivial.

use std::fmt;

use crate::braid::{free_reduce_letters, BraidIndex, BraidWord, Letter, Sign};
use crate::error::{BraidError, Result};

/// Default cap on handle-reduction steps per call.
pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// A permutation of `{1..n}` in image form.
///
/// Words act on strand positions and compose left to right: `image(a)` is the
/// final position of the strand that starts at position `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // zero-based
    image: Vec<u16>,
}

impl Permutation {
    pub fn identity(index: BraidIndex) -> Self {
        Permutation { image: (0..index.strands()).collect() }
    }

    /// From one-based images; `None` unless this is a bijection of `{1..n}`.
    pub fn from_images(images: &[u16]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            let v = (v as usize).checked_sub(1)?;
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return None;
            }
        }
        Some(Permutation { image: images.iter().map(|v| v - 1).collect() })
    }

    pub fn transposition(index: BraidIndex, a: u16, b: u16) -> Self {
        let mut p = Self::identity(index);
        p.image.swap(a as usize - 1, b as usize - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// One-based image of the one-based point `a`.
    pub fn image(&self, a: u16) -> u16 {
        self.image[a as usize - 1] + 1
    }

    /// One-based images of `1..=n`.
    pub fn images(&self) -> Vec<u16> {
        self.image.iter().map(|v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Permutation { image: self.image.iter().map(|&v| other.image[v as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        Permutation { image: inv }
    }

    /// Swaps the positions `a` and `b` (zero-based) after `self`.
    fn swap_positions(&mut self, a: u16, b: u16) {
        for v in &mut self.image {
            if *v == a {
                *v = b;
            } else if *v == b {
                *v = a;
            }
        }
    }
}

/// Cycle notation, e.g. `(1 3 2)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.image.len()];
        let mut any = false;
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut cur = start;
            let mut first = true;
            while !seen[cur] {
                seen[cur] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", cur + 1)?;
                first = false;
                cur = self.image[cur] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Image of `w` in the symmetric group: `σ_i^{±1} ↦ (i i+1)`, `a_{t,s}^{±1} ↦ (t s)`.
pub fn permutation_projection(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.index());
    for l in w.letters() {
        let (t, s) = l.generator.strand_pair();
        p.swap_positions(t - 1, s - 1);
    }
    p
}

/// Handle reduction with the default step cap.
pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    handle_reduce_with_limit(w, DEFAULT_STEP_LIMIT)
}

/// Reduces the handle that closes first until none is left.
///
/// A `σ_i`-handle is `σ_i^e u σ_i^{-e}` where `u` contains neither `σ_i^{±1}`
/// nor `σ_{i-1}^{±1}`. It is replaced by `u` with every `σ_{i+1}^d` rewritten
/// as `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. The handle that closes first never
/// contains a `σ_{i+1}`-handle, which is the condition under which every
/// reduction sequence terminates. Band letters are expanded first.
pub fn handle_reduce_with_limit(w: &BraidWord, step_limit: usize) -> Result<BraidWord> {
    let artin = w.to_artin();
    let n = w.index();
    let mut letters = free_reduce_letters(artin.letters());
    let mut steps = 0;
    while let Some(h) = first_handle(&letters, n) {
        if steps == step_limit {
            return Err(BraidError::NonTermination { step_limit });
        }
        steps += 1;
        let mut next = Vec::with_capacity(letters.len() + 2 * (h.end - h.start));
        next.extend_from_slice(&letters[..h.start]);
        let up = h.generator + 1;
        for &l in &letters[h.start + 1..h.end] {
            if l.artin() == Some(up) {
                next.push(Letter::new(l.generator, h.sign.flip()));
                next.push(Letter::new(crate::braid::Generator::Artin(h.generator), l.sign));
                next.push(Letter::new(l.generator, h.sign));
            } else {
                next.push(l);
            }
        }
        next.extend_from_slice(&letters[h.end + 1..]);
        letters = free_reduce_letters(&next);
    }
    Ok(BraidWord::from_valid(n, letters))
}

/// True iff `handle_reduce(u · v^{-1})` is empty.
pub fn handle_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    let quotient = u.concat(&v.inverse())?;
    Ok(handle_reduce(&quotient)?.is_empty())
}

/// True iff `w` (in Artin letters) contains no handle.
pub fn is_handle_free(w: &BraidWord) -> bool {
    let artin = w.to_artin();
    first_handle(artin.letters(), w.index()).is_none()
}

struct Handle {
    start: usize,
    end: usize,
    generator: u16,
    sign: Sign,
}

fn first_handle(letters: &[Letter], n: BraidIndex) -> Option<Handle> {
    let mut last: Vec<Option<usize>> = vec![None; n.strands() as usize];
    for (j, l) in letters.iter().enumerate() {
        let i = l.artin().expect("handle reduction runs on Artin letters");
        if let Some(p) = last[i as usize] {
            let opener = letters[p];
            let clear_below = i == 1 || last[i as usize - 1].is_none_or(|q| q < p);
            if opener.sign != l.sign && clear_below {
                return Some(Handle { start: p, end: j, generator: i, sign: opener.sign });
            }
        }
        last[i as usize] = Some(j);
    }
    None
}
