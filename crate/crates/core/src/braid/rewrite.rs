//! Random rewriting by the defining relations, used to build pairs of words
//! that are known to represent the same braid.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BraidWord, Generator, Letter, Sign};

/// A legal rewriting move at a letter position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Swap two commuting letters at `p, p+1`.
    Commute(usize),
    /// `σ_i σ_j σ_i → σ_j σ_i σ_j` (or the all-inverse version) at `p..p+3`, `|i - j| = 1`.
    Braid(usize),
    /// Cycle a band pair `a_{ts} a_{sr} = a_{tr} a_{ts} = a_{sr} a_{tr}` at `p, p+1`.
    Band(usize),
    /// Delete an adjacent inverse pair at `p, p+1`.
    Delete(usize),
    /// Insert `g g^{-1}` or `g^{-1} g` before letter `p` (`p == len` appends).
    Insert(usize),
}

/// Applies one uniformly chosen legal move to `w`. Deterministic in `seed`.
///
/// Insertion is legal at every position, so some move always applies; the
/// identity word can only grow by an inserted trivial pair.
pub fn apply_random_relation(w: &BraidWord, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = step(w, &mut rng);
    BraidWord::from_valid(w.index, letters)
}

/// Applies `depth` random moves in sequence, drawing from one stream seeded by `seed`.
pub fn fuzz(w: &BraidWord, depth: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = w.clone();
    for _ in 0..depth {
        cur = BraidWord::from_valid(cur.index, step(&cur, &mut rng));
    }
    cur
}

/// Every move applicable to `w`, in position order.
pub fn applicable_moves(w: &BraidWord) -> Vec<Move> {
    let l = w.letters();
    let mut moves = Vec::new();
    for p in 0..=l.len() {
        moves.push(Move::Insert(p));
        if p + 1 < l.len() {
            let (a, b) = (l[p], l[p + 1]);
            if a.is_inverse_of(b) {
                moves.push(Move::Delete(p));
            }
            if commute(a.generator, b.generator) {
                moves.push(Move::Commute(p));
            }
            if band_form(a, b).is_some() {
                moves.push(Move::Band(p));
            }
        }
        if p + 2 < l.len() && braid_triple(l[p], l[p + 1], l[p + 2]) {
            moves.push(Move::Braid(p));
        }
    }
    moves
}

fn step<R: Rng>(w: &BraidWord, rng: &mut R) -> Vec<Letter> {
    let moves = applicable_moves(w);
    let mv = moves[rng.gen_range(0..moves.len())];
    apply_move(w, mv, rng)
}

/// Applies `mv`, which must be applicable to `w`. The randomness only picks
/// the inserted letter and the target form of a band move.
fn apply_move<R: Rng>(w: &BraidWord, mv: Move, rng: &mut R) -> Vec<Letter> {
    let mut out = w.letters().to_vec();
    match mv {
        Move::Commute(p) => out.swap(p, p + 1),
        Move::Braid(p) => {
            let (a, b) = (out[p], out[p + 1]);
            out[p] = b;
            out[p + 1] = a;
            out[p + 2] = b;
        }
        Move::Band(p) => {
            let (form, t, s, r, neg) = band_form(out[p], out[p + 1]).expect("band move not applicable");
            let target = (form + rng.gen_range(1..3)) % 3;
            let (x, y) = band_pair(target, t, s, r);
            if neg {
                out[p] = y.inverse();
                out[p + 1] = x.inverse();
            } else {
                out[p] = x;
                out[p + 1] = y;
            }
        }
        Move::Delete(p) => {
            out.drain(p..p + 2);
        }
        Move::Insert(p) => {
            let i = rng.gen_range(1..=w.index().generators());
            let g = if rng.gen_bool(0.5) { Letter::sigma(i) } else { Letter::sigma_inv(i) };
            out.splice(p..p, [g, g.inverse()]);
        }
    }
    out
}

/// Commutation rule of the band presentation; for Artin letters this is `|i - j| > 1`.
fn commute(a: Generator, b: Generator) -> bool {
    let (t, s) = a.strand_pair();
    let (r, q) = b.strand_pair();
    let (t, s, r, q) = (t as i64, s as i64, r as i64, q as i64);
    (t - r) * (t - q) * (s - r) * (s - q) > 0
}

fn braid_triple(a: Letter, b: Letter, c: Letter) -> bool {
    match (a.artin(), b.artin()) {
        (Some(i), Some(j)) => a == c && a.sign == b.sign && i.abs_diff(j) == 1,
        _ => false,
    }
}

/// Recognises a same-sign letter pair with at least one band letter as one of
/// the three forms `a_{ts} a_{sr}` (0), `a_{tr} a_{ts}` (1), `a_{sr} a_{tr}` (2).
/// Inverse pairs are matched through their inverse. Returns `(form, t, s, r, negative)`.
fn band_form(a: Letter, b: Letter) -> Option<(u8, u16, u16, u16, bool)> {
    if a.sign != b.sign || (a.artin().is_some() && b.artin().is_some()) {
        return None;
    }
    let neg = a.sign == Sign::Neg;
    let (first, second) = if neg { (b, a) } else { (a, b) };
    let (p1, q1) = first.generator.strand_pair();
    let (p2, q2) = second.generator.strand_pair();
    if q1 == p2 {
        Some((0, p1, q1, q2, neg))
    } else if p1 == p2 && q2 > q1 {
        Some((1, p1, q2, q1, neg))
    } else if q1 == q2 && p2 > p1 {
        Some((2, p2, p1, q1, neg))
    } else {
        None
    }
}

fn band_pair(form: u8, t: u16, s: u16, r: u16) -> (Letter, Letter) {
    match form {
        0 => (band_letter(t, s), band_letter(s, r)),
        1 => (band_letter(t, r), band_letter(t, s)),
        _ => (band_letter(s, r), band_letter(t, r)),
    }
}

fn band_letter(t: u16, s: u16) -> Letter {
    if t == s + 1 {
        Letter::sigma(s)
    } else {
        Letter::band(t, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidIndex;

    fn w(n: u32, s: &[i32]) -> BraidWord {
        BraidWord::from_artin(BraidIndex::new(n).unwrap(), s).unwrap()
    }

    fn reachable(start: &BraidWord, target: &BraidWord) -> bool {
        (0..500).any(|seed| &apply_random_relation(start, seed) == target)
    }

    #[test]
    fn commutation_move() {
        assert!(reachable(&w(4, &[1, 3]), &w(4, &[3, 1])));
        assert!(applicable_moves(&w(4, &[1, 3])).contains(&Move::Commute(0)));
        assert!(!applicable_moves(&w(4, &[1, 2])).contains(&Move::Commute(0)));
    }

    #[test]
    fn braid_move() {
        assert!(reachable(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])));
        assert!(reachable(&w(3, &[-1, -2, -1]), &w(3, &[-2, -1, -2])));
        assert!(!applicable_moves(&w(3, &[1, -2, 1])).contains(&Move::Braid(0)));
    }

    #[test]
    fn identity_gets_insertion() {
        let id = BraidWord::identity(BraidIndex::new(3).unwrap());
        assert_eq!(applicable_moves(&id), vec![Move::Insert(0)]);
        let out = apply_random_relation(&id, 9);
        assert_eq!(out.len(), 2);
        assert!(out.letters()[0].is_inverse_of(out.letters()[1]));
        assert!(reachable(&id, &w(3, &[1, -1])));
    }

    #[test]
    fn deterministic_in_seed() {
        let x = w(5, &[1, 3, -2, 4, 4, -1, 2]);
        assert_eq!(fuzz(&x, 40, 11), fuzz(&x, 40, 11));
        assert_eq!(apply_random_relation(&x, 3), apply_random_relation(&x, 3));
    }

    #[test]
    fn band_forms_cycle() {
        let n = BraidIndex::new(4).unwrap();
        // a_{41} a_{32}: nested intervals commute
        let nested = BraidWord::new(n, vec![Letter::band(4, 1), Letter::sigma(2)]).unwrap();
        assert!(applicable_moves(&nested).contains(&Move::Commute(0)));
        // a_{31} a_{42} interleave: no commutation
        let crossing = BraidWord::new(n, vec![Letter::band(3, 1), Letter::band(4, 2)]).unwrap();
        assert!(!applicable_moves(&crossing).contains(&Move::Commute(0)));

        let f0 = BraidWord::new(n, vec![Letter::band(4, 2), Letter::band(2, 1)]).unwrap();
        let f1 = BraidWord::new(n, vec![Letter::band(4, 1), Letter::band(4, 2)]).unwrap();
        let f2 = BraidWord::new(n, vec![Letter::band(2, 1), Letter::band(4, 1)]).unwrap();
        let f2_artin = BraidWord::new(n, vec![Letter::sigma(1), Letter::band(4, 1)]).unwrap();
        assert!(reachable(&f0, &f1));
        assert!(reachable(&f1, &f2_artin));
        assert!(band_form(f2.letters()[0], f2.letters()[1]).is_some());
        let inv = f0.inverse();
        assert!(reachable(&inv, &f1.inverse()));
    }
}
