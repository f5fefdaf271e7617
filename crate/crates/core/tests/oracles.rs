//! Brute-force checks behind the worked normal-form and band examples. These
//! only use the permutation projection, the relation fuzzer and handle
//! reduction, never the normal form under test, to establish the expected
//! values.

use braidlog::{
    apply_random_relation, canonical_length, equal, handle_equal, left_canonical_form, permutation_projection,
    BraidIndex, BraidWord, Letter, Permutation, PermutationBraid,
};

fn b(n: u32) -> BraidIndex {
    BraidIndex::new(n).unwrap()
}

fn w(n: u32, s: &[i32]) -> BraidWord {
    BraidWord::from_artin(b(n), s).unwrap()
}

/// Every positive Artin word of the given length in `B_n`.
fn positive_words(n: u32, len: usize) -> Vec<BraidWord> {
    let gens = (n - 1) as usize;
    let mut out = Vec::new();
    for mut code in 0..gens.pow(len as u32) {
        let mut s = Vec::with_capacity(len);
        for _ in 0..len {
            s.push((code % gens) as i32 + 1);
            code /= gens;
        }
        out.push(w(n, &s));
    }
    out
}

/// Words reachable from `start` by up to `depth` single relation moves
/// without insertions growing past `max_len`, over a range of seeds.
fn fuzz_orbit(start: &BraidWord, seeds: u64, max_len: usize) -> Vec<BraidWord> {
    let mut orbit = vec![start.clone()];
    let mut frontier = vec![start.clone()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for word in &frontier {
            for seed in 0..seeds {
                let v = apply_random_relation(word, seed);
                if v.len() <= max_len && !orbit.contains(&v) {
                    orbit.push(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    orbit
}

#[test]
fn half_twist_in_b3_by_enumeration() {
    // Δ reverses the strands; among positive 3-letter words exactly the two
    // braid-relation sides project to the reversal, and they are one braid.
    let reversal = Permutation::from_images(&[3, 2, 1]).unwrap();
    let hits: Vec<BraidWord> =
        positive_words(3, 3).into_iter().filter(|x| permutation_projection(x) == reversal).collect();
    assert_eq!(hits, vec![w(3, &[1, 2, 1]), w(3, &[2, 1, 2])]);
    assert!(fuzz_orbit(&hits[0], 64, 3).contains(&hits[1]));
    assert!(handle_equal(&hits[0], &hits[1]).unwrap());

    let f = left_canonical_form(&hits[0]);
    assert_eq!((f.inf(), f.canonical_length()), (1, 0));
    assert_eq!(canonical_length(&hits[0]), 0);
}

#[test]
fn delta_times_inverse_letter_by_lift() {
    // In the lift of S_3 to positive braids, Δσ1^{-1} is the unique positive
    // word of length 2 whose product with σ1 on the right is Δ.
    let delta = w(3, &[1, 2, 1]);
    let lifts: Vec<BraidWord> = positive_words(3, 2)
        .into_iter()
        .filter(|x| handle_equal(&x.concat(&w(3, &[1])).unwrap(), &delta).unwrap())
        .collect();
    assert_eq!(lifts, vec![w(3, &[1, 2])]);

    let f = left_canonical_form(&w(3, &[-1]));
    assert_eq!(f.inf(), -1);
    assert_eq!(f.factors().len(), 1);
    let factor_word = BraidWord::new(b(3), f.factors()[0].to_letters()).unwrap();
    assert!(handle_equal(&factor_word, &lifts[0]).unwrap());
    assert_eq!(f.factors()[0].permutation(), permutation_projection(&lifts[0]));
}

#[test]
fn sigma_squared_has_two_factors() {
    // No permutation braid equals σ1²: all six candidates differ from it.
    let target = w(3, &[1, 1]);
    for images in [[1, 2, 3], [2, 1, 3], [1, 3, 2], [3, 1, 2], [2, 3, 1], [3, 2, 1]] {
        let p = PermutationBraid::from_permutation(&Permutation::from_images(&images).unwrap());
        let word = BraidWord::new(b(3), p.to_letters()).unwrap();
        assert!(!handle_equal(&word, &target).unwrap(), "{images:?}");
    }
    let f = left_canonical_form(&target);
    assert_eq!(f.canonical_length(), 2);
    assert!(f.is_valid());
    assert_eq!(f.factors()[0].finishing_set(), vec![1]);
    assert_eq!(f.factors()[1].starting_set(), vec![1]);
}

#[test]
fn band_expansion_matches_alternative_form() {
    let a31 = BraidWord::new(b(3), vec![Letter::band(3, 1)]).unwrap();
    let expanded = a31.to_artin();
    assert_eq!(expanded, w(3, &[2, 1, -2]));
    assert_eq!(permutation_projection(&expanded), Permutation::transposition(b(3), 3, 1));
    assert_eq!(permutation_projection(&expanded), permutation_projection(&a31));
    let alternative = w(3, &[-1, 2, 1]);
    assert!(handle_equal(&expanded, &alternative).unwrap());
    assert!(equal(&expanded, &alternative).unwrap());
    assert!(equal(&a31, &alternative).unwrap());
}

#[test]
fn band_relations_hold_after_expansion() {
    // a_{ts} a_{sr} = a_{tr} a_{ts} = a_{sr} a_{tr} for all t > s > r in B_6
    let n = b(6);
    for t in 3..=6u16 {
        for s in 2..t {
            for r in 1..s {
                let f0 = BraidWord::new(n, vec![Letter::band(t, s), Letter::band(s, r)]).unwrap();
                let f1 = BraidWord::new(n, vec![Letter::band(t, r), Letter::band(t, s)]).unwrap();
                let f2 = BraidWord::new(n, vec![Letter::band(s, r), Letter::band(t, r)]).unwrap();
                assert!(handle_equal(&f0, &f1).unwrap(), "{t} {s} {r}");
                assert!(handle_equal(&f1, &f2).unwrap(), "{t} {s} {r}");
            }
        }
    }
    // commutation for disjoint and nested pairs, and failure when interleaved
    for (t, s, r, q, commute) in
        [(6u16, 1u16, 4u16, 2u16, true), (3, 1, 6, 4, true), (4, 2, 3, 1, false), (5, 2, 6, 3, false)]
    {
        let ab = BraidWord::new(n, vec![Letter::band(t, s), Letter::band(r, q)]).unwrap();
        let ba = BraidWord::new(n, vec![Letter::band(r, q), Letter::band(t, s)]).unwrap();
        assert_eq!(handle_equal(&ab, &ba).unwrap(), commute, "a_{t}{s} a_{r}{q}");
    }
}
