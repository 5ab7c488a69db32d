#![allow(dead_code)]

use knotstate::notation::{BraidWord, MontesinosVector};
use knotstate::LinkDiagram;
use num_rational::BigRational;
use proptest::prelude::*;

/// Braid words on 2..=4 strands using every generator, at most `max` crossings.
pub fn braid_word(max: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(move |n| {
            let letter = (1..n, prop_oneof![-4i64..=-1, 1i64..=4]);
            (Just(n), prop::collection::vec(letter, n - 1..=6))
        })
        .prop_map(|(n, letters)| BraidWord::new(n, letters))
        .prop_filter("every generator used, crossing cap", move |b| {
            b.crossing_count() <= max && (1..b.strands).all(|i| b.letters.iter().any(|&(g, _)| g == i))
        })
}

/// Positive braid words with every exponent at least 3.
pub fn positive_braid(max: usize) -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(move |n| {
            let letter = (1..n, 3i64..=5);
            (Just(n), prop::collection::vec(letter, n - 1..=4))
        })
        .prop_map(|(n, letters)| BraidWord::new(n, letters))
        .prop_filter("every generator, exponents >= 3, cap", move |b| {
            b.crossing_count() <= max
                && b.letters.iter().all(|&(_, e)| e >= 3)
                && (1..b.strands).all(|i| b.letters.iter().any(|&(g, _)| g == i))
        })
}

pub fn closure(b: &BraidWord) -> LinkDiagram {
    LinkDiagram::braid_closure(b).expect("braid closure")
}

/// Non-integer slope `p/q` with `|q| <= 7`.
pub fn slope() -> impl Strategy<Value = BigRational> {
    (2i64..=7, -13i64..=13)
        .prop_filter("non-integer", |(q, p)| p % q != 0)
        .prop_map(|(q, p)| BigRational::new(p.into(), q.into()))
}

/// Slope vectors with `r` slopes in (0,1) and `s` in (-1,0), shuffled.
pub fn mixed_vector(min_each: usize, max_each: usize) -> impl Strategy<Value = MontesinosVector> {
    let unit = (2i64..=5).prop_flat_map(|q| (1..q).prop_map(move |p| (p, q)));
    (min_each..=max_each, min_each..=max_each)
        .prop_flat_map(move |(r, s)| {
            (prop::collection::vec(unit.clone(), r), prop::collection::vec(unit.clone(), s), any::<u64>())
        })
        .prop_map(|(pos, neg, seed)| {
            let mut slopes: Vec<BigRational> = pos.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect();
            slopes.extend(neg.iter().map(|&(p, q)| BigRational::new((-p).into(), q.into())));
            // deterministic shuffle from the seed
            let mut state = seed | 1;
            for i in (1..slopes.len()).rev() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                slopes.swap(i, (state % (i as u64 + 1)) as usize);
            }
            MontesinosVector { slopes }
        })
}
