#![allow(dead_code)]

use freelnd::ncalg::{Letter, NCPoly, Rational, Word};
use proptest::prelude::*;

pub fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(any::<bool>(), 0..=max_len)
        .prop_map(|bits| Word::from_letters(bits.into_iter().map(|b| if b { Letter::Y } else { Letter::X })))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4, any::<bool>())
        .prop_map(|(n, d, neg)| Rational::new((if neg { -n } else { n }).into(), d.into()))
}

pub fn poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(max_len), rational()), 0..=max_terms).prop_map(NCPoly::from_terms)
}

pub fn nonzero_poly(max_terms: usize, max_len: usize) -> impl Strategy<Value = NCPoly> {
    poly(max_terms, max_len).prop_filter("nonzero", |p| !p.is_zero())
}
