mod common;

use std::cmp::Ordering;

use common::{nonzero_rational, poly, word};
use freelnd::ncalg::{abelianize, lex_compare, weight, NCPoly, Word};
use proptest::prelude::*;

fn homogeneous(m: usize) -> impl Strategy<Value = NCPoly> {
    (1usize..=6, prop::collection::vec((any::<prop::sample::Index>(), nonzero_rational()), 1..=6)).prop_map(
        move |(n, picks)| {
            let words = Word::all_of_grade(n, m);
            let mut p = NCPoly::zero();
            for (idx, c) in picks {
                p.add_term(idx.get(&words).clone(), c);
            }
            p
        },
    )
    .prop_filter("nonzero", |p| !p.is_zero())
}

fn homogeneous_pair() -> impl Strategy<Value = (NCPoly, NCPoly)> {
    (1usize..=3).prop_flat_map(|m| (homogeneous(m), homogeneous(m)))
}

#[test]
fn leading_monomial_not_multiplicative_across_lengths() {
    let w = |s: &str| NCPoly::word(s.parse().unwrap());
    let p = w("XXY") + w("XX");
    let q = w("YY");
    assert_eq!(p.leading_monomial().unwrap().to_string(), "XXY");
    assert_eq!((&p * &q).leading_monomial().unwrap().to_string(), "XXYYY");
}

proptest! {
    #[test]
    fn associativity(p in poly(6, 6), q in poly(6, 6), r in poly(6, 6)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn distributivity(p in poly(6, 6), q in poly(6, 6), r in poly(6, 6)) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&q + &r) * &p, &(&q * &p) + &(&r * &p));
    }

    #[test]
    fn unit_and_inverse(p in poly(6, 6)) {
        prop_assert_eq!(&NCPoly::one() * &p, p.clone());
        prop_assert_eq!(&p * &NCPoly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn lex_is_total_and_decided_by_first_difference(u in word(6), v in word(6)) {
        let c = lex_compare(&u, &v);
        prop_assert_eq!(c.reverse(), lex_compare(&v, &u));
        prop_assert_eq!(c == Ordering::Equal, u == v);
        if u.len() == v.len() && u != v {
            let i = (0..u.len()).find(|&i| u.letters()[i] != v.letters()[i]).unwrap();
            prop_assert_eq!(c, u.letters()[i].cmp(&v.letters()[i]));
        }
    }

    // The order is only multiplicative on weight-homogeneous elements: with the
    // prefix-smaller rule XX < XXY but XX*YY > XXY*YY.
    #[test]
    fn leading_monomial_is_multiplicative((p, q) in homogeneous_pair()) {
        let lm = (&p * &q).leading_monomial().unwrap().clone();
        prop_assert_eq!(lm, p.leading_monomial().unwrap().concat(q.leading_monomial().unwrap()));
    }

    #[test]
    fn abelianization_is_a_homomorphism(p in poly(5, 5), q in poly(5, 5)) {
        prop_assert_eq!(abelianize(&(&p * &q)), &abelianize(&p) * &abelianize(&q));
    }

    #[test]
    fn weight_is_additive(u in word(8), v in word(8), m in 0usize..5) {
        prop_assert_eq!(weight(&u.concat(&v), m), weight(&u, m) + weight(&v, m));
    }

    #[test]
    fn json_round_trip(p in poly(6, 6)) {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<NCPoly>(&s).unwrap(), p);
    }
}
