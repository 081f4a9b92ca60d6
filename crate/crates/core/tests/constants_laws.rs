mod common;

use common::{nonzero_poly, poly, word};
use freelnd::constants::{
    box_op, decode, enumerate_generators, eval_bracketed, is_permissible, symbolic_leading_monomial,
    MarkedPoly,
};
use freelnd::deriv::{delta_degree, Derivation, DEFAULT_CAP};
use freelnd::ncalg::{NCPoly, Word};
use proptest::prelude::*;

fn f_in_x() -> impl Strategy<Value = NCPoly> {
    prop::sample::select(vec![
        NCPoly::one(),
        NCPoly::x(),
        NCPoly::x_pow(2),
        NCPoly::one() + NCPoly::x(),
        NCPoly::x() + NCPoly::x_pow(2),
        NCPoly::x_pow(3) - NCPoly::one(),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_commutes_with_delta(a in poly(5, 4), f in f_in_x()) {
        let d = Derivation::triangular(f.clone());
        prop_assert_eq!(box_op(&d.derive(&a), &f), d.derive(&box_op(&a, &f)));
    }

    #[test]
    fn box_preserves_delta_degree(a in nonzero_poly(4, 4), f in f_in_x()) {
        prop_assume!(f.x_degree() > Some(0));
        let d = Derivation::triangular(f.clone());
        let before = delta_degree(&d, &a, DEFAULT_CAP).unwrap();
        let after = delta_degree(&d, &box_op(&a, &f), DEFAULT_CAP).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn box_injective_for_f_equal_x(p in nonzero_poly(5, 5)) {
        prop_assert!(!box_op(&p, &NCPoly::x()).is_zero());
    }

    #[test]
    fn nabla_commutation(v2 in word(4), u2 in word(4), f in f_in_x()) {
        let one = NCPoly::one();
        let marked = MarkedPoly::new(&NCPoly::word(v2), &NCPoly::word(u2));
        let lhs = marked.boxed(&f).nabla_r(&one, &f);
        let rhs = box_op(&marked.nabla_r(&one, &f), &f)
            - &marked.nabla_l(&one, &f) * &NCPoly::y().commutator(&f);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn decode_rejects_or_inverts(w in word(10), m in 1usize..=3) {
        if let Ok(bw) = decode(&w, m) {
            prop_assert!(is_permissible(&bw, m));
            prop_assert_eq!(symbolic_leading_monomial(&bw, m).unwrap(), w);
        }
    }
}

#[test]
fn box_kills_powers_of_y_when_f_is_constant() {
    for k in 0..8 {
        assert!(box_op(&NCPoly::y().pow(k), &NCPoly::one()).is_zero());
    }
}

#[test]
fn generators_are_constants() {
    for (m, f) in [(1, NCPoly::x()), (1, NCPoly::one() + NCPoly::x()), (2, NCPoly::x() + NCPoly::x_pow(2))] {
        let d = Derivation::triangular(f.clone());
        for e in &enumerate_generators(m, &f, 9).unwrap().entries {
            assert!(d.derive(&e.value).is_zero(), "{} not constant", e.bw);
        }
    }
}

#[test]
fn symbolic_leading_monomials_round_trip() {
    for m in [1, 2] {
        let table = enumerate_generators(m, &NCPoly::x_pow(m), 10).unwrap();
        for e in table.entries.iter().filter(|e| e.bw.is_boxed()) {
            let lm = symbolic_leading_monomial(&e.bw, m).unwrap();
            let actual = eval_bracketed(&e.bw, &NCPoly::x_pow(m));
            assert_eq!(&lm, actual.leading_monomial().unwrap());
            assert_eq!(decode(&lm, m).unwrap(), e.bw);
        }
    }
}

#[test]
fn deformation_keeps_top_grade_leading_monomial() {
    let deformed = [(1, NCPoly::one() + NCPoly::x()), (2, NCPoly::x() + NCPoly::x_pow(2)), (2, NCPoly::x_pow(2) - NCPoly::one())];
    for (m, f) in deformed {
        let table = enumerate_generators(m, &NCPoly::x_pow(m), 9).unwrap();
        for e in &table.entries {
            let g = eval_bracketed(&e.bw, &f);
            assert_eq!(g.top_grade_part(m).leading_monomial().unwrap(), &e.lm, "{} with f = {f}", e.bw);
        }
    }
}

#[test]
fn decode_examples() {
    let w = |s: &str| s.parse::<Word>().unwrap();
    assert_eq!(decode(&w("YYXX"), 1).unwrap().to_string(), "{T1}");
    assert!(decode(&w("YXYX"), 1).is_err());
    assert!(decode(&w("XY"), 1).is_err());
    assert_eq!(decode(&w("YYXXX"), 2).unwrap().to_string(), "{T1}");
    assert!(decode(&w("YYXX"), 2).is_err());
}
