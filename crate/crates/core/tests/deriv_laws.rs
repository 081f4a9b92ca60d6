mod common;

use common::{nonzero_rational, poly};
use freelnd::deriv::{
    delta_degree, exp, log_auto, t1_scaling, weitzenbock, Automorphism, Derivation, ElementaryAuto,
    DEFAULT_CAP,
};
use freelnd::ncalg::{NCPoly, Rational};
use proptest::prelude::*;

fn lnd() -> impl Strategy<Value = Derivation> {
    (0usize..=3, prop::collection::vec(common::rational(), 1..=4))
        .prop_map(|(m, coeffs)| {
            let f = NCPoly::from_x_coeffs(&coeffs);
            if f.is_zero() { weitzenbock(m) } else { Derivation::triangular(f) }
        })
}

fn elementary() -> impl Strategy<Value = ElementaryAuto> {
    prop_oneof![
        (prop::array::uniform3(common::rational()), prop::array::uniform3(common::rational()))
            .prop_filter_map("singular", |(a, b)| ElementaryAuto::affine(a, b).ok()),
        prop::collection::vec(common::rational(), 0..=3).prop_map(ElementaryAuto::triangular),
        lnd().prop_map(|d| ElementaryAuto::exponential(d, DEFAULT_CAP).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn leibniz(dx in poly(3, 3), dy in poly(3, 3), p in poly(5, 4), q in poly(5, 4)) {
        let d = Derivation::new(dx, dy);
        prop_assert_eq!(d.derive(&(&p * &q)), &(&d.derive(&p) * &q) + &(&p * &d.derive(&q)));
    }

    #[test]
    fn degree_function(m in 0usize..=3, p in poly(5, 4), q in poly(5, 4)) {
        let d = weitzenbock(m);
        let deg = |r: &NCPoly| delta_degree(&d, r, DEFAULT_CAP).unwrap();
        let (dp, dq) = (deg(&p), deg(&q));
        prop_assert_eq!(deg(&(&p * &q)), dp.zip(dq).map(|(a, b)| a + b));
        let s = deg(&(&p + &q));
        prop_assert!(s <= dp.max(dq));
        if dp != dq {
            prop_assert_eq!(s, dp.max(dq));
        }
        let image = d.derive(&p);
        if !image.is_zero() {
            prop_assert_eq!(deg(&image), dp.map(|k| k - 1));
        }
    }

    #[test]
    fn exp_is_multiplicative(d in lnd(), p in poly(4, 3), q in poly(4, 3)) {
        let e = |r: &NCPoly| exp(&d, r, DEFAULT_CAP).unwrap();
        prop_assert_eq!(e(&(&p * &q)), &e(&p) * &e(&q));
    }

    #[test]
    fn exp_is_a_one_parameter_group(d in lnd(), lambda in common::rational(), mu in common::rational()) {
        let a = |c: &Rational| Automorphism::exponential(d.scale(c), DEFAULT_CAP).unwrap();
        let composed = a(&lambda).compose(&a(&mu));
        let direct = a(&(&lambda + &mu));
        prop_assert_eq!(composed.image_x(), direct.image_x());
        prop_assert_eq!(composed.image_y(), direct.image_y());
    }

    #[test]
    fn t1_scaling_is_multiplicative(e1 in elementary(), e2 in elementary()) {
        let (a, b) = (Automorphism::elementary(e1), Automorphism::elementary(e2));
        let c = t1_scaling(&a.compose(&b)).unwrap();
        prop_assert_eq!(c, t1_scaling(&a).unwrap() * t1_scaling(&b).unwrap());
    }

    #[test]
    fn exp_fixes_t1(d in lnd(), c in nonzero_rational()) {
        let a = Automorphism::exponential(d.scale(&c), DEFAULT_CAP).unwrap();
        prop_assert_eq!(t1_scaling(&a).unwrap(), Rational::from_integer(1.into()));
    }
}

#[test]
fn commutator_is_killed_by_the_weitzenbock_family() {
    for m in 0..=6 {
        assert!(weitzenbock(m).derive(&NCPoly::t1()).is_zero(), "m = {m}");
    }
}

#[test]
fn log_inverts_exp_on_the_weitzenbock_family() {
    for m in 0..=4 {
        let a = Automorphism::exponential(weitzenbock(m), DEFAULT_CAP).unwrap();
        assert_eq!(log_auto(&a, DEFAULT_CAP).unwrap(), weitzenbock(m));
    }
}
