use crate::ncalg::NCPoly;

/// `⊡(A) = Y A F - F A Y`.
pub fn box_op(a: &NCPoly, f: &NCPoly) -> NCPoly {
    let y = NCPoly::y();
    &(&(&y * a) * f) - &(&(f * a) * &y)
}

/// `T_1 = YX - XY`, `T_{i+1} = ⊡(T_i)`. `i` is 1-based.
pub fn t_sequence(i: usize, f: &NCPoly) -> NCPoly {
    assert!(i >= 1, "the T-sequence starts at T_1");
    let mut t = NCPoly::t1();
    for _ in 1..i {
        t = box_op(&t, f);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deriv::{Derivation, DEFAULT_CAP, delta_degree};
    use crate::ncalg::{leading_monomial, Word};

    fn w(s: &str) -> NCPoly {
        NCPoly::word(s.parse().unwrap())
    }

    #[test]
    fn box_examples() {
        let t1 = NCPoly::t1();
        assert_eq!(box_op(&t1, &NCPoly::one()), &(&NCPoly::y() * &t1) - &(&t1 * &NCPoly::y()));
        let expected = w("YYXX") - w("YXYX") - w("XYXY") + w("XXYY");
        assert_eq!(box_op(&t1, &NCPoly::x()), expected);
        assert!(box_op(&NCPoly::y(), &NCPoly::one()).is_zero());
    }

    #[test]
    fn t_sequence_examples() {
        let f = &NCPoly::x().pow(2) + &NCPoly::from(7);
        let t1 = NCPoly::t1();
        assert_eq!(t_sequence(1, &f), t1);
        let y = NCPoly::y();
        assert_eq!(t_sequence(2, &f), &(&(&y * &t1) * &f) - &(&(&f * &t1) * &y));
        for i in 1..=5 {
            let lm = leading_monomial(&t_sequence(i, &NCPoly::one())).unwrap();
            assert_eq!(lm, Word::y_pow(i).concat(&Word::x()));
        }
    }

    #[test]
    fn box_kernel_for_constant_f() {
        for k in 0..6 {
            assert!(box_op(&NCPoly::y().pow(k), &NCPoly::one()).is_zero());
        }
    }

    #[test]
    fn box_preserves_degree() {
        let d = Derivation::triangular(NCPoly::x());
        let a = w("YYX") + w("XY");
        let before = delta_degree(&d, &a, DEFAULT_CAP).unwrap();
        let after = delta_degree(&d, &box_op(&a, &NCPoly::x()), DEFAULT_CAP).unwrap();
        assert_eq!(before, after);
    }
}
