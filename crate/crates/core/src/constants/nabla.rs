use std::collections::BTreeMap;

use crate::ncalg::{NCPoly, Rational, Word};

/// A linear combination of words `V ⋆ U` with one distinguished occurrence `⋆`
/// of `Y`. The ∇ operations act on this decomposition rather than on the
/// underlying element.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MarkedPoly {
    terms: BTreeMap<(Word, Word), Rational>,
}

impl MarkedPoly {
    /// `V1 ⋆ U1`, extended bilinearly.
    pub fn new(v1: &NCPoly, u1: &NCPoly) -> Self {
        let mut out = MarkedPoly::default();
        for (v, a) in v1.terms() {
            for (u, b) in u1.terms() {
                out.add_term(v.clone(), u.clone(), a * b);
            }
        }
        out
    }

    fn add_term(&mut self, v: Word, u: Word, c: Rational) {
        use num_traits::Zero;
        if c.is_zero() {
            return;
        }
        let key = (v, u);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn map_sides(&self, left: &NCPoly, right: &NCPoly, scale: &Rational, out: &mut MarkedPoly) {
        for ((v, u), c) in &self.terms {
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    out.add_term(lw.concat(v), u.concat(rw), c * lc * rc * scale);
                }
            }
        }
    }

    /// `left · self · right`.
    pub fn sandwich(&self, left: &NCPoly, right: &NCPoly) -> MarkedPoly {
        let mut out = MarkedPoly::default();
        self.map_sides(left, right, &Rational::from_integer(1.into()), &mut out);
        out
    }

    /// `⊡` applied to the marked element; the mark stays on the inner `Y`.
    pub fn boxed(&self, f: &NCPoly) -> MarkedPoly {
        let mut out = MarkedPoly::default();
        self.map_sides(&NCPoly::y(), f, &Rational::from_integer(1.into()), &mut out);
        self.map_sides(f, &NCPoly::y(), &Rational::from_integer((-1).into()), &mut out);
        out
    }

    /// Replaces the mark by `Y`.
    pub fn value(&self) -> NCPoly {
        self.replace_mark(&NCPoly::y())
    }

    fn replace_mark(&self, by: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((v, u), c) in &self.terms {
            let term = &(&NCPoly::word(v.clone()) * by) * &NCPoly::word(u.clone());
            out.add_scaled(&term, c);
        }
        out
    }

    fn sum_over<G: Fn(&NCPoly, &NCPoly) -> NCPoly>(&self, g: G) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((v, u), c) in &self.terms {
            out.add_scaled(&g(&NCPoly::word(v.clone()), &NCPoly::word(u.clone())), c);
        }
        out
    }

    /// `∇_{r,U}(V1 Y U1) = V1 Y U1 U F - V1 F U1 U Y`.
    pub fn nabla_r(&self, u: &NCPoly, f: &NCPoly) -> NCPoly {
        self.sum_over(|v1, u1| nabla_r(v1, u1, u, f))
    }

    /// `∇_{l,U}(V1 Y U1) = F U V1 Y U1 - Y U V1 F U1`.
    pub fn nabla_l(&self, u: &NCPoly, f: &NCPoly) -> NCPoly {
        self.sum_over(|v1, u1| nabla_l(v1, u1, u, f))
    }
}

/// `∇_{r,U}(V1 Y U1) = V1 Y U1 U F - V1 F U1 U Y`; `U = 1` gives `∇_r`.
pub fn nabla_r(v1: &NCPoly, u1: &NCPoly, u: &NCPoly, f: &NCPoly) -> NCPoly {
    let y = NCPoly::y();
    let tail = u1 * u;
    &(&(&(v1 * &y) * &tail) * f) - &(&(&(v1 * f) * &tail) * &y)
}

/// `∇_{l,U}(V1 Y U1) = F U V1 Y U1 - Y U V1 F U1`.
pub fn nabla_l(v1: &NCPoly, u1: &NCPoly, u: &NCPoly, f: &NCPoly) -> NCPoly {
    let y = NCPoly::y();
    let head = u * v1;
    &(&(&(f * &head) * &y) * u1) - &(&(&(&y * &head) * f) * u1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::box_op;

    fn w(s: &str) -> NCPoly {
        NCPoly::word(s.parse().unwrap())
    }

    #[test]
    fn nabla_examples() {
        let (one, x) = (NCPoly::one(), NCPoly::x());
        assert_eq!(nabla_r(&one, &one, &one, &x), NCPoly::t1());
        assert_eq!(nabla_r(&x, &one, &one, &x), w("XYX") - w("XXY"));
        assert_eq!(nabla_l(&one, &one, &one, &x), -NCPoly::t1());
        assert_eq!(nabla_l(&one, &x, &one, &x), w("XYX") - w("YXX"));
    }

    #[test]
    fn marked_value_and_box() {
        let (v, u) = (w("XY"), w("YX"));
        let marked = MarkedPoly::new(&v, &u);
        assert_eq!(marked.value(), w("XYYYX"));
        let f = NCPoly::x_pow(2);
        assert_eq!(marked.boxed(&f).value(), box_op(&w("XYYYX"), &f));
        assert_eq!(marked.nabla_r(&NCPoly::one(), &f), nabla_r(&v, &u, &NCPoly::one(), &f));
    }

    #[test]
    fn commutation_identity_small() {
        // ∇_r(⊡(V2 Y U2)) = ⊡(∇_r(V2 Y U2)) - ∇_l(V2 Y U2) [Y, F]
        let f = &NCPoly::one() + &NCPoly::x();
        let marked = MarkedPoly::new(&w("XYX"), &w("Y"));
        let one = NCPoly::one();
        let lhs = marked.boxed(&f).nabla_r(&one, &f);
        let rhs = &box_op(&marked.nabla_r(&one, &f), &f) - &(&marked.nabla_l(&one, &f) * &NCPoly::y().commutator(&f));
        assert_eq!(lhs, rhs);
    }
}
