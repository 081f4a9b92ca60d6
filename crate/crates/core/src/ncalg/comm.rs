use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use super::poly::NCPoly;
use super::word::Letter;
use super::Rational;

/// An element of the commutative ring `K[x,y]`, keyed by `(deg_x, deg_y)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl CommPoly {
    pub fn zero() -> Self {
        CommPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: usize, dy: usize) -> Rational {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: (usize, usize), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter().rev()
    }
}

impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        let mut out = CommPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), k) in &rhs.terms {
                out.add_term((a + d, b + e), c * k);
            }
        }
        out
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(dx, dy), c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            for (sym, d) in [("x", dx), ("y", dy)] {
                match d {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{d}")),
                }
            }
            let abs = c.abs();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// The natural map `K<X,Y> -> K[x,y]`.
pub fn abelianize(p: &NCPoly) -> CommPoly {
    let mut out = CommPoly::zero();
    for (w, c) in p.terms() {
        out.add_term((w.count(Letter::X), w.count(Letter::Y)), c.clone());
    }
    out
}

/// Membership in the commutator ideal, the kernel of [`abelianize`].
pub fn is_in_commutator_ideal(p: &NCPoly) -> bool {
    abelianize(p).is_zero()
}
