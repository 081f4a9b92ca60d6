use num_traits::{One, Zero};

use super::{exp, Derivation};
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Rational};

/// An elementary tame automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryAuto {
    /// `X -> a1 X + a2 Y + a3`, `Y -> b1 X + b2 Y + b3` with `a1 b2 - a2 b1 != 0`.
    Affine { a: Box<[Rational; 3]>, b: Box<[Rational; 3]> },
    /// `X -> X`, `Y -> Y + p(X)`, `p` given by ascending coefficients.
    Triangular { p: Vec<Rational> },
    /// `exp(D)` for a derivation nilpotent on both generators.
    Exponential { derivation: Derivation, cap: usize },
}

impl ElementaryAuto {
    pub fn affine(a: [Rational; 3], b: [Rational; 3]) -> Result<Self> {
        let det = &a[0] * &b[1] - &a[1] * &b[0];
        if det.is_zero() {
            return Err(Error::InvalidAutomorphism("affine determinant is zero".into()));
        }
        Ok(ElementaryAuto::Affine { a: Box::new(a), b: Box::new(b) })
    }

    pub fn triangular(p: Vec<Rational>) -> Self {
        ElementaryAuto::Triangular { p }
    }

    pub fn exponential(derivation: Derivation, cap: usize) -> Result<Self> {
        exp(&derivation, &NCPoly::x(), cap)?;
        exp(&derivation, &NCPoly::y(), cap)?;
        Ok(ElementaryAuto::Exponential { derivation, cap })
    }

    /// Images of `X` and `Y`.
    pub fn images(&self) -> (NCPoly, NCPoly) {
        match self {
            ElementaryAuto::Affine { a, b } => {
                let lin = |c: &[Rational; 3]| {
                    &(&NCPoly::x().scale(&c[0]) + &NCPoly::y().scale(&c[1])) + &NCPoly::constant(c[2].clone())
                };
                (lin(a), lin(b))
            }
            ElementaryAuto::Triangular { p } => (NCPoly::x(), &NCPoly::y() + &NCPoly::from_x_coeffs(p)),
            ElementaryAuto::Exponential { derivation, cap } => (
                exp(derivation, &NCPoly::x(), *cap).expect("checked at construction"),
                exp(derivation, &NCPoly::y(), *cap).expect("checked at construction"),
            ),
        }
    }
}

/// A composition of elementary automorphisms, `factors[0] ∘ factors[1] ∘ ...`,
/// so the last factor acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    factors: Vec<ElementaryAuto>,
    image_x: NCPoly,
    image_y: NCPoly,
}

impl Automorphism {
    pub fn identity() -> Self {
        Automorphism {
            factors: Vec::new(),
            image_x: NCPoly::x(),
            image_y: NCPoly::y(),
        }
    }

    pub fn from_factors(factors: Vec<ElementaryAuto>) -> Self {
        let mut out = Automorphism::identity();
        for e in factors.into_iter().rev() {
            out = Automorphism::elementary(e).compose(&out);
        }
        out
    }

    pub fn elementary(e: ElementaryAuto) -> Self {
        let (image_x, image_y) = e.images();
        Automorphism {
            factors: vec![e],
            image_x,
            image_y,
        }
    }

    /// `exp(D)`.
    pub fn exponential(d: Derivation, cap: usize) -> Result<Self> {
        Ok(Automorphism::elementary(ElementaryAuto::exponential(d, cap)?))
    }

    pub fn factors(&self) -> &[ElementaryAuto] {
        &self.factors
    }

    pub fn image_x(&self) -> &NCPoly {
        &self.image_x
    }

    pub fn image_y(&self) -> &NCPoly {
        &self.image_y
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Automorphism {
            factors,
            image_x: self.apply(&other.image_x),
            image_y: self.apply(&other.image_y),
        }
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        p.substitute(&self.image_x, &self.image_y)
    }

    pub fn is_identity(&self) -> bool {
        self.image_x == NCPoly::x() && self.image_y == NCPoly::y()
    }
}

pub fn apply_auto(a: &Automorphism, p: &NCPoly) -> NCPoly {
    a.apply(p)
}

/// The scalar `c` with `A(T1) = c T1`.
pub fn t1_scaling(a: &Automorphism) -> Result<Rational> {
    let t1 = NCPoly::t1();
    let image = a.apply(&t1);
    let c = image.coeff(&"YX".parse().expect("valid word"));
    if c.is_zero() || image != t1.scale(&c) {
        return Err(Error::T1NotProportional);
    }
    Ok(c)
}

/// The derivation `log(1 + Θ)` with `Θ = A - 1`, evaluated on the generators.
pub fn log_auto(a: &Automorphism, cap: usize) -> Result<Derivation> {
    let theta = |p: &NCPoly| &a.apply(p) - p;
    let log_of = |g: NCPoly| -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        let mut cur = theta(&g);
        for k in 1..=cap {
            if cur.is_zero() {
                return Ok(out);
            }
            let sign = if k % 2 == 1 { Rational::one() } else { -Rational::one() };
            out.add_scaled(&cur, &(sign / Rational::from_integer(k.into())));
            cur = theta(&cur);
        }
        if cur.is_zero() {
            Ok(out)
        } else {
            Err(Error::NotUnipotent { cap })
        }
    };
    Ok(Derivation::new(log_of(NCPoly::x())?, log_of(NCPoly::y())?))
}
