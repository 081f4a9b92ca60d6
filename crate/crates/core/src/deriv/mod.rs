//! Derivations of `K<X,Y>`, the degree function they induce, and the
//! exponential/logarithm correspondence with unipotent automorphisms.

mod auto;

pub use auto::{apply_auto, log_auto, t1_scaling, Automorphism, ElementaryAuto};

use num_traits::One;

use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Rational, Word};

/// Iteration cap used when none is supplied.
pub const DEFAULT_CAP: usize = 64;

/// A derivation, determined by the images of the two generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub image_x: NCPoly,
    pub image_y: NCPoly,
}

impl Derivation {
    pub fn new(image_x: NCPoly, image_y: NCPoly) -> Self {
        Derivation { image_x, image_y }
    }

    pub fn zero() -> Self {
        Derivation::new(NCPoly::zero(), NCPoly::zero())
    }

    /// `X -> 0`, `Y -> f`.
    pub fn triangular(f: NCPoly) -> Self {
        Derivation::new(NCPoly::zero(), f)
    }

    pub fn is_zero(&self) -> bool {
        self.image_x.is_zero() && self.image_y.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation::new(self.image_x.scale(c), self.image_y.scale(c))
    }

    /// The same derivation with `X` and `Y` exchanged.
    pub fn swapped(&self) -> Derivation {
        Derivation::new(self.image_y.swapped(), self.image_x.swapped())
    }

    /// Image of a single word via the Leibniz rule.
    pub fn derive_word(&self, w: &Word) -> NCPoly {
        let letters = w.letters();
        let mut out = NCPoly::zero();
        for (i, l) in letters.iter().enumerate() {
            let image = match l {
                crate::ncalg::Letter::X => &self.image_x,
                crate::ncalg::Letter::Y => &self.image_y,
            };
            if image.is_zero() {
                continue;
            }
            let left = NCPoly::word(w.slice(0, i));
            let right = NCPoly::word(w.slice(i + 1, letters.len()));
            out += &(&left * image) * &right;
        }
        out
    }

    pub fn derive(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.derive_word(w), c);
        }
        out
    }

    /// Returns `f` if the derivation has the form `X -> 0`, `Y -> f(X)` with `f != 0`.
    pub fn normal_form(&self) -> Result<&NCPoly> {
        if !self.image_x.is_zero() {
            return Err(Error::NotNormalForm("image of X must be 0".into()));
        }
        if self.image_y.is_zero() {
            return Err(Error::NotNormalForm("image of Y must be nonzero".into()));
        }
        if !self.image_y.is_in_x_only() {
            return Err(Error::NotNormalForm(format!(
                "image of Y must be a polynomial in X, got {}",
                self.image_y
            )));
        }
        Ok(&self.image_y)
    }

    /// `deg f` for a derivation in normal form.
    pub fn normal_degree(&self) -> Result<usize> {
        Ok(self.normal_form()?.x_degree().unwrap_or(0))
    }
}

/// `X -> 0`, `Y -> X^m`.
pub fn weitzenbock(m: usize) -> Derivation {
    Derivation::triangular(NCPoly::x_pow(m))
}

pub fn derive(d: &Derivation, p: &NCPoly) -> NCPoly {
    d.derive(p)
}

/// `max { k : D^k(p) != 0 }`, with `None` standing for `deg(0) = -inf`.
pub fn delta_degree(d: &Derivation, p: &NCPoly, cap: usize) -> Result<Option<usize>> {
    if p.is_zero() {
        return Ok(None);
    }
    let mut cur = p.clone();
    for k in 0..=cap {
        let next = d.derive(&cur);
        if next.is_zero() {
            return Ok(Some(k));
        }
        cur = next;
    }
    Err(Error::NotNilpotent { cap })
}

/// `exp(D)(p) = sum_k D^k(p) / k!`, stopping at the first vanishing power.
pub fn exp(d: &Derivation, p: &NCPoly, cap: usize) -> Result<NCPoly> {
    let mut out = NCPoly::zero();
    let mut cur = p.clone();
    let mut factorial = Rational::one();
    for k in 0..=cap {
        if cur.is_zero() {
            return Ok(out);
        }
        if k > 0 {
            factorial *= Rational::from_integer(k.into());
        }
        out.add_scaled(&cur, &factorial.recip());
        cur = d.derive(&cur);
    }
    if cur.is_zero() {
        Ok(out)
    } else {
        Err(Error::NotUnipotent { cap })
    }
}

/// `D^n(p)`.
pub fn derive_pow(d: &Derivation, p: &NCPoly, n: usize) -> NCPoly {
    let mut cur = p.clone();
    for _ in 0..n {
        if cur.is_zero() {
            break;
        }
        cur = d.derive(&cur);
    }
    cur
}

impl Default for Derivation {
    fn default() -> Self {
        Derivation::zero()
    }
}

/// Whether `f` is a single term `c X^k`, i.e. the derivation `Y -> f` is
/// homogeneous for the grading.
pub fn is_monomial(f: &NCPoly) -> bool {
    f.len() == 1
}
