use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::word::{Letter, Word};
use super::Rational;
use crate::error::{Error, Result};

/// An element of `K<X,Y>` with rational coefficients.
///
/// Stored coefficients are never zero, so two polynomials are equal exactly
/// when their term maps are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        NCPoly::monomial(Word::one(), c)
    }

    pub fn monomial(w: Word, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn word(w: Word) -> Self {
        NCPoly::monomial(w, Rational::one())
    }

    pub fn x() -> Self {
        NCPoly::word(Word::x())
    }

    pub fn y() -> Self {
        NCPoly::word(Word::y())
    }

    pub fn x_pow(n: usize) -> Self {
        NCPoly::word(Word::x_pow(n))
    }

    /// `sum c_i X^i` from ascending coefficients.
    pub fn from_x_coeffs(coeffs: &[Rational]) -> Self {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| NCPoly::monomial(Word::x_pow(i), c.clone()))
            .sum()
    }

    /// `T1 = YX - XY`.
    pub fn t1() -> Self {
        NCPoly::y().commutator(&NCPoly::x())
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(terms: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in lex descending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> + '_ {
        self.terms.keys().rev()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Rational> {
        self.terms
    }

    pub fn as_map(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn from_map(mut terms: BTreeMap<Word, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        NCPoly { terms }
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> NCPoly {
        let mut out = NCPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &NCPoly) -> NCPoly {
        &(self * other) - &(other * self)
    }

    /// The lex-largest word with nonzero coefficient.
    pub fn leading_monomial(&self) -> Result<&Word> {
        self.terms.keys().next_back().ok_or(Error::NoLeadingMonomial)
    }

    pub fn leading_term(&self) -> Result<(&Word, &Rational)> {
        self.terms.iter().next_back().ok_or(Error::NoLeadingMonomial)
    }

    /// Largest grade of a word present; `None` for zero.
    pub fn max_grade(&self, m: usize) -> Option<usize> {
        self.terms.keys().map(|w| w.grade(m)).max()
    }

    /// The homogeneous component of the given grade.
    pub fn grade_part(&self, grade: usize, m: usize) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.grade(m) == grade)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// The component of highest grade.
    pub fn top_grade_part(&self, m: usize) -> NCPoly {
        match self.max_grade(m) {
            Some(g) => self.grade_part(g, m),
            None => NCPoly::zero(),
        }
    }

    pub fn is_grade_homogeneous(&self, m: usize) -> bool {
        let mut grades = self.terms.keys().map(|w| w.grade(m));
        match grades.next() {
            None => true,
            Some(g) => grades.all(|h| h == g),
        }
    }

    /// True if only powers of `X` occur.
    pub fn is_in_x_only(&self) -> bool {
        self.terms.keys().all(|w| w.count(Letter::Y) == 0)
    }

    /// Degree in `X` of a polynomial in `X` only; `None` for zero.
    pub fn x_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    /// Substitutes `x_image`, `y_image` for the generators.
    pub fn substitute(&self, x_image: &NCPoly, y_image: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut prod = NCPoly::constant(c.clone());
            for l in w.letters() {
                prod = match l {
                    Letter::X => &prod * x_image,
                    Letter::Y => &prod * y_image,
                };
            }
            out += prod;
        }
        out
    }

    /// Exchanges `X` and `Y` in every word.
    pub fn swapped(&self) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.swapped(), c.clone()))
                .collect(),
        }
    }
}

pub fn leading_monomial(p: &NCPoly) -> Result<Word> {
    p.leading_monomial().cloned()
}

pub fn commutator(p: &NCPoly, q: &NCPoly) -> NCPoly {
    p.commutator(q)
}

impl From<Word> for NCPoly {
    fn from(w: Word) -> Self {
        NCPoly::word(w)
    }
}

impl From<i64> for NCPoly {
    fn from(c: i64) -> Self {
        NCPoly::constant(Rational::from_integer(c.into()))
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(mut self, rhs: NCPoly) -> NCPoly {
        self += rhs;
        self
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl AddAssign for NCPoly {
    fn add_assign(&mut self, rhs: NCPoly) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(mut self, rhs: NCPoly) -> NCPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for NCPoly {
    fn sum<I: Iterator<Item = NCPoly>>(iter: I) -> Self {
        iter.fold(NCPoly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for NCPoly {
    /// Lex-descending terms in the expression syntax the CLI parses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if w.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&w.to_expr_string())?;
            } else {
                write!(f, "{abs}*{}", w.to_expr_string())?;
            }
        }
        Ok(())
    }
}

/// One serialized term: `{"word": "YXXY", "coeff": "-3/2"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: Word,
    pub coeff: String,
}

impl Serialize for NCPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (w, c) in self.terms() {
            seq.serialize_element(&TermRecord {
                word: w.clone(),
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for NCPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut p = NCPoly::zero();
        for r in records {
            let c: Rational = r.coeff.parse().map_err(serde::de::Error::custom)?;
            p.add_term(r.word, c);
        }
        Ok(p)
    }
}
