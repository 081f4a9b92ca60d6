//! Exact arithmetic in `K<X,Y>` and its abelianization `K[x,y]`, with `K = Q`.

mod comm;
mod poly;
mod word;

pub use comm::{abelianize, is_in_commutator_ideal, CommPoly};
pub use poly::{commutator, leading_monomial, NCPoly, TermRecord};
pub use word::{lex_compare, weight, Letter, Word};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Convenience constructor for `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
