//! Seeded random inputs for the property checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::deriv::Derivation;
use crate::ncalg::{Letter, NCPoly, Rational, Word};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational with small numerator and denominator.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    let mut n: i64 = rng.gen_range(-9..=9);
    if n == 0 {
        n = 1;
    }
    Rational::new(n.into(), rng.gen_range(1i64..=5).into())
}

pub fn word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| if rng.gen_bool(0.5) { Letter::Y } else { Letter::X }))
}

/// Up to `max_terms` terms over words of length `<= max_len`; may be zero only
/// if all terms cancel, which cannot happen since words are merged first.
pub fn poly<R: Rng>(rng: &mut R, max_terms: usize, max_len: usize) -> NCPoly {
    let n = rng.gen_range(1..=max_terms);
    NCPoly::from_terms((0..n).map(|_| (word(rng, max_len), rational(rng))))
}

/// A nonzero polynomial in `X` of degree at most `max_deg`.
pub fn x_poly<R: Rng>(rng: &mut R, max_deg: usize) -> NCPoly {
    loop {
        let mut p = NCPoly::zero();
        for k in 0..=max_deg {
            if rng.gen_bool(0.6) {
                p.add_term(Word::x_pow(k), rational(rng));
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// A locally nilpotent derivation `X -> a`, `Y -> g(X)` with `a` a constant
/// (possibly zero).
pub fn lnd<R: Rng>(rng: &mut R, max_deg: usize) -> Derivation {
    let a = if rng.gen_bool(0.5) { NCPoly::zero() } else { NCPoly::constant(rational(rng)) };
    Derivation::new(a, x_poly(rng, max_deg))
}
