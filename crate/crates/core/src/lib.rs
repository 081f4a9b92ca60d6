//! Locally nilpotent derivations of the free associative algebra `K<X,Y>`
//! over the rationals, the algebras of constants they define, and brute-force
//! linear-algebra checks of the structure of those algebras.
//!
//! * [`ncalg`]: words, noncommutative polynomials, abelianization.
//! * [`deriv`]: derivations, degree function, `exp`/`log`, tame automorphisms.
//! * [`constants`]: the box operator, bracketed words and free generators of the constants.
//! * [`oracle`]: exact kernels, spans and freeness checks by enumeration.
//! * [`verify`]: end-to-end checks shared by the acceptance tests and the CLI.

pub mod constants;
pub mod deriv;
pub mod error;
pub mod ncalg;
pub mod oracle;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
