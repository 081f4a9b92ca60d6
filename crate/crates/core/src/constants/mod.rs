//! The box operator `⊡(A) = YAF - FAY`, bracketed words, and the free
//! generators of the algebra of constants of `X -> 0`, `Y -> f(X)`.

mod boxop;
mod bracketed;
mod generators;
mod nabla;
mod rewrite;

pub use boxop::{box_op, t_sequence};
pub use bracketed::{
    decode, eval_bracketed, is_permissible, symbolic_leading_monomial, Atom, BracketedWord, Token,
};
pub use generators::{enumerate_generators, GeneratorEntry, GeneratorTable};
pub use nabla::{nabla_l, nabla_r, MarkedPoly};
pub use rewrite::{rewrite_in_generators, segment, GenPoly};
