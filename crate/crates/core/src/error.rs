use thiserror::Error;

use crate::ncalg::Word;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no leading monomial: the polynomial is zero")]
    NoLeadingMonomial,
    #[error("not nilpotent on input within cap {cap}")]
    NotNilpotent { cap: usize },
    #[error("not locally nilpotent on input: series did not terminate within cap {cap}")]
    NotUnipotent { cap: usize },
    #[error("derivation not in normal form: {0}")]
    NotNormalForm(String),
    #[error("degree mismatch: expected deg f = {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("internal consistency error: image of T1 is not a multiple of T1")]
    T1NotProportional,
    #[error("bracketed word is not permissible for m = {m}: {word}")]
    NotPermissible { word: String, m: usize },
    #[error("not a generator leading monomial: {word} ({reason})")]
    NotGeneratorLeadingMonomial { word: Word, reason: String },
    #[error("not a constant: the derivation does not vanish on the input")]
    NotConstant,
    #[error("leading monomial {monomial} does not factor into generator leading monomials")]
    NotSegmentable { monomial: Word },
    #[error("generator table covers weight {have}, but weight {needed} is required")]
    TableTooSmall { needed: usize, have: usize },
    #[error("kernels differ")]
    KernelsDiffer,
    #[error("kernels equal but derivations not proportional")]
    NotProportional,
    #[error("R_F^n check restricted to F = X^m")]
    NonHomogeneous,
    #[error("weight {requested} exceeds the hard cap {cap}")]
    WeightCapExceeded { requested: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
