use serde::Serialize;

use super::linalg::{kernel, rank_of, Echelon};
use crate::constants::{t_sequence, GeneratorTable};
use crate::deriv::{derive_pow, is_monomial, Derivation};
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Rational, Word};

/// Largest weight the brute-force routines accept.
pub const WEIGHT_CAP: usize = 12;

pub(crate) fn check_cap(n: usize) -> Result<()> {
    if n > WEIGHT_CAP {
        return Err(Error::WeightCapExceeded { requested: n, cap: WEIGHT_CAP });
    }
    Ok(())
}

/// The monomials spanning one piece of the grading: all words of grade `weight`,
/// or of grade at most `weight` when `cumulative` (used when `f` is not
/// homogeneous and the kernel is only filtered).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedComponent {
    pub m: usize,
    pub weight: usize,
    pub cumulative: bool,
    pub monomials: Vec<Word>,
}

impl GradedComponent {
    pub fn new(m: usize, weight: usize, cumulative: bool) -> Self {
        let monomials = if cumulative {
            Word::all_up_to_grade(weight, m)
        } else {
            Word::all_of_grade(weight, m)
        };
        GradedComponent { m, weight, cumulative, monomials }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelBasis {
    pub component: GradedComponent,
    /// Reduced echelon form, leading monomials strictly decreasing, leading coefficients 1.
    pub basis: Vec<NCPoly>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn kernel_echelon(d: &Derivation, comp: &GradedComponent, power: usize) -> Echelon<Word> {
    kernel(&comp.monomials, |w| {
        derive_pow(d, &NCPoly::word(w.clone()), power).into_terms()
    })
}

fn polys_of(e: &Echelon<Word>) -> Vec<NCPoly> {
    e.polys()
}

/// Exact basis of the constants of `d` in one graded component.
pub fn graded_kernel_basis(d: &Derivation, m: usize, n: usize) -> Result<KernelBasis> {
    check_cap(n)?;
    let found = d.normal_degree()?;
    if found != m {
        return Err(Error::DegreeMismatch { expected: m, found });
    }
    let cumulative = !is_monomial(d.normal_form()?);
    let component = GradedComponent::new(m, n, cumulative);
    let basis = polys_of(&kernel_echelon(d, &component, 1));
    Ok(KernelBasis { component, basis })
}

/// Dimension of the kernel of `d^n` on a graded component.
pub fn delta_power_kernel_dimension(d: &Derivation, power: usize, m: usize, n: usize) -> Result<usize> {
    check_cap(n)?;
    d.normal_form()?;
    let comp = GradedComponent::new(m, n, false);
    Ok(kernel_echelon(d, &comp, power).rank())
}

/// All products of table entries whose weights sum to `target` (or to at most
/// `target` when `cumulative`).
pub fn generator_products(table: &GeneratorTable, target: usize, cumulative: bool) -> Vec<Vec<usize>> {
    let usable: Vec<(usize, usize)> = table
        .entries_up_to(target)
        .map(|(i, e)| (i, e.weight))
        .filter(|&(_, w)| w > 0)
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        rem: usize,
        cumulative: bool,
        usable: &[(usize, usize)],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if rem == 0 || cumulative {
            out.push(cur.clone());
        }
        for &(i, w) in usable {
            if w <= rem {
                cur.push(i);
                rec(rem - w, cumulative, usable, cur, out);
                cur.pop();
            }
        }
    }
    rec(target, cumulative, &usable, &mut cur, &mut out);
    out
}

/// Dimension of the span of products of generator values of weight `n`
/// (at most `n` when the table's `f` is not homogeneous).
pub fn span_dimension(table: &GeneratorTable, n: usize) -> Result<usize> {
    check_cap(n)?;
    if table.weight_max < n {
        return Err(Error::TableTooSmall { needed: n, have: table.weight_max });
    }
    let cumulative = !table.is_homogeneous();
    let polys: Vec<NCPoly> = generator_products(table, n, cumulative)
        .iter()
        .map(|factors| {
            factors
                .iter()
                .fold(NCPoly::one(), |acc, &k| &acc * &table.entries[k].value)
        })
        .collect();
    Ok(rank_of(&polys))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum KernelComparison {
    Equal,
    /// `poly` is a constant of exactly one of the two derivations.
    Witness { weight: usize, poly: NCPoly, in_first: bool },
}

/// Compares the constants of two normal-form derivations weight by weight.
pub fn compare_kernels(d1: &Derivation, d2: &Derivation, m: usize, n_max: usize) -> Result<KernelComparison> {
    check_cap(n_max)?;
    let cumulative = !is_monomial(d1.normal_form()?) || !is_monomial(d2.normal_form()?);
    for n in 0..=n_max {
        let comp = GradedComponent::new(m, n, cumulative);
        let k1 = kernel_echelon(d1, &comp, 1);
        let k2 = kernel_echelon(d2, &comp, 1);
        for (a, b, in_first) in [(&k1, &k2, true), (&k2, &k1, false)] {
            if let Some(p) = a.polys().into_iter().find(|p| !b.contains_poly(p)) {
                return Ok(KernelComparison::Witness { weight: n, poly: p, in_first });
            }
        }
    }
    Ok(KernelComparison::Equal)
}

/// The scalar `α` with `d2 = α d1`, for derivations with equal kernels.
pub fn recover_scalar(d1: &Derivation, d2: &Derivation, n_max: usize) -> Result<Rational> {
    let f = d1.normal_form()?;
    let g = d2.normal_form()?;
    let m = d1.normal_degree()?;
    if compare_kernels(d1, d2, m, n_max)? != KernelComparison::Equal {
        return Err(Error::KernelsDiffer);
    }
    let (lm, lc) = f.leading_term()?;
    let alpha = g.coeff(lm) / lc;
    if g != &f.scale(&alpha) {
        return Err(Error::NotProportional);
    }
    // the second element of the T-sequence for f must be a constant of d2
    if !d2.derive(&t_sequence(2, f)).is_zero() {
        return Err(Error::NotProportional);
    }
    Ok(alpha)
}
