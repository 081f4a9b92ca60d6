use std::collections::HashMap;
use std::fmt;

use num_traits::One;

use super::generators::GeneratorTable;
use crate::deriv::Derivation;
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Rational, Word};

/// A formal polynomial in the generators of a table: each term is a
/// coefficient times a product of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenPoly {
    pub terms: Vec<(Vec<usize>, Rational)>,
}

impl GenPoly {
    pub fn evaluate(&self, table: &GeneratorTable) -> NCPoly {
        let mut out = NCPoly::zero();
        for (factors, c) in &self.terms {
            out.add_scaled(&product(table, factors), c);
        }
        out
    }

    pub fn display<'a>(&'a self, table: &'a GeneratorTable) -> GenPolyDisplay<'a> {
        GenPolyDisplay { poly: self, table }
    }
}

pub struct GenPolyDisplay<'a> {
    poly: &'a GenPoly,
    table: &'a GeneratorTable,
}

impl fmt::Display for GenPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.poly.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (factors, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let symbols: Vec<String> = factors.iter().map(|&k| self.table.entries[k].bw.to_string()).collect();
            let body = if symbols.is_empty() { "1".to_string() } else { symbols.join(" ⊗ ") };
            if c.abs().is_one() {
                f.write_str(&body)?;
            } else {
                write!(f, "{}*{}", c.abs(), body)?;
            }
        }
        Ok(())
    }
}

fn product(table: &GeneratorTable, factors: &[usize]) -> NCPoly {
    factors
        .iter()
        .fold(NCPoly::one(), |acc, &k| &acc * &table.entries[k].value)
}

/// Splits `w` into a product of generator leading monomials, if possible.
/// The factorization is unique when the leading monomials form a code.
pub fn segment(w: &Word, table: &GeneratorTable) -> Option<Vec<usize>> {
    let by_lm: HashMap<&Word, usize> = table.entries.iter().enumerate().map(|(i, e)| (&e.lm, i)).collect();
    let max_len = table.entries.iter().map(|e| e.lm.len()).max().unwrap_or(0);
    let n = w.len();
    // reachable[i]: suffix starting at i factors completely
    let mut next: Vec<Option<(usize, usize)>> = vec![None; n + 1];
    let mut ok = vec![false; n + 1];
    ok[n] = true;
    for i in (0..n).rev() {
        for j in (i + 1..=n.min(i + max_len)).rev() {
            if !ok[j] {
                continue;
            }
            if let Some(&k) = by_lm.get(&w.slice(i, j)) {
                ok[i] = true;
                next[i] = Some((k, j));
                break;
            }
        }
    }
    if !ok[0] {
        return None;
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (k, j) = next[i].expect("reachable");
        out.push(k);
        i = j;
    }
    Some(out)
}

/// Expresses a constant as a polynomial in the table's generators by repeatedly
/// cancelling the leading monomial of the top-grade part.
pub fn rewrite_in_generators(p: &NCPoly, table: &GeneratorTable) -> Result<GenPoly> {
    let d = Derivation::triangular(table.f.clone());
    if !d.derive(p).is_zero() {
        return Err(Error::NotConstant);
    }
    if let Some(g) = p.max_grade(table.m) {
        if g > table.weight_max {
            return Err(Error::TableTooSmall { needed: g, have: table.weight_max });
        }
    }
    let mut out = GenPoly::default();
    let mut rest = p.clone();
    while !rest.is_zero() {
        let top = rest.top_grade_part(table.m);
        let (lm, coeff) = top.leading_term()?;
        let factors = segment(lm, table).ok_or_else(|| Error::NotSegmentable { monomial: lm.clone() })?;
        let prod = product(table, &factors);
        let lead = prod.top_grade_part(table.m).coeff(lm);
        let c = coeff / &lead;
        rest.add_scaled(&prod, &-&c);
        out.terms.push((factors, c));
    }
    Ok(out)
}
