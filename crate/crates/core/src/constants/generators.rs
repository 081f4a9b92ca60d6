use std::collections::HashSet;

use serde::Serialize;

use super::bracketed::{eval_bracketed, Atom, BracketedWord};
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Word};

/// One free generator of the algebra of constants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    pub bw: BracketedWord,
    pub value: NCPoly,
    /// Leading monomial of the top-grade part of `value`.
    pub lm: Word,
    pub weight: usize,
}

/// Free generators of the constants of `X -> 0`, `Y -> f(X)` up to a weight bound,
/// sorted by weight and then by descending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorTable {
    pub m: usize,
    pub f: NCPoly,
    pub weight_max: usize,
    pub entries: Vec<GeneratorEntry>,
}

impl GeneratorTable {
    /// A table over arbitrary bracketed words, evaluated with `f`.
    pub fn from_bracketed(m: usize, f: NCPoly, weight_max: usize, words: Vec<BracketedWord>) -> Result<Self> {
        let mut entries = Vec::with_capacity(words.len());
        let mut seen = HashSet::new();
        for bw in words {
            let value = eval_bracketed(&bw, &f);
            let lm = value.top_grade_part(m).leading_monomial()?.clone();
            if !seen.insert(lm.clone()) {
                return Err(Error::InvalidArgument(format!("duplicate leading monomial {lm}")));
            }
            let weight = bw.weight(m);
            entries.push(GeneratorEntry { bw, value, lm, weight });
        }
        entries.sort_by(|a, b| a.weight.cmp(&b.weight).then_with(|| b.lm.cmp(&a.lm)));
        Ok(GeneratorTable { m, f, weight_max, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn grade(&self, w: &Word) -> usize {
        w.grade(self.m)
    }

    /// Whether `f` is a single term, so that all generator values are homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.f.len() == 1
    }

    pub fn entries_up_to(&self, weight: usize) -> impl Iterator<Item = (usize, &GeneratorEntry)> + '_ {
        self.entries.iter().enumerate().filter(move |(_, e)| e.weight <= weight)
    }
}

/// Permissible roots of each weight `0..=max_weight`, built from units (`T1` or a
/// box) separated by `X^j` with `j < m`.
fn roots_by_weight(m: usize, max_weight: usize) -> Vec<Vec<Vec<Atom>>> {
    let mut units: Vec<Vec<Atom>> = vec![Vec::new(); max_weight + 1];
    let mut roots: Vec<Vec<Vec<Atom>>> = vec![Vec::new(); max_weight + 1];
    for w in 1..=max_weight {
        if w == m + 1 {
            units[w].push(Atom::T1Pow(1));
        }
        if w > 2 * m {
            for r in &roots[w - 2 * m] {
                let inner = BracketedWord::new(r.clone()).expect("roots are nonempty");
                units[w].push(Atom::Box(inner));
            }
        }
        let mut acc = Vec::new();
        for wu in 1..=w {
            for u in &units[wu] {
                if wu == w {
                    acc.push(vec![u.clone()]);
                    continue;
                }
                for j in 0..m {
                    if wu + j >= w {
                        break;
                    }
                    for rest in &roots[w - wu - j] {
                        let mut seq = Vec::with_capacity(rest.len() + 2);
                        seq.push(u.clone());
                        if j > 0 {
                            seq.push(Atom::XPow(j));
                        }
                        seq.extend(rest.iter().cloned());
                        acc.push(seq);
                    }
                }
            }
        }
        roots[w] = acc;
    }
    roots
}

/// `X`, `T1` and the boxed permissible words of weight at most `weight_max`
/// (for `m >= 1`); `X, T_1, T_2, ...` by total degree for `m = 0`.
pub fn enumerate_generators(m: usize, f: &NCPoly, weight_max: usize) -> Result<GeneratorTable> {
    if f.is_zero() || !f.is_in_x_only() {
        return Err(Error::InvalidArgument(format!("f must be a nonzero polynomial in X, got {f}")));
    }
    let found = f.x_degree().unwrap_or(0);
    if found != m {
        return Err(Error::DegreeMismatch { expected: m, found });
    }
    let mut words = Vec::new();
    if weight_max >= 1 {
        words.push(BracketedWord::x_pow(1));
    }
    if m == 0 {
        let mut t = BracketedWord::t1_pow(1);
        let mut degree = 2;
        while degree <= weight_max {
            words.push(t.clone());
            t = t.boxed()?;
            degree += 1;
        }
    } else {
        if m < weight_max {
            words.push(BracketedWord::t1_pow(1));
        }
        if weight_max > 2 * m {
            let roots = roots_by_weight(m, weight_max - 2 * m);
            for by_weight in roots {
                for r in by_weight {
                    words.push(BracketedWord::new(r)?.boxed()?);
                }
            }
        }
    }
    GeneratorTable::from_bracketed(m, f.clone(), weight_max, words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::bracketed::{is_permissible, symbolic_leading_monomial};
    use crate::constants::t_sequence;
    use crate::deriv::Derivation;

    fn names(t: &GeneratorTable) -> Vec<(String, usize)> {
        t.entries.iter().map(|e| (e.bw.to_string(), e.weight)).collect()
    }

    #[test]
    fn small_table_m1() {
        let t = enumerate_generators(1, &NCPoly::x(), 4).unwrap();
        assert_eq!(names(&t), vec![("X".into(), 1), ("T1".into(), 2), ("{T1}".into(), 4)]);
    }

    #[test]
    fn weight_six_m1() {
        let t = enumerate_generators(1, &NCPoly::x(), 6).unwrap();
        let n = names(&t);
        assert_eq!(
            n,
            vec![
                ("X".into(), 1),
                ("T1".into(), 2),
                ("{T1}".into(), 4),
                ("{{T1}}".into(), 6),
                ("{T1^2}".into(), 6),
            ]
        );
    }

    #[test]
    fn m0_table_is_t_sequence() {
        let t = enumerate_generators(0, &NCPoly::one(), 3).unwrap();
        assert_eq!(names(&t), vec![("X".into(), 1), ("T1".into(), 2), ("{T1}".into(), 3)]);
        assert_eq!(t.entries[2].value, t_sequence(2, &NCPoly::one()));
        for (i, e) in enumerate_generators(0, &NCPoly::one(), 6).unwrap().entries.iter().skip(1).enumerate() {
            assert_eq!(e.value.leading_monomial().unwrap(), &Word::y_pow(i + 1).concat(&Word::x()));
            assert_eq!(e.weight, i + 2);
        }
    }

    #[test]
    fn degree_mismatch_rejected() {
        assert_eq!(
            enumerate_generators(2, &NCPoly::x(), 5),
            Err(Error::DegreeMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn entries_are_constants_and_consistent() {
        for (m, f) in [(1, NCPoly::x()), (2, NCPoly::x_pow(2)), (2, &NCPoly::x() + &NCPoly::x_pow(2).scale(&crate::ncalg::rat(3, 1)))] {
            let d = Derivation::triangular(f.clone());
            let t = enumerate_generators(m, &f, 10).unwrap();
            let mut seen = HashSet::new();
            for e in &t.entries {
                assert!(d.derive(&e.value).is_zero(), "{} not constant", e.bw);
                assert!(seen.insert(e.bw.clone()));
                if e.bw.is_boxed() {
                    assert!(is_permissible(&e.bw, m));
                    assert_eq!(symbolic_leading_monomial(&e.bw, m).unwrap(), e.lm);
                }
                assert_eq!(e.lm.weight(m), e.weight);
            }
        }
    }
}
