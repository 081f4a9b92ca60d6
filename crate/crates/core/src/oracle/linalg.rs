//! Exact elimination over sparse rational vectors.
//!
//! A vector is a map from column keys to coefficients; the pivot of a vector
//! is its largest key, so for words the pivot is the leading monomial.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ncalg::{NCPoly, Rational, Word};

pub type SparseVec<K> = BTreeMap<K, Rational>;

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, c: &Rational, x: &SparseVec<K>) {
    for (k, v) in x {
        let slot = target.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c * v;
        if slot.is_zero() {
            target.remove(k);
        }
    }
}

/// Reduced row echelon basis, kept keyed by pivot.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        // Pivots of the rows are pairwise distinct and each row has zeros in
        // the other pivot columns, so one pass over `v`'s keys suffices.
        let keys: Vec<K> = v.keys().filter(|k| self.rows.contains_key(*k)).cloned().collect();
        for k in keys.into_iter().rev() {
            if let Some(c) = v.get(&k).cloned() {
                axpy(&mut v, &-c, &self.rows[&k]);
            }
        }
        v
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut v = self.reduce(v);
        let Some((pivot, lead)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        if !lead.is_one() {
            let inv = lead.recip();
            for c in v.values_mut() {
                *c *= &inv;
            }
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &v);
            }
        }
        self.rows.insert(pivot, v);
        true
    }

    /// Rows in descending pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> + '_ {
        self.rows.values().rev()
    }

    pub fn into_rows(self) -> Vec<SparseVec<K>> {
        self.rows.into_values().rev().collect()
    }
}

impl Echelon<Word> {
    pub fn insert_poly(&mut self, p: &NCPoly) -> bool {
        self.insert(p.as_map().clone())
    }

    pub fn contains_poly(&self, p: &NCPoly) -> bool {
        self.contains(p.as_map().clone())
    }

    pub fn polys(&self) -> Vec<NCPoly> {
        self.rows().map(|r| NCPoly::from_map(r.clone())).collect()
    }
}

/// Kernel of the linear map sending each source key to `image(key)`, as a
/// reduced echelon basis over the source keys.
pub fn kernel<S, T, F>(sources: &[S], mut image: F) -> Echelon<S>
where
    S: Ord + Clone,
    T: Ord + Clone,
    F: FnMut(&S) -> SparseVec<T>,
{
    // pivot of the reduced image -> (reduced image, combination of sources)
    let mut pivots: BTreeMap<T, (SparseVec<T>, SparseVec<S>)> = BTreeMap::new();
    let mut out = Echelon::new();
    for s in sources {
        let mut img = image(s);
        let mut combo: SparseVec<S> = BTreeMap::new();
        combo.insert(s.clone(), Rational::one());
        let mut independent = false;
        while let Some((k, c)) = img.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            match pivots.get(&k) {
                Some((pimg, pcombo)) => {
                    let factor = -c;
                    axpy(&mut img, &factor, pimg);
                    axpy(&mut combo, &factor, pcombo);
                }
                None => {
                    let inv = c.recip();
                    for v in img.values_mut() {
                        *v *= &inv;
                    }
                    for v in combo.values_mut() {
                        *v *= &inv;
                    }
                    pivots.insert(k, (img, combo.clone()));
                    independent = true;
                    break;
                }
            }
        }
        if !independent {
            out.insert(combo);
        }
    }
    out
}

/// Rank of a family of polynomials.
pub fn rank_of<'a, I: IntoIterator<Item = &'a NCPoly>>(polys: I) -> usize {
    let mut e = Echelon::new();
    for p in polys {
        e.insert_poly(p);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::rat;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, c)| (k, rat(c, 1))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(2, 1), (1, 1)])));
        assert!(e.insert(v(&[(2, 1), (0, 1)])));
        assert!(!e.insert(v(&[(1, 2), (0, -2)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(v(&[(1, 1), (0, -1)])));
        assert!(!e.contains(v(&[(0, 1)])));
        // reduced: the second row has no entry in the first pivot column
        let rows = e.into_rows();
        assert_eq!(rows[0], v(&[(2, 1), (0, 1)]));
        assert_eq!(rows[1], v(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn kernel_of_small_map() {
        // (a, b, c) -> a + b at key 0, b + c at key 1: kernel spanned by (1, -1, 1)
        let sources = [0u32, 1, 2];
        let k = kernel(&sources, |&s| match s {
            0 => v(&[(0, 1)]),
            1 => v(&[(0, 1), (1, 1)]),
            _ => v(&[(1, 1)]),
        });
        assert_eq!(k.rank(), 1);
        assert_eq!(k.into_rows()[0], v(&[(2, 1), (1, -1), (0, 1)]));
    }
}
