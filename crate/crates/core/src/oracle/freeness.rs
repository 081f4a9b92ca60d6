use std::collections::HashSet;

use crate::constants::GeneratorTable;
use crate::ncalg::Word;

/// True iff the generator leading monomials of weight `<= n` form a code up to
/// weight `n`: every concatenation of them of total weight `<= n` arises from
/// exactly one sequence of factors. In particular no leading monomial is itself
/// a product of two or more others.
pub fn verify_freeness(table: &GeneratorTable, n: usize) -> bool {
    let codes: Vec<(&Word, usize)> = table
        .entries
        .iter()
        .filter(|e| e.weight <= n)
        .map(|e| (&e.lm, e.weight))
        .collect();
    if codes.iter().any(|(_, w)| *w == 0) {
        return false;
    }
    let mut seen = HashSet::new();
    let mut cur = Word::one();
    fn rec(rem: usize, codes: &[(&Word, usize)], cur: &mut Word, seen: &mut HashSet<Word>) -> bool {
        for (lm, w) in codes {
            if *w > rem {
                continue;
            }
            let next = cur.concat(lm);
            if !seen.insert(next.clone()) {
                return false;
            }
            let saved = std::mem::replace(cur, next);
            let ok = rec(rem - w, codes, cur, seen);
            *cur = saved;
            if !ok {
                return false;
            }
        }
        true
    }
    rec(n, &codes, &mut cur, &mut seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{enumerate_generators, BracketedWord};
    use crate::ncalg::NCPoly;

    #[test]
    fn shipped_tables_are_free() {
        assert!(verify_freeness(&enumerate_generators(1, &NCPoly::x(), 8).unwrap(), 8));
        assert!(verify_freeness(&enumerate_generators(0, &NCPoly::one(), 8).unwrap(), 8));
    }

    #[test]
    fn degenerate_table() {
        let t = GeneratorTable::from_bracketed(
            1,
            NCPoly::x(),
            2,
            vec![BracketedWord::x_pow(1), BracketedWord::x_pow(2)],
        )
        .unwrap();
        assert!(!verify_freeness(&t, 2));
    }
}
