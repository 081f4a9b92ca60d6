use super::kernel::check_cap;
use super::linalg::Echelon;
use crate::constants::{box_op, GeneratorTable};
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Word};

/// Dimension at weight `n_weight` of the span of bracketed products
/// `A_1 Y A_2 Y ... Y A_k` (`k <= n`, each `A_i` a product of `X` and `T1`,
/// any nesting of boxes over the whole word), for `F = c X^m`.
///
/// Spans are built bottom-up by weight and number of free `Y`s; since products
/// and boxes are multilinear it is enough to keep a basis at every stage.
pub fn rfn_span_dimension(n: usize, m: usize, n_weight: usize, table: &GeneratorTable) -> Result<usize> {
    check_cap(n_weight)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if m == 0 || table.m != m {
        return Err(Error::InvalidArgument(format!("table has m = {}, expected m = {m} >= 1", table.m)));
    }
    if !table.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let f = &table.f;
    let max_y = n - 1;
    let size = n_weight + 1;
    // words[w][y]: basis of bracketed words of weight w with exactly y free Ys
    let mut words: Vec<Vec<Vec<NCPoly>>> = vec![vec![Vec::new(); max_y + 1]; size];
    let mut atoms: Vec<Vec<Vec<NCPoly>>> = vec![vec![Vec::new(); max_y + 1]; size];
    words[0][0].push(NCPoly::one());
    let basis = |polys: Vec<NCPoly>| -> Vec<NCPoly> {
        let mut e: Echelon<Word> = Echelon::new();
        for p in &polys {
            e.insert_poly(p);
        }
        e.polys()
    };
    for w in 1..size {
        for y in 0..=max_y {
            let mut a = Vec::new();
            if w == 1 && y == 0 {
                a.push(NCPoly::x());
            }
            if w == m && y == 1 {
                a.push(NCPoly::y());
            }
            if w == m + 1 && y == 0 {
                a.push(NCPoly::t1());
            }
            if w > 2 * m {
                for inner in &words[w - 2 * m][y] {
                    a.push(box_op(inner, f));
                }
            }
            atoms[w][y] = basis(a);

            let mut acc = Vec::new();
            for w1 in 1..=w {
                for y1 in 0..=y {
                    for head in &atoms[w1][y1] {
                        for tail in &words[w - w1][y - y1] {
                            acc.push(head * tail);
                        }
                    }
                }
            }
            words[w][y] = basis(acc);
        }
    }
    let all: Vec<NCPoly> = words[n_weight].iter().flatten().cloned().collect();
    Ok(basis(all).len())
}
