use super::kernel::check_cap;
use super::linalg::kernel;
use crate::deriv::{weitzenbock, Derivation};
use crate::error::Result;
use crate::ncalg::{NCPoly, Word};

/// `δ_0, ..., δ_M` together with the same family with `X` and `Y` exchanged.
pub fn ak_family(big_m: usize) -> Vec<Derivation> {
    let direct: Vec<Derivation> = (0..=big_m).map(weitzenbock).collect();
    let switched: Vec<Derivation> = direct.iter().map(Derivation::swapped).collect();
    direct.into_iter().chain(switched).collect()
}

/// Echelon basis of the common kernel of [`ak_family`] on words of total degree `<= n`.
pub fn ak_basis(big_m: usize, n: usize) -> Result<Vec<NCPoly>> {
    check_cap(n)?;
    let family = ak_family(big_m);
    let words = Word::all_up_to_grade(n, 1);
    let k = kernel(&words, |w| {
        let mut out = std::collections::BTreeMap::new();
        for (i, d) in family.iter().enumerate() {
            for (img_w, c) in d.derive_word(w).into_terms() {
                out.insert((i, img_w), c);
            }
        }
        out
    });
    Ok(k.polys())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero() {
        assert_eq!(ak_basis(2, 0).unwrap(), vec![NCPoly::one()]);
    }

    #[test]
    fn degree_four() {
        let t1 = NCPoly::t1();
        assert_eq!(ak_basis(4, 4).unwrap(), vec![t1.pow(2), t1.clone(), NCPoly::one()]);
    }
}
