use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matgroup::{ad_lie_operator, LieSubspace};

use super::cocharacter::Cocharacter;

/// `V = ⊕ V_n` with `ad(h) = n` on `V_n`, for the grading element `h` of `λ`.
pub fn weight_grading(lambda: &Cocharacter, v: &LieSubspace) -> Result<BTreeMap<i64, LieSubspace>> {
    let h = lambda.grading_element();
    let k = v.field();
    let ad = ad_lie_operator(&h, v)?;
    let mut candidates: Vec<i64> =
        lambda.weights().iter().flat_map(|a| lambda.weights().iter().map(move |b| a - b)).collect();
    candidates.sort();
    candidates.dedup();
    let mut out = BTreeMap::new();
    let mut total = 0;
    let id = Matrix::identity(k, v.dim());
    for n in candidates {
        let ker = (&ad - &id.scale(&k.from_int(n))).kernel();
        if ker.is_empty() {
            continue;
        }
        total += ker.len();
        out.insert(n, v.from_coordinates(&ker));
    }
    if total != v.dim() {
        return Err(Error::NotInvariant);
    }
    Ok(out)
}

/// The pieces `𝔤_n = 𝔤′_n ⊕ 𝔤_n^{lw}` of one nonpositive weight.
#[derive(Clone, Debug)]
pub struct LowestWeightPiece {
    pub weight: i64,
    pub graded: LieSubspace,
    /// `ker (ad N)^{−n+1}` on `𝔤_n`
    pub lowest_weight: LieSubspace,
    /// `ad N (𝔤_{n−2})`
    pub image: LieSubspace,
}

/// Lowest-weight splittings of every nonzero `𝔤_n`, `n ≤ 0`, for `λ` adapted to `N`.
pub fn lowest_weight_split(nil: &Matrix, lambda: &Cocharacter, v: &LieSubspace) -> Result<BTreeMap<i64, LowestWeightPiece>> {
    let k = v.field().clone();
    let h = lambda.grading_element();
    if Matrix::bracket(&h, nil) != nil.scale(&k.from_int(2)) {
        return Err(Error::NotAdapted);
    }
    let grading = weight_grading(lambda, v)?;
    let n = v.n();
    let mut out = BTreeMap::new();
    for (&w, g_n) in grading.range(..=0) {
        let power = (1 - w) as usize;
        let cols: Vec<_> = g_n
            .basis()
            .iter()
            .map(|b| {
                let mut x = b.clone();
                for _ in 0..power {
                    x = Matrix::bracket(nil, &x);
                }
                x.flatten()
            })
            .collect();
        let map = Matrix::from_columns(&k, n * n, &cols);
        let lowest_weight = g_n.from_coordinates(&map.kernel());
        let image = match grading.get(&(w - 2)) {
            Some(g) => LieSubspace::span(&k, n, &g.basis().iter().map(|b| Matrix::bracket(nil, b)).collect::<Vec<_>>()),
            None => LieSubspace::zero(&k, n),
        };
        let source_dim = grading.get(&(w - 2)).map_or(0, |g| g.dim());
        if image.dim() != source_dim
            || !g_n.contains_subspace(&image)
            || image.dim() + lowest_weight.dim() != g_n.dim()
            || image.intersection(&lowest_weight).dim() != 0
        {
            return Err(Error::VerificationFailed(format!("lowest-weight splitting fails in weight {w}")));
        }
        out.insert(w, LowestWeightPiece { weight: w, graded: g_n.clone(), lowest_weight, image });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;

    #[test]
    fn gradings() {
        let k = Field::rationals();
        let gl2 = LieSubspace::full(&k, 2);
        let l = Cocharacter::from_grading_element(&Matrix::from_ints(&k, &[&[1, 0], &[0, -1]])).unwrap();
        let g = weight_grading(&l, &gl2).unwrap();
        let dims: Vec<(i64, usize)> = g.iter().map(|(w, s)| (*w, s.dim())).collect();
        assert_eq!(dims, vec![(-2, 1), (0, 2), (2, 1)]);
        assert!(g[&2].contains(&Matrix::unit(&k, 2, 0, 1)));
        let t = weight_grading(&Cocharacter::trivial(&k, 2), &gl2).unwrap();
        assert_eq!(t.len(), 1);
        let gl3 = LieSubspace::full(&k, 3);
        let l3 = Cocharacter::from_grading_element(&Matrix::from_ints(&k, &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])).unwrap();
        let g3 = weight_grading(&l3, &gl3).unwrap();
        let dims: Vec<(i64, usize)> = g3.iter().map(|(w, s)| (*w, s.dim())).collect();
        assert_eq!(dims, vec![(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)]);
    }

    #[test]
    fn splittings() {
        let k = Field::rationals();
        let gl2 = LieSubspace::full(&k, 2);
        let e = Matrix::unit(&k, 2, 0, 1);
        let l = Cocharacter::from_grading_element(&Matrix::from_ints(&k, &[&[1, 0], &[0, -1]])).unwrap();
        let s = lowest_weight_split(&e, &l, &gl2).unwrap();
        assert_eq!(s[&0].lowest_weight.dim(), 1);
        assert!(s[&0].lowest_weight.contains(&Matrix::identity(&k, 2)));
        assert!(s[&0].image.contains(&Matrix::from_ints(&k, &[&[1, 0], &[0, -1]])));
        assert!(s[&-2].lowest_weight.contains(&Matrix::unit(&k, 2, 1, 0)));

        let gl3 = LieSubspace::full(&k, 3);
        let e3 = Matrix::unit(&k, 3, 0, 1);
        let l3 = Cocharacter::from_grading_element(&Matrix::from_ints(&k, &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 0]])).unwrap();
        let s3 = lowest_weight_split(&e3, &l3, &gl3).unwrap();
        let lw1 = &s3[&-1].lowest_weight;
        assert_eq!(lw1.dim(), 2);
        assert!(lw1.contains(&Matrix::unit(&k, 3, 1, 2)) && lw1.contains(&Matrix::unit(&k, 3, 2, 0)));
        assert!(s3[&-2].lowest_weight.contains(&Matrix::unit(&k, 3, 1, 0)));
        let lw0 = &s3[&0].lowest_weight;
        assert_eq!(lw0.dim(), 2);
        assert!(lw0.contains(&Matrix::from_ints(&k, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])));
        assert!(lw0.contains(&Matrix::unit(&k, 3, 2, 2)));
        let bad = Cocharacter::trivial(&k, 3);
        assert!(matches!(lowest_weight_split(&e3, &bad, &gl3), Err(Error::NotAdapted)));
    }
}
