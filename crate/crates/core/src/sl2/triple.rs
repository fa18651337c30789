use crate::error::{Error, Result};
use crate::exactfield::{projector_with_minpoly, FieldElement};
use crate::linalg::{Matrix, Vector};
use crate::matgroup::{ad_operator, LieSubspace};

/// `(e, h, f)` with `[h,e] = 2e`, `[e,f] = h`, `[h,f] = −2f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SL2Triple {
    pub e: Matrix,
    pub h: Matrix,
    pub f: Matrix,
}

impl SL2Triple {
    pub fn relations_hold(&self) -> bool {
        let two = self.e.field().from_int(2);
        Matrix::bracket(&self.h, &self.e) == self.e.scale(&two)
            && Matrix::bracket(&self.e, &self.f) == self.h
            && Matrix::bracket(&self.h, &self.f) == self.f.scale(&-&two)
    }
}

/// Completes a nonzero nilpotent `e ∈ 𝔥` to an sl₂-triple inside the reductive
/// subalgebra `𝔥`.
///
/// First `h` is solved from `[h,e] = 2e` with `h ∈ [e, 𝔥]`, in matrix-entry
/// coordinates ordered diagonal entries first; the solution with all free
/// variables zero is diagonal whenever a diagonal solution exists. Then `f ∈ 𝔥` is
/// the unique solution of `[e,f] = h`, `[h,f] = −2f`.
pub fn jacobson_morozov(e: &Matrix, h_sub: &LieSubspace) -> Result<SL2Triple> {
    if e.is_zero() {
        return Err(Error::ZeroNilpotent);
    }
    if !e.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    if !h_sub.contains(e) {
        return Err(Error::LinearSolveFailed("e is not in the subalgebra".into()));
    }
    let h = solve_h(e, h_sub)?;
    let f = solve_f(e, &h, h_sub)?;
    let triple = SL2Triple { e: e.clone(), h, f };
    if !triple.relations_hold() {
        return Err(Error::LinearSolveFailed("triple relations fail".into()));
    }
    Ok(triple)
}

/// Matrix-entry positions, diagonal first, then off-diagonal row-major.
fn entry_order(n: usize) -> Vec<(usize, usize)> {
    let mut order: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                order.push((i, j));
            }
        }
    }
    order
}

fn solve_h(e: &Matrix, h_sub: &LieSubspace) -> Result<Matrix> {
    let k = e.field();
    let n = e.rows();
    let order = entry_order(n);
    let m = order.len();
    // im(ad e|𝔥) as vectors in the chosen entry order
    let image: Vec<Vector> = h_sub
        .basis()
        .iter()
        .map(|b| {
            let c = Matrix::bracket(e, b);
            order.iter().map(|&(i, j)| c.get(i, j).clone()).collect()
        })
        .collect();
    // equations a·h = 0 for a in the annihilator of the image
    let annihilator = if image.is_empty() {
        Matrix::identity(k, m).to_rows()
    } else {
        Matrix::from_rows(k, image).kernel()
    };
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vec<FieldElement> = Vec::new();
    // [h, e] − 2e = 0, one equation per matrix entry (r, c)
    for r in 0..n {
        for c in 0..n {
            let row = order
                .iter()
                .map(|&(i, j)| {
                    // coefficient of h_ij in (he − eh)_rc
                    let mut v = k.zero();
                    if i == r {
                        v = &v + e.get(j, c);
                    }
                    if j == c {
                        v = &v - e.get(r, i);
                    }
                    v
                })
                .collect();
            rows.push(row);
            rhs.push(e.get(r, c).scale(&crate::exactfield::rat(2)));
        }
    }
    for a in annihilator {
        rows.push(a);
        rhs.push(k.zero());
    }
    let system = Matrix::from_rows(k, rows);
    let x = system
        .solve(&rhs)
        .ok_or_else(|| Error::LinearSolveFailed("no h with [h,e] = 2e in [e, 𝔥]".into()))?;
    let mut h = Matrix::zeros(k, n, n);
    for (v, &(i, j)) in x.into_iter().zip(&order) {
        h.set(i, j, v);
    }
    Ok(h)
}

fn solve_f(e: &Matrix, h: &Matrix, h_sub: &LieSubspace) -> Result<Matrix> {
    let k = e.field();
    let n = e.rows();
    let two = k.from_int(2);
    let cols: Vec<Vector> = h_sub
        .basis()
        .iter()
        .map(|b| {
            let mut v = Matrix::bracket(e, b).flatten();
            v.extend((&Matrix::bracket(h, b) + &b.scale(&two)).flatten());
            v
        })
        .collect();
    let system = Matrix::from_columns(k, 2 * n * n, &cols);
    let mut rhs = h.flatten();
    rhs.extend(std::iter::repeat_n(k.zero(), n * n));
    let c = system
        .solve(&rhs)
        .ok_or_else(|| Error::LinearSolveFailed("no f completing the triple".into()))?;
    Ok(h_sub.element(&c))
}

/// An sl₂-triple through `e` whose `h` is fixed by `Ad(g)` and whose `f` is an
/// `Ad(g)`-eigenvector with eigenvalue `α⁻¹`, given `Ad(g)e = αe`.
///
/// Starting from any triple `(e, h₀, f₀)` in `𝔥`, `h` is the component of `h₀` in
/// the 1-eigenspace of `Ad(g)|𝔥` and `f` the component of `f₀` in the
/// `α⁻¹`-eigenspace, both cut out by primary projectors.
pub fn commuting_sl2(e: &Matrix, g: &Matrix, alpha: &FieldElement, h_sub: &LieSubspace) -> Result<SL2Triple> {
    let ginv = g.inverse().ok_or(Error::Singular)?;
    let conj = |x: &Matrix| &(g * x) * &ginv;
    if conj(e) != e.scale(alpha) {
        return Err(Error::EigenvalueRelationBroken);
    }
    let ad = ad_operator(g, h_sub)?;
    let raw = jacobson_morozov(e, h_sub)?;
    let coords = |x: &Matrix| h_sub.coordinates(x).expect("triple lies in 𝔥");
    let mu = ad.minimal_polynomial();
    let p1 = projector_with_minpoly(&ad, &mu, &e.field().one())?;
    let h = h_sub.element(&p1.mul_vec(&coords(&raw.h)));
    let alpha_inv = alpha.inv().ok_or(Error::EigenvalueRelationBroken)?;
    let p_inv = projector_with_minpoly(&ad, &mu, &alpha_inv)?;
    let f = h_sub.element(&p_inv.mul_vec(&coords(&raw.f)));
    let mut triple = SL2Triple { e: e.clone(), h, f };
    if !triple.relations_hold() {
        // f is determined by (e, h); solve for it directly
        triple.f = solve_f(e, &triple.h, h_sub)?;
        if !triple.relations_hold() {
            return Err(Error::EigenvalueRelationBroken);
        }
    }
    if conj(&triple.h) != triple.h || conj(&triple.f) != triple.f.scale(&alpha_inv) {
        return Err(Error::EigenvalueRelationBroken);
    }
    Ok(triple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn jm_gl2_and_gl3() {
        let k = q();
        let gl2 = LieSubspace::full(&k, 2);
        let t = jacobson_morozov(&Matrix::unit(&k, 2, 0, 1), &gl2).unwrap();
        assert_eq!(t.h, Matrix::from_ints(&k, &[&[1, 0], &[0, -1]]));
        assert_eq!(t.f, Matrix::unit(&k, 2, 1, 0));
        let gl3 = LieSubspace::full(&k, 3);
        let e = &Matrix::unit(&k, 3, 0, 1) + &Matrix::unit(&k, 3, 1, 2);
        let t = jacobson_morozov(&e, &gl3).unwrap();
        assert_eq!(t.h, Matrix::from_ints(&k, &[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        assert_eq!(t.f, Matrix::from_ints(&k, &[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]]));
        assert!(matches!(jacobson_morozov(&Matrix::zeros(&k, 2, 2), &gl2), Err(Error::ZeroNilpotent)));
    }

    #[test]
    fn commuting_examples() {
        let k = q();
        let gl2 = LieSubspace::full(&k, 2);
        let e = Matrix::unit(&k, 2, 0, 1);
        let g = Matrix::diag(&k, &[k.from_int(2), k.one()]);
        let t = commuting_sl2(&e, &g, &k.from_int(2), &gl2).unwrap();
        assert_eq!(t.h, Matrix::from_ints(&k, &[&[1, 0], &[0, -1]]));
        assert_eq!(t.f, Matrix::unit(&k, 2, 1, 0));
        assert!(matches!(commuting_sl2(&e, &g, &k.one(), &gl2), Err(Error::EigenvalueRelationBroken)));
        let gl3 = LieSubspace::full(&k, 3);
        let e3 = Matrix::unit(&k, 3, 0, 1);
        let g3 = Matrix::diag(&k, &[k.one(), k.one(), k.from_int(2)]);
        let t = commuting_sl2(&e3, &g3, &k.one(), &gl3).unwrap();
        assert!(t.relations_hold());
        assert_eq!(&g3 * &t.h, &t.h * &g3);
    }

    #[test]
    fn commuting_refines_a_non_fixed_h() {
        // g = diag(1,1,2) − E32 centralizes E12 but moves the diagonal-first h.
        let k = q();
        let gl3 = LieSubspace::full(&k, 3);
        let e = Matrix::unit(&k, 3, 0, 1);
        let g = Matrix::from_ints(&k, &[&[1, 0, 0], &[0, 1, 0], &[0, -1, 2]]);
        let raw = jacobson_morozov(&e, &gl3).unwrap();
        assert_ne!(&g * &raw.h, &raw.h * &g);
        let t = commuting_sl2(&e, &g, &k.one(), &gl3).unwrap();
        assert!(t.relations_hold());
        assert_eq!(&g * &t.h, &t.h * &g);
        assert_eq!(&g * &t.f, &t.f * &g);
    }
}
