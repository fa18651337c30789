use super::factor::factor_over_rationals;
use super::field::{Field, FieldElement};
use super::poly::UnivariatePoly;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// All roots of `p` lying in its coefficient field, with multiplicity, in
/// ascending order.
///
/// Over ℚ the polynomial is factored directly. Over a proper extension `K = ℚ(θ)`
/// the squarefree parts are shifted to `p(x − sθ)` until the norm down to ℚ is
/// squarefree; the linear factors over `K` are then the gcds with the rational
/// factors of the norm that turn out to have degree one.
pub fn roots_in_field(p: &UnivariatePoly) -> Result<Vec<(FieldElement, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        for r in squarefree_roots(&part)? {
            out.push((r, mult));
        }
    }
    out.sort();
    Ok(out)
}

fn squarefree_roots(p: &UnivariatePoly) -> Result<Vec<FieldElement>> {
    let k = p.field().clone();
    if k.is_rationals() {
        let q = p.to_rational().unwrap();
        let mut roots = Vec::new();
        for (f, _) in factor_over_rationals(&q)? {
            if f.degree() == Some(1) {
                roots.push(k.from_rational(-f.coeff(0)));
            }
        }
        return Ok(roots);
    }
    let theta = k.generator();
    for s in shift_sequence().take(64) {
        let st = &theta * &k.from_int(s);
        let shifted = p.shift(&-&st);
        let norm = norm_to_rationals(&shifted);
        if !norm.is_squarefree() {
            continue;
        }
        let mut roots = Vec::new();
        for (f, _) in factor_over_rationals(&norm)? {
            let g = shifted.gcd(&UnivariatePoly::from_rational(&k, &f));
            if g.degree() == Some(1) {
                let r = -&g.monic().coeff(0);
                roots.push(&r - &st);
            }
        }
        return Ok(roots);
    }
    Err(Error::PrimitiveElementSearchFailed(64))
}

/// `0, 1, −1, 2, −2, …`
pub(crate) fn shift_sequence() -> impl Iterator<Item = i64> {
    (0i64..).map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
}

/// `N_{K/ℚ}(p)`: the characteristic polynomial over ℚ of the companion matrix of
/// monic `p`, with each entry replaced by its regular representation.
pub(crate) fn norm_to_rationals(p: &UnivariatePoly) -> crate::exactfield::RationalPoly {
    let k = p.field();
    let p = p.monic();
    let m = p.degree().unwrap();
    let d = k.degree();
    let q = Field::rationals();
    let mut big = Matrix::zeros(&q, m * d, m * d);
    let place = |big: &mut Matrix, bi: usize, bj: usize, a: &FieldElement| {
        let rep = k.multiplication_matrix(a);
        for (i, row) in rep.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                big.set(bi * d + i, bj * d + j, q.from_rational(v));
            }
        }
    };
    for i in 1..m {
        place(&mut big, i, i - 1, &k.one());
    }
    for i in 0..m {
        place(&mut big, i, m - 1, &-&p.coeff(i));
    }
    big.charpoly().to_rational().unwrap()
}
