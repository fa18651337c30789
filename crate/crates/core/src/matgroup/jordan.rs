use crate::error::{Error, Result};
use crate::exactfield::{ratio, Field};
use crate::linalg::Matrix;

/// Multiplicative Jordan–Chevalley decomposition `Φ = Φ_s Φ_u` over the base field.
///
/// The semisimple part is the additive one, obtained by Newton iteration
/// `S ← S − p(S) p′(S)⁻¹` on the squarefree part `p` of the minimal polynomial.
pub fn jordan_chevalley(phi: &Matrix) -> Result<(Matrix, Matrix)> {
    if !phi.is_invertible() {
        return Err(Error::Singular);
    }
    let p = phi.minimal_polynomial().squarefree_part();
    let dp = p.derivative();
    let mut s = phi.clone();
    loop {
        let ps = s.eval_poly(&p);
        if ps.is_zero() {
            break;
        }
        let inv = s.eval_poly(&dp).inverse().ok_or(Error::Singular)?;
        s = &s - &(&ps * &inv);
    }
    let u = &s.inverse().ok_or(Error::Singular)? * phi;
    Ok((s, u))
}

/// `exp(X)` for nilpotent `X`, as a finite series.
pub fn exp_nilpotent(x: &Matrix) -> Result<Matrix> {
    if !x.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let k = x.field();
    let n = x.rows();
    let mut acc = Matrix::identity(k, n);
    let mut term = Matrix::identity(k, n);
    for i in 1..n.max(1) {
        term = (&term * x).scale(&k.from_int(i as i64).inv().unwrap());
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `log(u)` for unipotent `u`, as a finite series.
pub fn log_unipotent(u: &Matrix) -> Result<Matrix> {
    let k: &Field = u.field();
    let n = u.rows();
    let x = u - &Matrix::identity(k, n);
    if !x.is_nilpotent() {
        return Err(Error::NotUnipotent);
    }
    let mut acc = Matrix::zeros(k, n, n);
    let mut power = Matrix::identity(k, n);
    for i in 1..n.max(1) {
        power = &power * &x;
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let c = k.from_rational(ratio(sign, i as i64));
        acc = &acc + &power.scale(&c);
    }
    Ok(acc)
}
