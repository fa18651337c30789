use super::field::FieldElement;
use super::poly::UnivariatePoly;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Projector onto the `mu`-eigenspace of a semisimple `a` along the other
/// eigenspaces, i.e. `r(a)/r(mu)` with `r = m / (x − mu)` for the minimal
/// polynomial `m`.
pub fn primary_projector(a: &Matrix, mu: &FieldElement) -> Result<Matrix> {
    projector_with_minpoly(a, &a.minimal_polynomial(), mu)
}

/// [`primary_projector`] with the minimal polynomial of `a` supplied.
///
/// For semisimple `a` the CRT polynomial evaluates to the projection onto
/// `ker(a − mu)` along `im(a − mu)`, which is what is computed: one elimination
/// instead of a polynomial evaluation in `a`.
pub(crate) fn projector_with_minpoly(a: &Matrix, m: &UnivariatePoly, mu: &FieldElement) -> Result<Matrix> {
    if !m.is_squarefree() {
        return Err(Error::NotSemisimple);
    }
    if !m.eval(mu).is_zero() {
        return Err(Error::NotAnEigenvalue(mu.to_string()));
    }
    let k = a.field();
    let n = a.rows();
    let shifted = a - &Matrix::identity(k, n).scale(mu);
    let (kernel, pivots) = shifted.kernel_and_pivots();
    let mut columns = kernel.clone();
    columns.extend(pivots.iter().map(|&j| shifted.col(j)));
    let basis = Matrix::from_columns(k, n, &columns);
    let inv = basis.inverse().ok_or(Error::NotSemisimple)?;
    let dim = kernel.len();
    let left = Matrix::from_columns(k, n, &kernel);
    let top = Matrix::from_fn(k, dim, n, |i, j| inv.get(i, j).clone());
    Ok(&left * &top)
}
