use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldElement};
use crate::linalg::{Matrix, Subspace, Vector};

use super::group::{GroupKind, GroupSpec};

/// A linear subspace of `gl_n(K)`, stored through the row-major flattening.
#[derive(Clone, Debug)]
pub struct LieSubspace {
    n: usize,
    space: Subspace,
}

impl LieSubspace {
    /// Span of the given matrices; dependent members are dropped.
    pub fn span(field: &Field, n: usize, matrices: &[Matrix]) -> Self {
        let vectors = matrices.iter().map(|m| m.flatten()).collect();
        LieSubspace { n, space: Subspace::from_spanning(field, n * n, vectors) }
    }

    pub fn full(field: &Field, n: usize) -> Self {
        LieSubspace { n, space: Subspace::full(field, n * n) }
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        LieSubspace { n, space: Subspace::zero(field, n * n) }
    }

    pub fn from_subspace(n: usize, space: Subspace) -> Self {
        assert_eq!(space.ambient(), n * n);
        LieSubspace { n, space }
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn basis(&self) -> Vec<Matrix> {
        self.space.basis().iter().map(|v| Matrix::from_flat(self.field(), self.n, v)).collect()
    }

    pub fn basis_matrix(&self, i: usize) -> Matrix {
        Matrix::from_flat(self.field(), self.n, &self.space.basis()[i])
    }

    pub fn coordinates(&self, x: &Matrix) -> Option<Vector> {
        self.space.coordinates(&x.flatten())
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.space.contains(&x.flatten())
    }

    pub fn contains_subspace(&self, other: &LieSubspace) -> bool {
        self.space.contains_subspace(&other.space)
    }

    pub fn same_as(&self, other: &LieSubspace) -> bool {
        self.space.same_as(&other.space)
    }

    /// The matrix with the given coordinates.
    pub fn element(&self, coords: &[FieldElement]) -> Matrix {
        Matrix::from_flat(self.field(), self.n, &self.space.combine(coords))
    }

    pub fn intersection(&self, other: &LieSubspace) -> LieSubspace {
        LieSubspace { n: self.n, space: self.space.intersection(&other.space) }
    }

    pub fn sum(&self, other: &LieSubspace) -> LieSubspace {
        LieSubspace { n: self.n, space: self.space.sum(&other.space) }
    }

    /// Subspace spanned by the vectors with the given coordinates.
    pub fn from_coordinates(&self, coords: &[Vector]) -> LieSubspace {
        let m: Vec<Matrix> = coords.iter().map(|c| self.element(c)).collect();
        LieSubspace::span(self.field(), self.n, &m)
    }

    pub fn is_bracket_closed(&self) -> bool {
        let b = self.basis();
        b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| self.contains(&Matrix::bracket(x, y))))
    }

    /// Matrix (in this subspace's coordinates) of a linear map `f` preserving it.
    pub fn operator(&self, f: impl Fn(&Matrix) -> Matrix) -> Result<Matrix> {
        let cols = self
            .basis()
            .iter()
            .map(|b| self.coordinates(&f(b)).ok_or(Error::NotInvariant))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(self.field(), self.dim(), &cols))
    }
}

/// Tangent space at the identity.
pub fn lie_algebra_basis(group: &GroupSpec) -> LieSubspace {
    let k = group.field();
    let n = group.n();
    match group.kind() {
        GroupKind::GeneralLinear(_) => LieSubspace::full(k, n),
        GroupKind::SpecialLinear(_) => {
            let mut basis = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        basis.push(Matrix::unit(k, n, i, j));
                    }
                }
            }
            for i in 1..n {
                basis.push(&Matrix::unit(k, n, i - 1, i - 1) - &Matrix::unit(k, n, i, i));
            }
            LieSubspace::span(k, n, &basis)
        }
        GroupKind::FormStabilizer(_, b) => {
            // columns: images of the E_ij under X ↦ XᵀB + BX
            let cols = (0..n * n)
                .map(|idx| {
                    let e = Matrix::unit(k, n, idx / n, idx % n);
                    (&(&e.transpose() * b) + &(b * &e)).flatten()
                })
                .collect::<Vec<_>>();
            let map = Matrix::from_columns(k, n * n, &cols);
            LieSubspace::from_subspace(n, Subspace::from_basis(k, n * n, map.kernel()))
        }
    }
}

/// `Ad(g)` on `V`, in `V`'s coordinates.
pub fn ad_operator(g: &Matrix, v: &LieSubspace) -> Result<Matrix> {
    let ginv = g.inverse().ok_or(Error::Singular)?;
    v.operator(|y| &(g * y) * &ginv)
}

/// `ad(X) = [X, ·]` on `V`, in `V`'s coordinates.
pub fn ad_lie_operator(x: &Matrix, v: &LieSubspace) -> Result<Matrix> {
    v.operator(|y| Matrix::bracket(x, y))
}

/// A constraint for [`centralizer_subspace`].
#[derive(Clone, Debug)]
pub enum Action {
    /// `Ad(g)Y = Y`
    Conjugation(Matrix),
    /// `[X, Y] = 0`
    Bracket(Matrix),
}

/// `{Y ∈ V : every action fixes (resp. kills) Y}`. The actions need not preserve `V`.
pub fn centralizer_subspace(actions: &[Action], v: &LieSubspace) -> Result<LieSubspace> {
    let k = v.field();
    let n = v.n();
    let dim = v.dim();
    if dim == 0 {
        return Ok(v.clone());
    }
    // Stack the linear maps V → gl_n (ambient coordinates) and take the kernel.
    let mut stacked: Option<Matrix> = None;
    for action in actions {
        let cols = v
            .basis()
            .iter()
            .map(|y| match action {
                Action::Conjugation(g) => {
                    let ginv = g.inverse().ok_or(Error::Singular)?;
                    Ok((&(&(g * y) * &ginv) - y).flatten())
                }
                Action::Bracket(x) => Ok(Matrix::bracket(x, y).flatten()),
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_columns(k, n * n, &cols);
        stacked = Some(match stacked {
            None => m,
            Some(s) => s.vstack(&m),
        });
    }
    let Some(m) = stacked else { return Ok(v.clone()) };
    Ok(v.from_coordinates(&m.kernel()))
}

/// `{X ∈ V : Ad(τ)X = X for every τ}`.
pub fn invariant_subalgebra(elements: &[Matrix], v: &LieSubspace) -> Result<LieSubspace> {
    let actions: Vec<Action> = elements
        .iter()
        .filter(|t| !t.is_identity())
        .map(|t| Action::Conjugation(t.clone()))
        .collect();
    centralizer_subspace(&actions, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn classical_dimensions() {
        let k = q();
        assert_eq!(lie_algebra_basis(&GroupSpec::gl(&k, 3)).dim(), 9);
        assert_eq!(lie_algebra_basis(&GroupSpec::sl(&k, 3)).dim(), 8);
        let b = Matrix::from_ints(&k, &[&[0, 1], &[-1, 0]]);
        let sp = GroupSpec::new(GroupKind::FormStabilizer(2, b), &k).unwrap();
        let lie = lie_algebra_basis(&sp);
        assert_eq!(lie.dim(), 3);
        assert!(lie.is_bracket_closed());
        // orthogonal group of the identity form: antisymmetric matrices
        let o3 = GroupSpec::new(GroupKind::FormStabilizer(3, Matrix::identity(&k, 3)), &k).unwrap();
        assert_eq!(lie_algebra_basis(&o3).dim(), 3);
    }

    #[test]
    fn adjoint_eigenvalues_of_diag() {
        let k = q();
        let gl2 = LieSubspace::full(&k, 2);
        let g = Matrix::diag(&k, &[k.from_int(1), k.from_int(4)]);
        let ad = ad_operator(&g, &gl2).unwrap();
        // basis E11, E12, E21, E22
        assert!(ad.is_diagonal());
        let d: Vec<String> = (0..4).map(|i| ad.get(i, i).to_string()).collect();
        assert_eq!(d, ["1", "1/4", "4", "1"]);
        assert!(ad_operator(&Matrix::identity(&k, 2), &gl2).unwrap().is_identity());
    }

    #[test]
    fn invariants_and_centralizers() {
        let k = q();
        let gl2 = LieSubspace::full(&k, 2);
        let t2 = Matrix::from_ints(&k, &[&[1, 0], &[0, -1]]);
        assert_eq!(invariant_subalgebra(&[t2], &gl2).unwrap().dim(), 2);
        let rot = Matrix::from_ints(&k, &[&[0, -1], &[1, -1]]);
        let inv = invariant_subalgebra(&[rot.clone(), rot.pow(2)], &gl2).unwrap();
        assert_eq!(inv.dim(), 2);
        assert!(inv.contains(&Matrix::identity(&k, 2)) && inv.contains(&rot));
        let e12 = Matrix::unit(&k, 2, 0, 1);
        let c = centralizer_subspace(&[Action::Bracket(e12.clone())], &gl2).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.contains(&e12));
        let ad = ad_lie_operator(&e12, &gl2).unwrap();
        assert_eq!(ad.rank(), 2);
    }

    #[test]
    fn not_invariant() {
        let k = q();
        let diag = LieSubspace::span(&k, 2, &[Matrix::unit(&k, 2, 0, 0), Matrix::unit(&k, 2, 1, 1)]);
        let g = Matrix::from_ints(&k, &[&[1, 1], &[0, 1]]);
        assert!(matches!(ad_operator(&g, &diag), Err(Error::NotInvariant)));
    }
}
