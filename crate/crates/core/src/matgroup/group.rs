use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::Matrix;

use super::lie::LieSubspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    GeneralLinear(usize),
    SpecialLinear(usize),
    /// `{g : gᵀBg = B}` for an invertible symmetric or antisymmetric `B`.
    FormStabilizer(usize, Matrix),
}

/// A matrix group over a fixed number field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    kind: GroupKind,
    field: Field,
}

impl GroupSpec {
    pub fn new(kind: GroupKind, field: &Field) -> Result<Self> {
        if let GroupKind::FormStabilizer(n, b) = &kind {
            if b.rows() != *n || b.cols() != *n {
                return Err(Error::Dimension(format!("form must be {n}x{n}")));
            }
            if !b.is_invertible() {
                return Err(Error::Singular);
            }
            let bt = b.transpose();
            if bt != *b && bt != -b {
                return Err(Error::Parse("form must be symmetric or antisymmetric".into()));
            }
        }
        Ok(GroupSpec { kind, field: field.clone() })
    }

    pub fn gl(field: &Field, n: usize) -> Self {
        GroupSpec { kind: GroupKind::GeneralLinear(n), field: field.clone() }
    }

    pub fn sl(field: &Field, n: usize) -> Self {
        GroupSpec { kind: GroupKind::SpecialLinear(n), field: field.clone() }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        match &self.kind {
            GroupKind::GeneralLinear(n) | GroupKind::SpecialLinear(n) | GroupKind::FormStabilizer(n, _) => *n,
        }
    }

    pub fn is_general_linear(&self) -> bool {
        matches!(self.kind, GroupKind::GeneralLinear(_))
    }

    /// Group membership of an `n × n` matrix.
    pub fn contains(&self, g: &Matrix) -> bool {
        let n = self.n();
        if g.rows() != n || g.cols() != n {
            return false;
        }
        match &self.kind {
            GroupKind::GeneralLinear(_) => g.is_invertible(),
            GroupKind::SpecialLinear(_) => g.det().is_one(),
            GroupKind::FormStabilizer(_, b) => g.is_invertible() && &(&g.transpose() * b) * g == *b,
        }
    }

    /// Membership in the Lie algebra (the linearized defining equations).
    pub fn lie_contains(&self, x: &Matrix) -> bool {
        let n = self.n();
        if x.rows() != n || x.cols() != n {
            return false;
        }
        match &self.kind {
            GroupKind::GeneralLinear(_) => true,
            GroupKind::SpecialLinear(_) => x.trace().is_zero(),
            GroupKind::FormStabilizer(_, b) => (&(&x.transpose() * b) + &(b * x)).is_zero(),
        }
    }

    pub fn lie_algebra(&self) -> LieSubspace {
        super::lie::lie_algebra_basis(self)
    }
}

/// A matrix known to lie in a given group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    matrix: Matrix,
}

impl GroupElement {
    pub fn new(group: &GroupSpec, matrix: Matrix) -> Result<Self> {
        if !group.contains(&matrix) {
            return Err(Error::VerificationFailed("matrix is not in the group".into()));
        }
        Ok(GroupElement { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        let q = Field::rationals();
        let g = Matrix::from_ints(&q, &[&[2, 1], &[1, 1]]);
        assert!(GroupSpec::gl(&q, 2).contains(&g));
        assert!(GroupSpec::sl(&q, 2).contains(&g));
        let d = Matrix::from_ints(&q, &[&[2, 0], &[0, 1]]);
        assert!(!GroupSpec::sl(&q, 2).contains(&d));
        let b = Matrix::from_ints(&q, &[&[0, 1], &[-1, 0]]);
        let sp = GroupSpec::new(GroupKind::FormStabilizer(2, b), &q).unwrap();
        assert!(sp.contains(&g));
        assert!(!sp.contains(&d));
        let bad = Matrix::from_ints(&q, &[&[1, 1], &[0, 1]]);
        assert!(GroupSpec::new(GroupKind::FormStabilizer(2, bad), &q).is_err());
    }
}
