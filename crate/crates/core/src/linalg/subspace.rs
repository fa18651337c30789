use crate::exactfield::{Field, FieldElement};

use super::{is_zero_vector, Matrix, Vector};

/// A subspace of `K^m` with a fixed basis and a precomputed coordinate solver.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
    // RREF rows `R = T·B` (B has the basis as rows), with pivot columns.
    reduced: Vec<Vector>,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Self::from_basis(field, ambient, Vec::new())
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        let id = Matrix::identity(field, ambient);
        Self::from_basis(field, ambient, id.to_rows())
    }

    /// Keeps the given vectors when they are independent, otherwise an
    /// independent subset spanning the same space.
    pub fn from_spanning(field: &Field, ambient: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_columns(field, ambient, &vectors);
        let pivots = m.echelon().pivots;
        if pivots.len() == vectors.len() {
            return Self::from_basis(field, ambient, vectors);
        }
        let basis = pivots.into_iter().map(|p| vectors[p].clone()).collect();
        Self::from_basis(field, ambient, basis)
    }

    /// Panics if `basis` is dependent.
    pub fn from_basis(field: &Field, ambient: usize, basis: Vec<Vector>) -> Self {
        let k = basis.len();
        if k == 0 {
            return Subspace {
                field: field.clone(),
                ambient,
                basis,
                reduced: Vec::new(),
                pivots: Vec::new(),
                transform: Matrix::zeros(field, 0, 0),
            };
        }
        let b = Matrix::from_rows(field, basis.clone());
        let aug = b.hstack(&Matrix::identity(field, k));
        let ech = aug.echelon();
        let pivots: Vec<usize> = ech.pivots.iter().copied().filter(|&p| p < ambient).collect();
        assert_eq!(pivots.len(), k, "basis vectors are linearly dependent");
        let reduced = (0..k)
            .map(|i| (0..ambient).map(|j| ech.reduced.get(i, j).clone()).collect())
            .collect();
        let transform = Matrix::from_fn(field, k, k, |i, j| ech.reduced.get(i, ambient + j).clone());
        Subspace { field: field.clone(), ambient, basis, reduced, pivots, transform }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Coordinates of `v` in the stored basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[FieldElement]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (ci, row) in c.iter().zip(&self.reduced) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in residual.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(ci * y);
                }
            }
        }
        if !is_zero_vector(&residual) {
            return None;
        }
        // v = cᵀR = cᵀT B
        Some(self.transform.transpose().mul_vec(&c))
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    /// Vector with the given coordinates.
    pub fn combine(&self, coords: &[FieldElement]) -> Vector {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(b) {
                *x = &*x + &(c * y);
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::from_spanning(&self.field, self.ambient, v)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(&self.field, self.ambient);
        }
        let a = Matrix::from_columns(&self.field, self.ambient, &self.basis);
        let b = Matrix::from_columns(&self.field, self.ambient, &other.basis);
        let ker = a.hstack(&-&b).kernel();
        let k = self.dim();
        let vectors = ker.iter().map(|z| self.combine(&z[..k])).collect();
        Self::from_spanning(&self.field, self.ambient, vectors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_round_trip() {
        let k = Field::rationals();
        let v = |x: &[i64]| x.iter().map(|&c| k.from_int(c)).collect::<Vec<_>>();
        let s = Subspace::from_basis(&k, 3, vec![v(&[1, 1, 0]), v(&[0, 2, 1])]);
        let w = v(&[3, 7, 2]);
        let c = s.coordinates(&w).unwrap();
        assert_eq!(c, v(&[3, 2]));
        assert_eq!(s.combine(&c), w);
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn intersection_of_planes() {
        let k = Field::rationals();
        let v = |x: &[i64]| x.iter().map(|&c| k.from_int(c)).collect::<Vec<_>>();
        let a = Subspace::from_basis(&k, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::from_basis(&k, 3, vec![v(&[1, 1, 1]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&v(&[1, 1, 0])));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
