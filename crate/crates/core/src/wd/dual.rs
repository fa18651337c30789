use std::ops::{Add, Mul, Sub};

use crate::exactfield::FieldElement;
use crate::linalg::Matrix;

/// A matrix over `K[ε]/(ε^order)`, stored by its coefficients `M₀ + εM₁ + …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMatrix {
    coeffs: Vec<Matrix>,
}

impl DualMatrix {
    pub fn constant(m: &Matrix, order: usize) -> Self {
        let zero = Matrix::zeros(m.field(), m.rows(), m.cols());
        let mut coeffs = vec![zero; order];
        coeffs[0] = m.clone();
        DualMatrix { coeffs }
    }

    /// `Σ εⁱ terms[i]`, padded with zeros up to `order`.
    pub fn from_terms(terms: &[Matrix], order: usize) -> Self {
        let mut d = Self::constant(&terms[0], order);
        for (i, t) in terms.iter().enumerate().skip(1).take(order - 1) {
            d.coeffs[i] = t.clone();
        }
        d
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &Matrix {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        DualMatrix { coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect() }
    }

    pub fn transpose(&self) -> Self {
        DualMatrix { coeffs: self.coeffs.iter().map(|c| c.transpose()).collect() }
    }

    /// Inverse, provided the constant term is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].inverse()?;
        let order = self.order();
        // (M₀(1 + X))⁻¹ = Σ (−X)^j M₀⁻¹ with X = M₀⁻¹(M − M₀)
        let mut x = self.clone();
        x.coeffs[0] = Matrix::zeros(inv0.field(), inv0.rows(), inv0.cols());
        let x = &DualMatrix::constant(&inv0, order) * &x;
        let neg_x = x.scale(&-inv0.field().one());
        let id = Matrix::identity(inv0.field(), inv0.rows());
        let mut acc = DualMatrix::constant(&id, order);
        let mut power = acc.clone();
        for _ in 1..order {
            power = &power * &neg_x;
            acc = &acc + &power;
        }
        Some(&acc * &DualMatrix::constant(&inv0, order))
    }

    /// `exp(X)` for `X` with zero constant term.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs an ε-divisible argument");
        let k = self.coeffs[0].field();
        let order = self.order();
        let id = Matrix::identity(k, self.coeffs[0].rows());
        let mut acc = DualMatrix::constant(&id, order);
        let mut term = acc.clone();
        for j in 1..order {
            term = (&term * self).scale(&k.from_int(j as i64).inv().unwrap());
            acc = &acc + &term;
        }
        acc
    }

    /// `M N M⁻¹`
    pub fn conjugate(&self, other: &DualMatrix) -> Option<DualMatrix> {
        Some(&(self * other) * &self.inverse()?)
    }

    pub fn pow(&self, e: usize) -> Self {
        let id = Matrix::identity(self.coeffs[0].field(), self.coeffs[0].rows());
        (0..e).fold(DualMatrix::constant(&id, self.order()), |acc, _| &acc * self)
    }
}

impl Add for &DualMatrix {
    type Output = DualMatrix;
    fn add(self, rhs: &DualMatrix) -> DualMatrix {
        DualMatrix { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &DualMatrix {
    type Output = DualMatrix;
    fn sub(self, rhs: &DualMatrix) -> DualMatrix {
        DualMatrix { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &DualMatrix {
    type Output = DualMatrix;
    fn mul(self, rhs: &DualMatrix) -> DualMatrix {
        let order = self.order().min(rhs.order());
        let k = self.coeffs[0].field();
        let mut coeffs = vec![Matrix::zeros(k, self.coeffs[0].rows(), rhs.coeffs[0].cols()); order];
        for i in 0..order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..order - i {
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        DualMatrix { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;

    #[test]
    fn inverse_and_exp() {
        let k = Field::rationals();
        let m0 = Matrix::from_ints(&k, &[&[2, 1], &[1, 1]]);
        let m1 = Matrix::from_ints(&k, &[&[0, 3], &[-1, 2]]);
        let m2 = Matrix::from_ints(&k, &[&[1, 0], &[5, 0]]);
        let d = DualMatrix::from_terms(&[m0, m1, m2], 3);
        let inv = d.inverse().unwrap();
        let id = DualMatrix::constant(&Matrix::identity(&k, 2), 3);
        assert_eq!(&d * &inv, id);
        let x = DualMatrix::from_terms(&[Matrix::zeros(&k, 2, 2), Matrix::unit(&k, 2, 0, 1), Matrix::unit(&k, 2, 1, 0)], 3);
        let ex = x.exp();
        let neg = x.scale(&k.from_int(-1)).exp();
        assert_eq!(&ex * &neg, id);
    }
}
