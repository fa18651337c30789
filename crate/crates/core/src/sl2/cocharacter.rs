use crate::error::{Error, Result};
use crate::exactfield::{projector_with_minpoly, roots_in_field, Field, FieldElement};
use crate::linalg::Matrix;

use super::triple::SL2Triple;

/// A one-parameter subgroup `λ(t) = Σ t^w P_w` given by distinct integer weights
/// and complementary idempotents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocharacter {
    weights: Vec<i64>,
    projectors: Vec<Matrix>,
}

impl Cocharacter {
    /// Checks that the projectors are orthogonal idempotents summing to the identity.
    pub fn new(weights: Vec<i64>, projectors: Vec<Matrix>) -> Result<Self> {
        if weights.len() != projectors.len() || projectors.is_empty() {
            return Err(Error::Dimension("weights and projectors must pair up".into()));
        }
        let k = projectors[0].field().clone();
        let n = projectors[0].rows();
        let mut sum = Matrix::zeros(&k, n, n);
        for (i, p) in projectors.iter().enumerate() {
            if p.rows() != n || p.cols() != n || &(p * p) != p {
                return Err(Error::VerificationFailed("projector is not idempotent".into()));
            }
            for q in &projectors[i + 1..] {
                if !(p * q).is_zero() {
                    return Err(Error::VerificationFailed("projectors are not orthogonal".into()));
                }
            }
            sum = &sum + p;
        }
        if !sum.is_identity() {
            return Err(Error::VerificationFailed("projectors do not sum to the identity".into()));
        }
        let mut sorted = weights.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != weights.len() {
            return Err(Error::VerificationFailed("weights must be distinct".into()));
        }
        let mut pairs: Vec<(i64, Matrix)> = weights.into_iter().zip(projectors).collect();
        pairs.sort_by_key(|(w, _)| *w);
        let (weights, projectors) = pairs.into_iter().unzip();
        Ok(Cocharacter { weights, projectors })
    }

    /// Skips every check; for data read back from a certificate, whose checker
    /// validates the parts itself.
    pub fn from_parts_unchecked(weights: Vec<i64>, projectors: Vec<Matrix>) -> Self {
        Cocharacter { weights, projectors }
    }

    pub fn trivial(field: &Field, n: usize) -> Self {
        Cocharacter { weights: vec![0], projectors: vec![Matrix::identity(field, n)] }
    }

    /// The cocharacter with grading element `h`, which must be semisimple with
    /// integer eigenvalues in the base field.
    pub fn from_grading_element(h: &Matrix) -> Result<Self> {
        let mu = h.minimal_polynomial();
        let roots = roots_in_field(&mu)?;
        if !mu.is_squarefree() || roots.len() != mu.degree().unwrap_or(0) {
            return Err(Error::NonIntegralWeights);
        }
        let mut weights = Vec::new();
        let mut projectors = Vec::new();
        for (r, _) in roots {
            let w = integer_value(&r).ok_or(Error::NonIntegralWeights)?;
            projectors.push(projector_with_minpoly(h, &mu, &r)?);
            weights.push(w);
        }
        Cocharacter::new(weights, projectors)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn projectors(&self) -> &[Matrix] {
        &self.projectors
    }

    pub fn n(&self) -> usize {
        self.projectors[0].rows()
    }

    pub fn field(&self) -> &Field {
        self.projectors[0].field()
    }

    pub fn is_trivial(&self) -> bool {
        self.weights == [0]
    }

    /// `h = Σ w P_w`
    pub fn grading_element(&self) -> Matrix {
        let k = self.field();
        let n = self.n();
        self.weights
            .iter()
            .zip(&self.projectors)
            .fold(Matrix::zeros(k, n, n), |acc, (w, p)| &acc + &p.scale(&k.from_int(*w)))
    }

    /// `λ(t) = Σ t^w P_w` for `t ≠ 0`.
    pub fn eval(&self, t: &FieldElement) -> Matrix {
        let k = self.field();
        let n = self.n();
        self.weights
            .iter()
            .zip(&self.projectors)
            .fold(Matrix::zeros(k, n, n), |acc, (w, p)| &acc + &p.scale(&t.pow(*w)))
    }

    pub fn min_weight(&self) -> i64 {
        self.weights[0]
    }

    pub fn max_weight(&self) -> i64 {
        *self.weights.last().unwrap()
    }
}

fn integer_value(x: &FieldElement) -> Option<i64> {
    use num_traits::ToPrimitive;
    let r = x.to_rational()?;
    if !r.is_integer() {
        return None;
    }
    r.to_integer().to_i64()
}

/// The cocharacter exponentiating the `h` of an sl₂-triple; `Ad λ(t) e = t² e`.
pub fn adapted_cocharacter(triple: &SL2Triple) -> Result<Cocharacter> {
    Cocharacter::from_grading_element(&triple.h)
}

/// A cocharacter with the eigenspace projectors of the semisimple `s` and one
/// distinct weight per eigenvalue, so that `Ad λ(t)` and `Ad s` fix the same
/// matrices.
///
/// Eigenvalues are taken in ascending order. When `1` is an eigenvalue it gets
/// weight 0 and the others get `1, 2, …`; otherwise the eigenvalues get `0, 1, …`.
pub fn eigenweight_cocharacter(s: &Matrix) -> Result<Cocharacter> {
    let mu = s.minimal_polynomial();
    if !mu.is_squarefree() {
        return Err(Error::NotSemisimple);
    }
    let roots = roots_in_field(&mu)?;
    if roots.len() != mu.degree().unwrap_or(0) {
        return Err(Error::InsufficientField(format!("eigenvalues of a root of {mu} are not in the field")));
    }
    let one = s.field().one();
    let has_one = roots.iter().any(|(r, _)| r == &one);
    let mut next = if has_one { 1 } else { 0 };
    let mut weights = Vec::new();
    let mut projectors = Vec::new();
    for (r, _) in roots {
        if r == one {
            weights.push(0);
        } else {
            weights.push(next);
            next += 1;
        }
        projectors.push(projector_with_minpoly(s, &mu, &r)?);
    }
    Cocharacter::new(weights, projectors)
}
