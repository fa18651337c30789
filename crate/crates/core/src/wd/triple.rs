use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{Embedding, FieldElement};
use crate::linalg::Matrix;
use crate::matgroup::{GroupKind, GroupSpec};

use super::inertial::InertialData;

/// A Weil–Deligne triple together with its ambient data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDTriple {
    pub group: GroupSpec,
    pub phi: Matrix,
    pub nilpotent: Matrix,
    pub inertial: InertialData,
    pub q: FieldElement,
    pub sqrt_q: FieldElement,
}

/// One failed check of [`validate_triple`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A matrix has the wrong shape or lives over the wrong field.
    Shape(String),
    /// `q` is not an integer at least 2.
    BadQ(String),
    /// `sqrt_q² ≠ q`.
    SqrtQ,
    PhiNotInGroup,
    TauNotInGroup { label: String },
    NotInLieAlgebra,
    NotNilpotent,
    /// `Ad(τ(γ))N ≠ N`
    Condition1 { label: String },
    /// `Ad(Φ)N ≠ q⁻¹N`, with the residual `ΦNΦ⁻¹ − q⁻¹N`.
    Condition2 { residual: Matrix },
    /// `Ad(Φ)τ(γ) ≠ τ(σγ)`
    Condition3 { label: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(s) => write!(f, "shape: {s}"),
            Violation::BadQ(s) => write!(f, "q must be an integer >= 2 (got {s})"),
            Violation::SqrtQ => write!(f, "sqrt_q squared is not q"),
            Violation::PhiNotInGroup => write!(f, "Phi is not in the group"),
            Violation::TauNotInGroup { label } => write!(f, "tau({label}) is not in the group"),
            Violation::NotInLieAlgebra => write!(f, "N is not in the Lie algebra"),
            Violation::NotNilpotent => write!(f, "N is not nilpotent"),
            Violation::Condition1 { label } => write!(f, "condition 1: Ad(tau({label}))N != N"),
            Violation::Condition2 { residual } => {
                write!(f, "condition 2: Ad(Phi)N != N/q (residual {residual:?})")
            }
            Violation::Condition3 { label } => {
                write!(f, "condition 3: Ad(Phi)tau({label}) != tau(sigma({label}))")
            }
        }
    }
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Shape(_) => "Shape",
            Violation::BadQ(_) => "BadQ",
            Violation::SqrtQ => "SqrtQ",
            Violation::PhiNotInGroup => "PhiNotInGroup",
            Violation::TauNotInGroup { .. } => "TauNotInGroup",
            Violation::NotInLieAlgebra => "NotInLieAlgebra",
            Violation::NotNilpotent => "NotNilpotent",
            Violation::Condition1 { .. } => "Condition1",
            Violation::Condition2 { .. } => "Condition2",
            Violation::Condition3 { .. } => "Condition3",
        }
    }
}

/// Every violated condition; empty when the triple is valid.
pub fn validate_triple(d: &WDTriple) -> Vec<Violation> {
    let mut out = Vec::new();
    let k = d.group.field();
    let n = d.group.n();
    let shaped = |m: &Matrix| m.rows() == n && m.cols() == n && m.field() == k;
    if !shaped(&d.phi) || !shaped(&d.nilpotent) || !d.inertial.elements().iter().all(|e| shaped(&e.matrix)) {
        out.push(Violation::Shape(format!("all matrices must be {n}x{n} over the scenario field")));
        return out;
    }
    if let GroupKind::FormStabilizer(_, b) = d.group.kind() {
        if !shaped(b) {
            out.push(Violation::Shape("form has the wrong shape".into()));
            return out;
        }
    }
    if d.q.field() != k || d.sqrt_q.field() != k {
        out.push(Violation::Shape("q and sqrt_q must lie in the scenario field".into()));
        return out;
    }
    match d.q.to_rational() {
        Some(r) if r.is_integer() && r >= crate::exactfield::rat(2) => {}
        _ => out.push(Violation::BadQ(d.q.to_string())),
    }
    if &d.sqrt_q * &d.sqrt_q != d.q {
        out.push(Violation::SqrtQ);
    }
    let phi_inv = d.phi.inverse();
    if phi_inv.is_none() || !d.group.contains(&d.phi) {
        out.push(Violation::PhiNotInGroup);
    }
    for e in d.inertial.elements() {
        if !d.group.contains(&e.matrix) {
            out.push(Violation::TauNotInGroup { label: e.label.clone() });
        }
    }
    if !d.group.lie_contains(&d.nilpotent) {
        out.push(Violation::NotInLieAlgebra);
    }
    if !d.nilpotent.is_nilpotent() {
        out.push(Violation::NotNilpotent);
    }
    for e in d.inertial.elements() {
        let inv = e.matrix.inverse().expect("inertial matrices are invertible");
        if &(&e.matrix * &d.nilpotent) * &inv != d.nilpotent {
            out.push(Violation::Condition1 { label: e.label.clone() });
        }
    }
    if let (Some(phi_inv), Some(q_inv)) = (phi_inv, d.q.inv()) {
        let residual = &(&(&d.phi * &d.nilpotent) * &phi_inv) - &d.nilpotent.scale(&q_inv);
        if !residual.is_zero() {
            out.push(Violation::Condition2 { residual });
        }
        for (i, e) in d.inertial.elements().iter().enumerate() {
            let target = &d.inertial.elements()[d.inertial.sigma(i)].matrix;
            if &(&(&d.phi * &e.matrix) * &phi_inv) != target {
                out.push(Violation::Condition3 { label: e.label.clone() });
            }
        }
    }
    out
}

impl WDTriple {
    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn validate(&self) -> Result<()> {
        let v = validate_triple(self);
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidTriple(v))
        }
    }

    /// The same `(N, τ, q)` with a different Frobenius.
    pub fn with_phi(&self, phi: Matrix) -> WDTriple {
        WDTriple { phi, ..self.clone() }
    }

    /// Extension of scalars along `embedding`.
    pub fn base_change(&self, embedding: &Embedding) -> Result<WDTriple> {
        let kind = match self.group.kind() {
            GroupKind::FormStabilizer(n, b) => GroupKind::FormStabilizer(*n, embedding.apply_matrix(b)),
            other => other.clone(),
        };
        Ok(WDTriple {
            group: GroupSpec::new(kind, embedding.target())?,
            phi: embedding.apply_matrix(&self.phi),
            nilpotent: embedding.apply_matrix(&self.nilpotent),
            inertial: self.inertial.base_change(embedding),
            q: embedding.apply(&self.q),
            sqrt_q: embedding.apply(&self.sqrt_q),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;

    fn steinberg(phi: &[i64]) -> WDTriple {
        let k = Field::rationals();
        WDTriple {
            group: GroupSpec::gl(&k, 2),
            phi: Matrix::diag(&k, &phi.iter().map(|&x| k.from_int(x)).collect::<Vec<_>>()),
            nilpotent: Matrix::unit(&k, 2, 0, 1),
            inertial: InertialData::trivial(&k, 2),
            q: k.from_int(4),
            sqrt_q: k.from_int(2),
        }
    }

    #[test]
    fn steinberg_is_valid() {
        assert!(validate_triple(&steinberg(&[1, 4])).is_empty());
    }

    #[test]
    fn condition2_broken() {
        let v = validate_triple(&steinberg(&[1, 2]));
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::Condition2 { .. }));
    }

    #[test]
    fn identity_frobenius_trivial_monodromy() {
        let k = Field::rationals();
        let mut d = steinberg(&[1, 1]);
        d.nilpotent = Matrix::zeros(&k, 2, 2);
        assert!(d.validate().is_ok());
        d.sqrt_q = k.from_int(3);
        assert_eq!(validate_triple(&d), vec![Violation::SqrtQ]);
    }
}
