use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::matgroup::GroupKind;

use super::complex::Fiber;
use super::dual::DualMatrix;
use super::triple::WDTriple;

/// `ker d¹`: first-order deformations `(a, b)` of `(Φ, N)` with `τ` fixed.
#[derive(Clone, Debug)]
pub struct LiftSpace {
    pub dimension: usize,
    pub basis: Vec<(Matrix, Matrix)>,
}

/// Outcome of trying to extend a first-order lift to `K[ε]/(ε³)`.
#[derive(Clone, Debug)]
pub enum SecondOrder {
    /// `Φ″ = exp(εa + ε²a₂)Φ`, `N″ = N + εb + ε²b₂` satisfies every condition mod `ε³`.
    Extended { a2: Matrix, b2: Matrix },
    /// The `ε²` equation `d¹(a₂, b₂) = residual` has no solution.
    Obstructed { residual: Matrix },
}

/// Checks conditions (1)–(3), group membership and nilpotence for
/// `(exp(X)Φ, N′, τ)` with `X` divisible by `ε`.
fn dual_conditions_hold(d: &WDTriple, x: &DualMatrix, n_dual: &DualMatrix) -> bool {
    let order = x.order();
    let phi = &x.exp() * &DualMatrix::constant(&d.phi, order);
    let in_group = match d.group.kind() {
        GroupKind::GeneralLinear(_) => true,
        // det exp(X) = exp(tr X)
        GroupKind::SpecialLinear(_) => (0..order).all(|i| x.coeff(i).trace().is_zero()),
        GroupKind::FormStabilizer(_, b) => {
            let bd = DualMatrix::constant(b, order);
            &(&phi.transpose() * &bd) * &phi == bd
        }
    };
    if !in_group || !(0..order).all(|i| d.group.lie_contains(n_dual.coeff(i))) {
        return false;
    }
    if !n_dual.pow(d.n()).is_zero() {
        return false;
    }
    let Some(phi_inv) = phi.inverse() else { return false };
    let q_inv = d.q.inv().unwrap();
    if &(&phi * n_dual) * &phi_inv != n_dual.scale(&q_inv) {
        return false;
    }
    let elements = d.inertial.elements();
    elements.iter().enumerate().all(|(i, e)| {
        let t = DualMatrix::constant(&e.matrix, order);
        let t_inv = DualMatrix::constant(&e.matrix.inverse().unwrap(), order);
        let target = DualMatrix::constant(&elements[d.inertial.sigma(i)].matrix, order);
        &(&t * n_dual) * &t_inv == *n_dual && &(&phi * &t) * &phi_inv == target
    })
}

/// Whether `(exp(εa)Φ, N + εb, τ)` is a triple over `K[ε]/(ε²)`.
pub fn is_first_order_lift(d: &WDTriple, a: &Matrix, b: &Matrix) -> bool {
    let k = d.group.field();
    let n = d.n();
    let zero = Matrix::zeros(k, n, n);
    let x = DualMatrix::from_terms(&[zero, a.clone()], 2);
    let nd = DualMatrix::from_terms(&[d.nilpotent.clone(), b.clone()], 2);
    dual_conditions_hold(d, &x, &nd)
}

/// Whether `(exp(εa + ε²a₂)Φ, N + εb + ε²b₂, τ)` is a triple over `K[ε]/(ε³)`.
pub fn is_second_order_lift(d: &WDTriple, a: &Matrix, b: &Matrix, a2: &Matrix, b2: &Matrix) -> bool {
    let k = d.group.field();
    let n = d.n();
    let zero = Matrix::zeros(k, n, n);
    let x = DualMatrix::from_terms(&[zero, a.clone(), a2.clone()], 3);
    let nd = DualMatrix::from_terms(&[d.nilpotent.clone(), b.clone(), b2.clone()], 3);
    dual_conditions_hold(d, &x, &nd)
}

/// A basis of `ker d¹`, each member checked as a dual-number lift.
pub fn first_order_lifts(d: &WDTriple) -> Result<LiftSpace> {
    d.validate()?;
    let fiber = Fiber::new(d)?;
    let (_, d1) = fiber.differentials(&d.phi)?;
    let g = fiber.gamma();
    let inv = fiber.invariant();
    let mut basis = Vec::new();
    for v in d1.kernel() {
        let a = inv.element(&v[..g]);
        let b = inv.element(&v[g..]);
        if !is_first_order_lift(d, &a, &b) {
            return Err(Error::VerificationFailed("kernel vector of d1 fails the dual-number check".into()));
        }
        basis.push((a, b));
    }
    Ok(LiftSpace { dimension: basis.len(), basis })
}

/// Solves the `ε²` equations for a first-order lift `(a, b)`.
pub fn second_order_extend(d: &WDTriple, a: &Matrix, b: &Matrix) -> Result<SecondOrder> {
    d.validate()?;
    let fiber = Fiber::new(d)?;
    let inv = fiber.invariant();
    let (Some(ca), Some(cb)) = (inv.coordinates(a), inv.coordinates(b)) else {
        return Err(Error::NotACocycle);
    };
    let (_, d1) = fiber.differentials(&d.phi)?;
    let mut ab = ca;
    ab.extend(cb);
    if !crate::linalg::is_zero_vector(&d1.mul_vec(&ab)) {
        return Err(Error::NotACocycle);
    }
    // ε² coefficient of Ad(Φ″)N″ − q⁻¹N″ with zero corrections
    let k = d.group.field();
    let n = d.n();
    let zero = Matrix::zeros(k, n, n);
    let x = DualMatrix::from_terms(&[zero.clone(), a.clone(), zero.clone()], 3);
    let nd = DualMatrix::from_terms(&[d.nilpotent.clone(), b.clone(), zero], 3);
    let phi = &x.exp() * &DualMatrix::constant(&d.phi, 3);
    let lhs = &(&phi * &nd) * &phi.inverse().ok_or(Error::Singular)?;
    let q_inv = d.q.inv().unwrap();
    let residual = (lhs.coeff(2) - &nd.coeff(2).scale(&q_inv)).scale(&d.q);
    let Some(target) = inv.coordinates(&residual) else {
        return Err(Error::VerificationFailed("second-order residual left the invariant subalgebra".into()));
    };
    let Some(sol) = d1.solve(&target) else {
        return Ok(SecondOrder::Obstructed { residual });
    };
    let g = fiber.gamma();
    let a2 = inv.element(&sol[..g]);
    let b2 = inv.element(&sol[g..]);
    if !is_second_order_lift(d, a, b, &a2, &b2) {
        return Err(Error::VerificationFailed("second-order correction fails the ε³ check".into()));
    }
    Ok(SecondOrder::Extended { a2, b2 })
}

/// The order `n` of `σ`, with `Φⁿ` checked to centralize `τ`.
pub fn frobenius_exponent(d: &WDTriple) -> Result<usize> {
    let n = d.inertial.sigma_order();
    let power = d.phi.pow(n);
    let inv = power.inverse().ok_or(Error::Singular)?;
    for e in d.inertial.elements() {
        if &(&power * &e.matrix) * &inv != e.matrix {
            return Err(Error::VerificationFailed(format!("Phi^{n} does not centralize tau({})", e.label)));
        }
    }
    Ok(n)
}
