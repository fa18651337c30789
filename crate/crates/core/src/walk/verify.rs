use crate::exactfield::FieldElement;
use crate::linalg::Matrix;
use crate::matgroup::exp_nilpotent;
use crate::sl2::Cocharacter;
use crate::wd::{validate_triple, Fiber, WDTriple};

use super::certificate::{MoveFamily, WalkCertificate, WalkMove};

/// Verdict of [`verify_certificate`]: the number of checks passed and the first
/// failure, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub checks: usize,
    pub failure: Option<String>,
}

struct Checker {
    checks: usize,
}

impl Checker {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
        if ok {
            self.checks += 1;
            Ok(())
        } else {
            Err(what())
        }
    }
}

/// Re-checks a certificate from scratch.
///
/// Each family's relation residuals `Φ(t)N − q⁻¹NΦ(t)` and `Φ(t)τ(γ) − τ(σγ)Φ(t)`
/// are (Laurent) polynomials in `t` of a degree read off the witnesses; they are
/// evaluated at one more nonzero point than that degree, which proves that they
/// vanish identically.
pub fn verify_certificate(c: &WalkCertificate) -> VerificationReport {
    let mut checker = Checker { checks: 0 };
    let result = run(c, &mut checker);
    VerificationReport { valid: result.is_ok(), checks: checker.checks, failure: result.err() }
}

fn run(c: &WalkCertificate, ck: &mut Checker) -> Result<(), String> {
    let initial = &c.initial;
    let violations = validate_triple(initial);
    ck.require(violations.is_empty(), || format!("initial triple invalid: {violations:?}"))?;
    let mut previous = initial.phi.clone();
    for (i, mv) in c.moves.iter().enumerate() {
        ck.require(mv.start == previous, || format!("move {i} does not start where the previous one ended"))?;
        check_move(initial, mv, ck).map_err(|e| format!("move {i} ({}): {e}", mv.family.kind()))?;
        previous = mv.end.clone();
    }
    ck.require(c.final_phi == previous, || "final Phi is not the end of the last move".into())?;
    let last = initial.with_phi(c.final_phi.clone());
    let violations = validate_triple(&last);
    ck.require(violations.is_empty(), || format!("final triple invalid: {violations:?}"))?;
    let fiber = Fiber::new(initial).map_err(|e| e.to_string())?;
    let report = fiber.cohomology(&c.final_phi).map_err(|e| e.to_string())?;
    ck.require(report.h2 == 0, || format!("final point is obstructed (h2 = {})", report.h2))?;
    ck.require(
        (report.gamma, report.h0, report.h1, report.h2)
            == (c.final_report.gamma, c.final_report.h0, c.final_report.h1, c.final_report.h2),
        || "final cohomology report does not match".into(),
    )?;
    Ok(())
}

fn check_cocharacter(l: &Cocharacter, n: usize) -> Result<(), String> {
    let ps = l.projectors();
    if ps.is_empty() || ps.len() != l.weights().len() {
        return Err("cocharacter has no projectors".into());
    }
    let k = ps[0].field();
    let mut sum = Matrix::zeros(k, n, n);
    for (i, p) in ps.iter().enumerate() {
        if p.rows() != n || p.cols() != n || &(p * p) != p {
            return Err("projector is not an idempotent".into());
        }
        if ps[i + 1..].iter().any(|q| !(p * q).is_zero() || !(q * p).is_zero()) {
            return Err("projectors are not orthogonal".into());
        }
        if l.weights()[i + 1..].contains(&l.weights()[i]) {
            return Err("repeated weight".into());
        }
        sum = &sum + p;
    }
    if !sum.is_identity() {
        return Err("projectors do not sum to the identity".into());
    }
    Ok(())
}

fn lambda_at(l: &Cocharacter, t: &FieldElement) -> Matrix {
    let p0 = &l.projectors()[0];
    let n = p0.rows();
    l.weights()
        .iter()
        .zip(l.projectors())
        .fold(Matrix::zeros(p0.field(), n, n), |acc, (w, p)| &acc + &p.scale(&t.pow(*w)))
}

fn weight_span(l: &Cocharacter) -> usize {
    let w = l.weights();
    (w.iter().max().unwrap() - w.iter().min().unwrap()) as usize
}

/// Evaluates the family and returns the degree bound of its residuals.
fn family(mv: &WalkMove, n: usize) -> Result<(Box<dyn Fn(&FieldElement) -> Matrix + '_>, usize), String> {
    let square = |m: &Matrix| m.rows() == n && m.cols() == n;
    match &mv.family {
        MoveFamily::UnipotentLine { left, log, right } => {
            if !square(left) || !square(log) || !square(right) {
                return Err("witness has the wrong shape".into());
            }
            if !left.is_invertible() || !right.is_invertible() {
                return Err("outer factors are not invertible".into());
            }
            if !log.is_nilpotent() {
                return Err("Y is not nilpotent".into());
            }
            let mut index = 0;
            let mut power = Matrix::identity(log.field(), n);
            while !power.is_zero() {
                power = &power * log;
                index += 1;
            }
            let degree = index.max(1) - 1;
            let f = move |t: &FieldElement| {
                let e = exp_nilpotent(&log.scale(t)).expect("nilpotent");
                &(left * &e) * right
            };
            Ok((Box::new(f), degree))
        }
        MoveFamily::CocharScale { base, cocharacter } => {
            if !square(base) || !base.is_invertible() {
                return Err("base is not invertible".into());
            }
            check_cocharacter(cocharacter, n)?;
            if mv.from.is_zero() || mv.to.is_zero() {
                return Err("parameter must be nonzero".into());
            }
            let f = move |t: &FieldElement| base * &lambda_at(cocharacter, t);
            Ok((Box::new(f), weight_span(cocharacter)))
        }
        MoveFamily::CocharInterpolation { base, lambda, lambda_prime, shift } => {
            if !square(base) || !base.is_invertible() {
                return Err("base is not invertible".into());
            }
            check_cocharacter(lambda, n)?;
            check_cocharacter(lambda_prime, n)?;
            if shift.is_zero() || mv.from.is_zero() || mv.to.is_zero() {
                return Err("parameter and shift must be nonzero".into());
            }
            let f = move |t: &FieldElement| {
                let inv = t.inv().expect("nonzero");
                &(base * &lambda_at(lambda, &(shift * t))) * &lambda_at(lambda_prime, &inv)
            };
            Ok((Box::new(f), weight_span(lambda) + weight_span(lambda_prime)))
        }
    }
}

fn check_move(d: &WDTriple, mv: &WalkMove, ck: &mut Checker) -> Result<(), String> {
    let n = d.n();
    let k = d.group.field();
    let (f, degree) = family(mv, n)?;
    ck.checks += 1;
    ck.require(f(&mv.from) == mv.start, || "family does not pass through start".into())?;
    ck.require(f(&mv.to) == mv.end, || "family does not pass through end".into())?;
    let q_inv = d.q.inv().ok_or("q is zero")?;
    let els = d.inertial.elements();
    for s in 1..=(degree as i64 + 1) {
        let t = k.from_int(s);
        let phi = f(&t);
        let r1 = &(&phi * &d.nilpotent) - &(&d.nilpotent * &phi).scale(&q_inv);
        ck.require(r1.is_zero(), || format!("condition 2 residual nonzero at t = {s}"))?;
        for (i, e) in els.iter().enumerate() {
            let target = &els[d.inertial.sigma(i)].matrix;
            let r3 = &(&phi * &e.matrix) - &(target * &phi);
            ck.require(r3.is_zero(), || format!("condition 3 residual nonzero at t = {s} for {}", e.label))?;
        }
    }
    let end = d.with_phi(mv.end.clone());
    let v = validate_triple(&end);
    ck.require(v.is_empty(), || format!("end point invalid: {v:?}"))?;
    Ok(())
}
