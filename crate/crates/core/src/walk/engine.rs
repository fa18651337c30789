use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactfield::{has_finite_order, rat, Field, FieldElement, Rational};
use crate::linalg::Matrix;
use crate::matgroup::{ad_operator, exp_nilpotent, jordan_chevalley, log_unipotent};
use crate::sl2::{
    adapted_cocharacter, commuting_sl2, eigenweight_cocharacter, jacobson_morozov, lowest_weight_split, Cocharacter,
    LowestWeightPiece,
};
use crate::wd::{frobenius_exponent, Fiber, WDTriple};

use super::certificate::{MoveFamily, WalkCertificate, WalkMove};

/// Trial parameters for the generic-`t` choices and a cap on the number of moves.
#[derive(Clone, Debug)]
pub struct WalkConfig {
    pub t_candidates: Vec<Rational>,
    pub max_steps: usize,
}

impl Default for WalkConfig {
    fn default() -> Self {
        WalkConfig { t_candidates: [2, 3, 5, 7, 11, 13].iter().map(|&t| rat(t)).collect(), max_steps: 64 }
    }
}

impl WalkConfig {
    fn candidates(&self, k: &Field) -> impl Iterator<Item = FieldElement> + '_ {
        let k = k.clone();
        self.t_candidates
            .iter()
            .filter(|t| **t != rat(0) && **t != rat(1) && **t != rat(-1))
            .map(move |t| k.from_rational(t.clone()))
    }
}

/// One accepted scaling step of the `N = 0` walk.
#[derive(Clone, Debug)]
pub struct Case1Step {
    pub nilpotent: Matrix,
    pub t: FieldElement,
    pub kernel_before: usize,
    pub kernel_after: usize,
}

/// The output of the semisimple-point construction for `N ≠ 0`.
#[derive(Clone, Debug)]
pub struct SemisimplePoint {
    pub phi: Matrix,
    /// Adapted to `N` and commuting with `phi`.
    pub lambda: Cocharacter,
    /// Adapted to `N`, from the first sl₂-triple.
    pub lambda_prime: Cocharacter,
    /// `Φ·λ′(√q)`
    pub psi: Matrix,
    pub moves: Vec<WalkMove>,
}

/// Intermediate objects of the `N ≠ 0` walk, exposed for independent checks.
#[derive(Clone, Debug)]
pub struct Case2Trace {
    pub point: SemisimplePoint,
    /// `Φ_new · λ(√q)`, which centralizes `N`.
    pub psi2: Matrix,
    pub splits: BTreeMap<i64, LowestWeightPiece>,
    pub finite_order: bool,
    /// The scaling cocharacter and accepted parameter, if a scaling move was needed.
    pub scaling: Option<(Cocharacter, FieldElement)>,
}

#[derive(Clone, Debug)]
pub enum WalkTrace {
    AlreadyUnobstructed,
    Case1(Vec<Case1Step>),
    Case2(Box<Case2Trace>),
}

#[derive(Clone, Debug)]
pub struct WalkOutcome {
    pub certificate: WalkCertificate,
    pub trace: WalkTrace,
}

fn inverse(m: &Matrix) -> Result<Matrix> {
    m.inverse().ok_or(Error::Singular)
}

fn conjugate(g: &Matrix, x: &Matrix) -> Result<Matrix> {
    Ok(&(g * x) * &inverse(g)?)
}

/// `Φ τ(γ) Φ⁻¹ = τ(σγ)` for every `γ`.
fn twists_correctly(d: &WDTriple, phi: &Matrix) -> Result<bool> {
    let els = d.inertial.elements();
    for (i, e) in els.iter().enumerate() {
        if conjugate(phi, &e.matrix)? != els[d.inertial.sigma(i)].matrix {
            return Ok(false);
        }
    }
    Ok(true)
}

fn centralizes_tau(d: &WDTriple, x: &Matrix) -> bool {
    d.inertial.elements().iter().all(|e| &e.matrix * x == x * &e.matrix)
}

fn violated(msg: impl Into<String>) -> Error {
    Error::InvariantViolated(msg.into())
}

/// Jordan–Chevalley inside the fiber of a triple with `N = 0`: returns `Φ_s` and
/// the line `Φ_s·exp(tY)`, `t: 1 → 0`, when `Φ` is not already semisimple.
pub fn semisimplify_in_fiber(d: &WDTriple) -> Result<(Matrix, Option<WalkMove>)> {
    let (phi_s, phi_u) = jordan_chevalley(&d.phi)?;
    if phi_u.is_identity() {
        return Ok((phi_s, None));
    }
    let n = frobenius_exponent(d)?;
    if !centralizes_tau(d, &phi_u.pow(n)) {
        return Err(violated("Phi_u^n does not centralize tau"));
    }
    let y = log_unipotent(&phi_u)?;
    if !centralizes_tau(d, &y) {
        return Err(violated("log Phi_u does not centralize tau"));
    }
    let k = d.group.field();
    let mv = WalkMove {
        family: MoveFamily::UnipotentLine { left: phi_s.clone(), log: y, right: Matrix::identity(k, d.n()) },
        from: k.one(),
        to: k.zero(),
        start: d.phi.clone(),
        end: phi_s.clone(),
    };
    Ok((phi_s, Some(mv)))
}

fn require_gl(d: &WDTriple) -> Result<()> {
    if d.group.is_general_linear() {
        Ok(())
    } else {
        Err(Error::UnsupportedGroupKind)
    }
}

fn finish(d: &WDTriple, fiber: &Fiber, moves: Vec<WalkMove>, trace: WalkTrace, config: &WalkConfig) -> Result<WalkOutcome> {
    if moves.len() > config.max_steps {
        return Err(Error::StepLimitExceeded(config.max_steps));
    }
    let final_phi = moves.last().map_or(d.phi.clone(), |m| m.end.clone());
    let final_report = fiber.cohomology(&final_phi)?.without_differentials();
    if final_report.h2 != 0 {
        return Err(violated("walk ended at an obstructed point"));
    }
    Ok(WalkOutcome { certificate: WalkCertificate { initial: d.clone(), moves, final_phi, final_report }, trace })
}

/// The walk for `N = 0`: semisimplify, then repeatedly scale by a cocharacter
/// adapted to a nilpotent in `ker(q AdΦ − 1)` until that kernel vanishes.
pub fn case1_walk(d: &WDTriple, config: &WalkConfig) -> Result<WalkOutcome> {
    require_gl(d)?;
    d.validate()?;
    if !d.nilpotent.is_zero() {
        return Err(Error::WrongCase("the N = 0 walk needs N = 0".into()));
    }
    let fiber = Fiber::new(d)?;
    let k = d.group.field().clone();
    let q_inv = d.q.inv().unwrap();
    let mut moves = Vec::new();
    let mut steps = Vec::new();
    let mut current = d.phi.clone();
    loop {
        if fiber.bad_kernel_dim(&current)? == 0 {
            break;
        }
        if moves.len() >= config.max_steps {
            return Err(Error::StepLimitExceeded(config.max_steps));
        }
        let (phi_s, mv) = semisimplify_in_fiber(&fiber.triple(&current))?;
        moves.extend(mv);
        let bad = fiber.q_ad_phi_minus_one(&phi_s)?;
        let kernel = bad.kernel();
        let kernel_before = kernel.len();
        if kernel_before == 0 {
            // semisimplification alone cleared the kernel
            current = phi_s;
            continue;
        }
        let n_prime = fiber.invariant().element(&kernel[0]);
        if !n_prime.is_nilpotent() {
            return Err(violated("kernel vector of q AdPhi - 1 is not nilpotent"));
        }
        let triple = commuting_sl2(&n_prime, &phi_s, &q_inv, fiber.invariant())?;
        let lambda = adapted_cocharacter(&triple)?;
        let mut accepted = None;
        let mut trials = 0;
        for t in config.candidates(&k) {
            trials += 1;
            let candidate = &phi_s * &lambda.eval(&t);
            let after = fiber.bad_kernel_dim(&candidate)?;
            if after < kernel_before {
                accepted = Some((t, candidate, after));
                break;
            }
        }
        let Some((t, next, kernel_after)) = accepted else {
            return Err(Error::TrialExhausted(trials));
        };
        if moves.len() >= config.max_steps {
            return Err(Error::StepLimitExceeded(config.max_steps));
        }
        moves.push(WalkMove {
            family: MoveFamily::CocharScale { base: phi_s.clone(), cocharacter: lambda },
            from: k.one(),
            to: t.clone(),
            start: phi_s,
            end: next.clone(),
        });
        steps.push(Case1Step { nilpotent: n_prime, t, kernel_before, kernel_after });
        current = next;
    }
    finish(d, &fiber, moves, WalkTrace::Case1(steps), config)
}

/// A semisimple point of the fiber of a triple with `N ≠ 0`, reached from `Φ` by
/// a unipotent line and a cocharacter interpolation, together with a cocharacter
/// adapted to `N` that commutes with it.
pub fn fiber_semisimple_point(d: &WDTriple) -> Result<SemisimplePoint> {
    require_gl(d)?;
    let fiber = Fiber::new(d)?;
    semisimple_point(d, &fiber)
}

fn semisimple_point(d: &WDTriple, fiber: &Fiber) -> Result<SemisimplePoint> {
    let k = d.group.field().clone();
    let nil = &d.nilpotent;
    let inv = fiber.invariant();
    let root = d.sqrt_q.clone();
    let root_inv = root.inv().ok_or_else(|| Error::InsufficientField("sqrt_q is zero".into()))?;

    let lambda_prime = adapted_cocharacter(&jacobson_morozov(nil, inv)?)?;
    let psi = &d.phi * &lambda_prime.eval(&root);
    if conjugate(&psi, nil)? != *nil {
        return Err(violated("Phi lambda'(sqrt q) does not centralize N"));
    }
    if !twists_correctly(d, &psi)? {
        return Err(violated("Phi lambda'(sqrt q) breaks condition 3"));
    }
    let (psi_s, psi_u) = jordan_chevalley(&psi)?;
    let m = frobenius_exponent(d)?;
    if !centralizes_tau(d, &psi_u.pow(m)) || !centralizes_tau(d, &psi_u) || &psi_u * nil != nil * &psi_u {
        return Err(violated("unipotent part of Psi is not in Z(N) and Z(tau)"));
    }
    let mut moves = Vec::new();
    let lp_half = lambda_prime.eval(&root_inv);
    let start = &psi_s * &lp_half;
    if !psi_u.is_identity() {
        let y = log_unipotent(&psi_u)?;
        // Ψ_s exp(Y) λ′(q^{−1/2}) = Ψ λ′(√q)⁻¹ = Φ
        debug_assert_eq!(&(&psi_s * &exp_nilpotent(&y)?) * &lp_half, d.phi);
        moves.push(WalkMove {
            family: MoveFamily::UnipotentLine { left: psi_s.clone(), log: y, right: lp_half.clone() },
            from: k.one(),
            to: k.zero(),
            start: d.phi.clone(),
            end: start.clone(),
        });
    }
    let lambda = adapted_cocharacter(&commuting_sl2(nil, &psi_s, &k.one(), inv)?)?;
    let phi_new = &psi_s * &lambda.eval(&root_inv);
    if phi_new != start {
        moves.push(WalkMove {
            family: MoveFamily::CocharInterpolation {
                base: psi_s.clone(),
                lambda: lambda.clone(),
                lambda_prime: lambda_prime.clone(),
                shift: root_inv.clone(),
            },
            from: root.clone(),
            to: k.one(),
            start,
            end: phi_new.clone(),
        });
    }
    let sample = lambda.eval(&k.from_int(2));
    if &phi_new * &sample != &sample * &phi_new || !phi_new.minimal_polynomial().is_squarefree() {
        return Err(violated("new point is not semisimple or does not commute with lambda"));
    }
    Ok(SemisimplePoint { phi: phi_new, lambda, lambda_prime, psi, moves })
}

/// The walk for `N ≠ 0`.
pub fn case2_walk(d: &WDTriple, config: &WalkConfig) -> Result<WalkOutcome> {
    require_gl(d)?;
    d.validate()?;
    if d.nilpotent.is_zero() {
        return Err(Error::WrongCase("the N != 0 walk needs N != 0".into()));
    }
    let fiber = Fiber::new(d)?;
    let k = d.group.field().clone();
    let nil = &d.nilpotent;
    let point = semisimple_point(d, &fiber)?;
    let mut moves = point.moves.clone();
    let phi = point.phi.clone();

    let splits = lowest_weight_split(nil, &point.lambda, fiber.invariant())?;
    for piece in splits.values() {
        for space in [&piece.lowest_weight, &piece.image] {
            for x in space.basis() {
                if !space.contains(&conjugate(&phi, &x)?) {
                    return Err(violated(format!("Ad Phi does not preserve the weight {} splitting", piece.weight)));
                }
            }
        }
    }
    let psi2 = &phi * &point.lambda.eval(&d.sqrt_q);
    if conjugate(&psi2, nil)? != *nil {
        return Err(violated("Phi lambda(sqrt q) does not centralize N"));
    }
    let finite_order = has_finite_order(&ad_operator(&psi2, fiber.invariant())?);
    let mut scaling = None;
    if finite_order {
        if !fiber.is_unobstructed(&phi)? {
            return Err(violated("finite-order branch ended obstructed"));
        }
    } else if !fiber.is_unobstructed(&phi)? {
        let m = frobenius_exponent(&fiber.triple(&phi))?;
        let s = psi2.pow(m);
        let lambda2 = eigenweight_cocharacter(&s)?;
        let mut trials = 0;
        let mut accepted = None;
        for t in config.candidates(&k) {
            trials += 1;
            let candidate = &phi * &lambda2.eval(&t);
            if lowest_weight_clear(&fiber, &candidate, &splits)? && fiber.is_unobstructed(&candidate)? {
                accepted = Some((t, candidate));
                break;
            }
        }
        let Some((t, end)) = accepted else {
            return Err(Error::TrialExhausted(trials));
        };
        moves.push(WalkMove {
            family: MoveFamily::CocharScale { base: phi.clone(), cocharacter: lambda2.clone() },
            from: k.one(),
            to: t.clone(),
            start: phi.clone(),
            end,
        });
        scaling = Some((lambda2, t));
    }
    let trace = Case2Trace { point, psi2, splits, finite_order, scaling };
    finish(d, &fiber, moves, WalkTrace::Case2(Box::new(trace)), config)
}

/// No nonzero lowest-weight vector of nonpositive weight is fixed by `q·AdΦ`.
fn lowest_weight_clear(fiber: &Fiber, phi: &Matrix, splits: &BTreeMap<i64, LowestWeightPiece>) -> Result<bool> {
    let kernel = fiber.q_ad_phi_minus_one(phi)?.kernel();
    if kernel.is_empty() {
        return Ok(true);
    }
    let bad = fiber.invariant().from_coordinates(&kernel);
    Ok(splits.values().all(|p| p.lowest_weight.intersection(&bad).dim() == 0))
}

/// Walks a valid `GL(n)` triple to an unobstructed point of its fiber.
pub fn unobstruct(d: &WDTriple, config: &WalkConfig) -> Result<WalkOutcome> {
    require_gl(d)?;
    d.validate()?;
    let fiber = Fiber::new(d)?;
    if fiber.is_unobstructed(&d.phi)? {
        return finish(d, &fiber, Vec::new(), WalkTrace::AlreadyUnobstructed, config);
    }
    if d.nilpotent.is_zero() {
        case1_walk(d, config)
    } else {
        case2_walk(d, config)
    }
}
