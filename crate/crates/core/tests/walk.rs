mod common;

use common::*;
use wdwalk::exactfield::rat;
use wdwalk::matgroup::{exp_nilpotent, GroupSpec};
use wdwalk::walk::{case1_walk, case2_walk, fiber_semisimple_point, unobstruct, verify_certificate, WalkConfig, WalkTrace};
use wdwalk::{Error, Matrix};

#[test]
fn quarter_walk_reaches_half_scalar() {
    let out = unobstruct(&quarter_gl2(), &WalkConfig::default()).unwrap();
    let c = &out.certificate;
    assert_eq!(c.moves.len(), 1);
    assert_eq!(c.moves[0].to, int(2));
    assert_eq!(c.final_phi, diag(&[r(1, 2), r(1, 2)]));
    let WalkTrace::Case1(steps) = &out.trace else { panic!("expected the N = 0 walk") };
    assert_eq!(steps[0].nilpotent, unit(2, 1, 0));
    assert!(verify_certificate(c).valid);
}

#[test]
fn tampered_final_phi_is_rejected() {
    let mut c = unobstruct(&quarter_gl2(), &WalkConfig::default()).unwrap().certificate;
    c.final_phi = diag(&[int(1), r(1, 4)]);
    let report = verify_certificate(&c);
    assert!(!report.valid);
}

#[test]
fn obstructed_gl3_walk() {
    let d = obstructed_gl3();
    let out = unobstruct(&d, &WalkConfig::default()).unwrap();
    let c = &out.certificate;
    assert_eq!(c.final_phi, diag(&[int(2), int(8), r(1, 4)]));
    let v = verify_certificate(c);
    assert!(v.valid, "{v:?}");
    // ker(q AdΦ − 1) = ⟨E12⟩
    let fiber = wdwalk::wd::Fiber::new(&d).unwrap();
    let ker = fiber.q_ad_phi_minus_one(&c.final_phi).unwrap().kernel();
    assert_eq!(ker.len(), 1);
    let x = fiber.invariant().element(&ker[0]);
    assert_eq!(x.scale(&x.get(0, 1).inv().unwrap()), unit(3, 0, 1));
}

#[test]
fn steinberg_needs_no_moves() {
    let out = unobstruct(&steinberg_gl2(), &WalkConfig::default()).unwrap();
    assert!(out.certificate.moves.is_empty());
    assert!(verify_certificate(&out.certificate).valid);
}

#[test]
fn unipotent_frobenius_semisimplifies_first() {
    // Φ = diag(1, 1, 1/4)·(I + E12)
    let u = &Matrix::identity(&q(), 3) + &unit(3, 0, 1);
    let phi = &diag(&[int(1), int(1), r(1, 4)]) * &u;
    let d = gl_triple(phi, Matrix::zeros(&q(), 3, 3));
    let out = unobstruct(&d, &WalkConfig::default()).unwrap();
    let kinds: Vec<_> = out.certificate.moves.iter().map(|m| m.family.kind()).collect();
    assert_eq!(kinds[0], "UnipotentLine");
    assert_eq!(out.certificate.moves[0].end, diag(&[int(1), int(1), r(1, 4)]));
    assert!(verify_certificate(&out.certificate).valid);
}

#[test]
fn identity_needs_no_walk() {
    let out = unobstruct(&trivial_gl2(), &WalkConfig::default()).unwrap();
    assert!(out.certificate.moves.is_empty());
    assert!(matches!(out.trace, WalkTrace::AlreadyUnobstructed));
    assert!(verify_certificate(&out.certificate).valid);
}

#[test]
fn triangular_frobenius_with_distinct_eigenvalues() {
    // [[1, 1], [0, 1/4]] is already semisimple, so only scaling moves occur
    let phi = Matrix::from_rows(&q(), vec![vec![int(1), int(1)], vec![int(0), r(1, 4)]]);
    let d = gl_triple(phi, Matrix::zeros(&q(), 2, 2));
    let out = unobstruct(&d, &WalkConfig::default()).unwrap();
    assert!(out.certificate.moves.iter().all(|m| m.family.kind() == "CocharScale"));
    assert_eq!(out.certificate.moves.len(), 1);
    assert!(verify_certificate(&out.certificate).valid);
}

#[test]
fn semisimple_points() {
    let p = fiber_semisimple_point(&steinberg_gl2()).unwrap();
    assert_eq!(p.psi, diag(&[int(2), int(2)]));
    assert_eq!(p.phi, diag(&[int(1), int(4)]));
    assert!(p.moves.is_empty());

    let p = fiber_semisimple_point(&obstructed_gl3()).unwrap();
    assert_eq!(p.psi, diag(&[int(2), int(2), r(1, 4)]));
    assert_eq!(p.phi, diag(&[int(1), int(4), r(1, 4)]));
}

#[test]
fn unipotent_part_in_centralizer_is_stripped() {
    // Steinberg Φ times exp(E12), which commutes with N
    let phi = &diag(&[int(1), int(4)]) * &exp_nilpotent(&unit(2, 0, 1)).unwrap();
    let d = gl_triple(phi.clone(), unit(2, 0, 1));
    assert!(d.validate().is_ok());
    let p = fiber_semisimple_point(&d).unwrap();
    assert_eq!(p.moves[0].family.kind(), "UnipotentLine");
    assert_eq!(p.moves[0].start, phi);
    assert_eq!(p.phi, diag(&[int(1), int(4)]));
    let out = unobstruct(&d, &WalkConfig::default()).unwrap();
    assert!(verify_certificate(&out.certificate).valid);
}

#[test]
fn regular_nilpotent_takes_the_finite_order_branch() {
    // λ(t) = diag(t², 1, t⁻²) and Φ = λ(1/2)
    let n = &unit(3, 0, 1) + &unit(3, 1, 2);
    let d = gl_triple(diag(&[r(1, 4), int(1), int(4)]), n);
    assert!(d.validate().is_ok());
    let out = case2_walk(&d, &WalkConfig::default()).unwrap();
    let WalkTrace::Case2(trace) = &out.trace else { panic!("expected the N != 0 walk") };
    assert!(trace.finite_order);
    assert!(trace.scaling.is_none());
    assert!(trace.psi2.is_identity());
    assert!(verify_certificate(&out.certificate).valid);
}

#[test]
fn dispatch_by_nilpotent() {
    let config = WalkConfig::default();
    assert!(matches!(unobstruct(&quarter_gl2(), &config).unwrap().trace, WalkTrace::Case1(_)));
    assert!(matches!(unobstruct(&obstructed_gl3(), &config).unwrap().trace, WalkTrace::Case2(_)));
    assert!(matches!(case2_walk(&quarter_gl2(), &config), Err(Error::WrongCase(_))));
    assert!(matches!(case1_walk(&obstructed_gl3(), &config), Err(Error::WrongCase(_))));
}

#[test]
fn walk_errors() {
    let mut sl = trivial_gl2();
    sl.group = GroupSpec::sl(&q(), 2);
    assert!(matches!(unobstruct(&sl, &WalkConfig::default()), Err(Error::UnsupportedGroupKind)));

    let broken = gl_triple(diag(&[int(1), int(2)]), unit(2, 0, 1));
    assert!(matches!(unobstruct(&broken, &WalkConfig::default()), Err(Error::InvalidTriple(_))));

    let only_units = WalkConfig { t_candidates: vec![rat(1), rat(-1)], max_steps: 64 };
    assert!(matches!(unobstruct(&quarter_gl2(), &only_units), Err(Error::TrialExhausted(_))));

    let no_steps = WalkConfig { max_steps: 0, ..WalkConfig::default() };
    assert!(matches!(unobstruct(&quarter_gl2(), &no_steps), Err(Error::StepLimitExceeded(0))));
}

#[test]
fn walks_are_deterministic() {
    let a = unobstruct(&obstructed_gl3(), &WalkConfig::default()).unwrap().certificate;
    let b = unobstruct(&obstructed_gl3(), &WalkConfig::default()).unwrap().certificate;
    assert_eq!(a, b);
}

#[test]
fn tampered_move_is_rejected() {
    let mut c = unobstruct(&obstructed_gl3(), &WalkConfig::default()).unwrap().certificate;
    let last = c.moves.last_mut().unwrap();
    last.to = int(3);
    assert!(!verify_certificate(&c).valid);
}
