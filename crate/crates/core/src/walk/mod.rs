//! The unobstruction walk: a chain of one-parameter families inside the fiber of
//! a triple with fixed `(N, τ, q)`, ending at a point with `H² = 0`, plus an
//! independent checker for the resulting certificates.

mod certificate;
mod engine;
mod verify;

pub use certificate::{MoveFamily, WalkCertificate, WalkMove};
pub use engine::{
    case1_walk, case2_walk, fiber_semisimple_point, semisimplify_in_fiber, unobstruct, Case1Step, Case2Trace,
    SemisimplePoint, WalkConfig, WalkOutcome, WalkTrace,
};
pub use verify::{verify_certificate, VerificationReport};
