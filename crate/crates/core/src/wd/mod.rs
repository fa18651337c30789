//! Weil–Deligne triples `(Φ, N, τ)`, their validation, the deformation complex
//! and its lift spaces over dual numbers.

mod complex;
mod dual;
mod inertial;
mod lifts;
mod triple;

pub use complex::{deformation_complex, is_unobstructed, CohomologyReport, Fiber};
pub use dual::DualMatrix;
pub use inertial::{InertialData, InertialElement};
pub use lifts::{
    first_order_lifts, frobenius_exponent, is_first_order_lift, is_second_order_lift, second_order_extend,
    LiftSpace, SecondOrder,
};
pub use triple::{validate_triple, Violation, WDTriple};
