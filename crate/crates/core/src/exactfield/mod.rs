//! Exact arithmetic: rationals, polynomials, number fields and their extensions.

mod extend;
mod factor;
mod field;
pub(crate) mod modp;
mod poly;
mod projector;
mod qpoly;
pub mod rational;
mod roots;
mod unity;

pub use extend::{extend_field, Embedding, Extension};
pub use factor::{factor_over_rationals, is_irreducible};
pub use field::{Field, FieldDescriptor, FieldElement};
pub use poly::UnivariatePoly;
pub use projector::primary_projector;
pub(crate) use projector::projector_with_minpoly;
pub use qpoly::RationalPoly;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use roots::roots_in_field;
pub use unity::{euler_phi, has_finite_order, root_of_unity_order};
