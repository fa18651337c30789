#![allow(dead_code)]

pub mod oracle;

use wdwalk::exactfield::{rat, ratio, Field, FieldElement};
use wdwalk::matgroup::GroupSpec;
use wdwalk::scenario::{generate_scenario, GeneratedScenario, Template};
use wdwalk::wd::{InertialData, WDTriple};
use wdwalk::Matrix;

pub fn q() -> Field {
    Field::rationals()
}

pub fn r(n: i64, d: i64) -> FieldElement {
    q().from_rational(ratio(n, d))
}

pub fn int(n: i64) -> FieldElement {
    q().from_rational(rat(n))
}

pub fn diag(entries: &[FieldElement]) -> Matrix {
    Matrix::diag(&q(), entries)
}

pub fn unit(n: usize, i: usize, j: usize) -> Matrix {
    Matrix::unit(&q(), n, i, j)
}

/// A `GL(n)` triple over ℚ with trivial inertia and `q = 4`.
pub fn gl_triple(phi: Matrix, nilpotent: Matrix) -> WDTriple {
    let k = q();
    let n = phi.rows();
    WDTriple {
        group: GroupSpec::gl(&k, n),
        phi,
        nilpotent,
        inertial: InertialData::trivial(&k, n),
        q: int(4),
        sqrt_q: int(2),
    }
}

pub fn trivial_gl2() -> WDTriple {
    gl_triple(Matrix::identity(&q(), 2), Matrix::zeros(&q(), 2, 2))
}

pub fn steinberg_gl2() -> WDTriple {
    gl_triple(diag(&[int(1), int(4)]), unit(2, 0, 1))
}

pub fn quarter_gl2() -> WDTriple {
    gl_triple(diag(&[int(1), r(1, 4)]), Matrix::zeros(&q(), 2, 2))
}

pub fn obstructed_gl3() -> WDTriple {
    gl_triple(diag(&[int(1), int(4), r(1, 4)]), unit(3, 0, 1))
}

/// `count` generated scenarios, cycling through the given sizes, `q` values and
/// templates. Infeasible combinations are skipped.
pub fn generated_pool(
    count: usize,
    first_seed: u64,
    ns: &[usize],
    qs: &[u64],
    templates: &[Template],
) -> Vec<GeneratedScenario> {
    let mut out = Vec::with_capacity(count);
    let mut seed = first_seed;
    let mut i = 0usize;
    while out.len() < count {
        let n = ns[i % ns.len()];
        let q = qs[(i / ns.len()) % qs.len()];
        let t = templates[(i / (ns.len() * qs.len())) % templates.len()];
        match generate_scenario(seed, n, q, t) {
            Ok(g) => out.push(g),
            Err(wdwalk::Error::GenerationInfeasible(_)) => {}
            Err(e) => panic!("generator failed for seed {seed}: {e}"),
        }
        seed += 1;
        i += 1;
    }
    out
}

pub const ALL_TEMPLATES: [Template; 5] =
    [Template::Trivial, Template::Cyclic(2), Template::Cyclic(3), Template::Cyclic(4), Template::Cyclic(6)];
