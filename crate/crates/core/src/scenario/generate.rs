//! Deterministic random Weil–Deligne triples.
//!
//! A triple is assembled in a normal form and then conjugated. The inertia image is
//! `T = (I_r ⊗ C_k) ⊕ I_s` where `C_k` is the companion matrix of the `k`-th
//! cyclotomic polynomial. The monodromy is `(J_1 ⊗ I_m) ⊕ J_2` for Jordan matrices
//! of random partitions of `r` and `s`, and `Φ = s·λ(q^{-1/2})` with `λ` the
//! standard cocharacter of the Jordan types and `s` in the centralizer of `N`, `λ`
//! and `T`. The conjugator commutes with `T`, so the inertia matrices keep their
//! standard form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Roots;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactfield::{euler_phi, ratio, Field, FieldElement};
use crate::linalg::Matrix;
use crate::matgroup::{exp_nilpotent, GroupSpec};
use crate::sl2::Cocharacter;
use crate::wd::{InertialData, InertialElement, WDTriple};

use super::json::Scenario;

const MAX_N: usize = 6;

/// The inertia image of a generated scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Template {
    Trivial,
    /// Cyclic of order `k ∈ {2, 3, 4, 6}`, acting through the rational companion
    /// model of a primitive `k`-th root of unity. Frobenius acts trivially.
    Cyclic(u32),
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Template::Trivial => write!(f, "trivial"),
            Template::Cyclic(k) => write!(f, "cyclic-{k}"),
        }
    }
}

impl FromStr for Template {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "trivial" {
            return Ok(Template::Trivial);
        }
        s.strip_prefix("cyclic-")
            .and_then(|k| k.parse().ok())
            .map(Template::Cyclic)
            .ok_or_else(|| Error::Parse(format!("unknown template {s:?}; expected trivial or cyclic-k")))
    }
}

/// A generated scenario together with the pieces it was built from, conjugated
/// into the same coordinates as the triple.
#[derive(Clone, Debug)]
pub struct GeneratedScenario {
    pub scenario: Scenario,
    pub conjugator: Matrix,
    /// The diagonalizable factor of `s`; it commutes with `N`, `λ` and `τ`.
    pub semisimple: Matrix,
    /// Adapted to `N`: `Ad λ(t) N = t² N`.
    pub cocharacter: Cocharacter,
}

/// The field used for a given `q`: the rationals when `q` is a perfect square,
/// otherwise `ℚ(√q)`. Returns the field and its chosen `√q`.
pub fn field_for_q(q: u64) -> Result<(Field, FieldElement)> {
    let root = q.sqrt();
    if root * root == q {
        let k = Field::rationals();
        let s = k.from_int(root as i64);
        Ok((k, s))
    } else {
        let k = Field::quadratic(q as i64)?;
        let s = k.generator();
        Ok((k, s))
    }
}

/// Jordan types and scalars of one summand of the normal form.
struct Part {
    n: usize,
    nilpotent: Matrix,
    frob: Matrix,
    semisimple: Matrix,
    weights: Vec<i64>,
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    if rng.gen_range(0..3) == 0 {
        return vec![1; n];
    }
    let mut parts = Vec::new();
    let mut left = n;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

fn random_scalar(rng: &mut ChaCha8Rng, sqrt_q: &FieldElement) -> FieldElement {
    let k = sqrt_q.field();
    if rng.gen_range(0..10) < 7 {
        let e = rng.gen_range(-3i64..=3);
        let sign = if rng.gen_bool(0.25) { -1 } else { 1 };
        sqrt_q.pow(e).scale(&ratio(sign, 1))
    } else {
        let pool = [ratio(2, 1), ratio(3, 1), ratio(-1, 1), ratio(1, 2), ratio(-2, 3)];
        k.from_rational(pool.choose(rng).unwrap().clone())
    }
}

fn build_part(rng: &mut ChaCha8Rng, n: usize, sqrt_q: &FieldElement) -> Result<Part> {
    let k = sqrt_q.field().clone();
    let partition = random_partition(rng, n);
    let mut nilpotent = Matrix::zeros(&k, n, n);
    let mut weights = Vec::with_capacity(n);
    let mut scalars = Vec::with_capacity(n);
    let mut block_of = Vec::with_capacity(n);
    let mut start = 0;
    let mut blocks: Vec<(FieldElement, usize)> = Vec::with_capacity(partition.len());
    for (b, &size) in partition.iter().enumerate() {
        // often make an end eigenvalue of this block q^{+-1} times an end eigenvalue of an earlier one,
        // which is where obstructions live
        let d = if b > 0 && rng.gen_bool(0.6) {
            let (earlier, earlier_size) = blocks.choose(rng).unwrap();
            let end = |s: usize, top: bool| if top { s as i64 - 1 } else { 1 - s as i64 };
            let shift = if rng.gen_bool(0.5) { 2 } else { -2 };
            let e = shift + end(size, rng.gen_bool(0.5)) - end(*earlier_size, rng.gen_bool(0.5));
            earlier * &sqrt_q.pow(e)
        } else {
            random_scalar(rng, sqrt_q)
        };
        blocks.push((d.clone(), size));
        for i in 0..size {
            if i + 1 < size {
                nilpotent.set(start + i, start + i + 1, k.one());
            }
            weights.push(size as i64 - 1 - 2 * i as i64);
            scalars.push(d.clone());
            block_of.push(b);
        }
        start += size;
    }
    let mut log = Matrix::zeros(&k, n, n);
    if nilpotent.is_zero() {
        for i in 0..n {
            for j in i + 1..n {
                if scalars[i] == scalars[j] {
                    log.set(i, j, k.from_int(rng.gen_range(-1..=2)));
                }
            }
        }
    } else {
        let mut power = nilpotent.clone();
        while !power.is_zero() {
            let c = k.from_int(rng.gen_range(-2..=2));
            log = &log + &power.scale(&c);
            power = &power * &nilpotent;
        }
    }
    let semisimple = Matrix::diag(&k, &scalars);
    let c = sqrt_q.inv().expect("sqrt_q is nonzero");
    let lambda = Matrix::diag(&k, &weights.iter().map(|&w| c.pow(w)).collect::<Vec<_>>());
    let frob = &(&semisimple * &exp_nilpotent(&log)?) * &lambda;
    Ok(Part { n, nilpotent, frob, semisimple, weights })
}

/// Unit lower times unit upper triangular with small integer entries.
fn random_unimodular(rng: &mut ChaCha8Rng, k: &Field, n: usize) -> Matrix {
    let mut lower = Matrix::identity(k, n);
    let mut upper = Matrix::identity(k, n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, k.from_int(rng.gen_range(-2..=2)));
            upper.set(j, i, k.from_int(rng.gen_range(-2..=2)));
        }
    }
    &lower * &upper
}

/// `(a ⊗ I_m) ⊕ b`.
fn assemble(k: &Field, a: &Matrix, m: usize, b: &Matrix) -> Matrix {
    let r = a.rows();
    let n = r * m + b.rows();
    Matrix::from_fn(k, n, n, |i, j| {
        if i < r * m && j < r * m {
            if i % m == j % m {
                a.get(i / m, j / m).clone()
            } else {
                k.zero()
            }
        } else if i >= r * m && j >= r * m {
            b.get(i - r * m, j - r * m).clone()
        } else {
            k.zero()
        }
    })
}

fn cyclotomic_companion(k: &Field, order: u32) -> Matrix {
    match order {
        2 => Matrix::from_ints(k, &[&[-1]]),
        3 => Matrix::from_ints(k, &[&[0, -1], &[1, -1]]),
        4 => Matrix::from_ints(k, &[&[0, -1], &[1, 0]]),
        6 => Matrix::from_ints(k, &[&[0, -1], &[1, 1]]),
        _ => unreachable!("checked by the caller"),
    }
}

/// Builds a random valid triple in `GL_n` over the field chosen by [`field_for_q`].
/// The same arguments always give the same scenario.
pub fn generate_scenario(seed: u64, n: usize, q: u64, template: Template) -> Result<GeneratedScenario> {
    if n == 0 || n > MAX_N {
        return Err(Error::GenerationInfeasible(format!("n must lie in 1..={MAX_N}, got {n}")));
    }
    if q < 2 {
        return Err(Error::GenerationInfeasible(format!("q must be at least 2, got {q}")));
    }
    let (k, sqrt_q) = field_for_q(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (order, m) = match template {
        Template::Trivial => (1, 1),
        Template::Cyclic(order) => {
            if ![2, 3, 4, 6].contains(&order) {
                return Err(Error::GenerationInfeasible(format!("no rational model for cyclic-{order}")));
            }
            (order, euler_phi(order as u64) as usize)
        }
    };
    if m > n {
        return Err(Error::GenerationInfeasible(format!("{template} needs n ≥ {m}")));
    }
    let r = if order == 1 { 0 } else { rng.gen_range(1..=n / m) };
    let s = n - r * m;

    let twisted = build_part(&mut rng, r, &sqrt_q)?;
    let plain = build_part(&mut rng, s, &sqrt_q)?;
    let q1 = random_unimodular(&mut rng, &k, twisted.n);
    let q2 = random_unimodular(&mut rng, &k, plain.n);
    let conj = assemble(&k, &q1, m, &q2);
    let conj_inv = conj.inverse().expect("unimodular");
    let move_in = |a: &Matrix| &(&conj * a) * &conj_inv;
    let glue = |f: fn(&Part) -> &Matrix| move_in(&assemble(&k, f(&twisted), m, f(&plain)));

    let nilpotent = glue(|p| &p.nilpotent);
    let phi = glue(|p| &p.frob);
    let semisimple = glue(|p| &p.semisimple);

    let mut weights: Vec<i64> = Vec::with_capacity(n);
    for w in &twisted.weights {
        weights.extend(std::iter::repeat_n(*w, m));
    }
    weights.extend(&plain.weights);
    let mut distinct = weights.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let projectors = distinct
        .iter()
        .map(|w| {
            let d: Vec<FieldElement> = weights.iter().map(|x| if x == w { k.one() } else { k.zero() }).collect();
            move_in(&Matrix::diag(&k, &d))
        })
        .collect();
    let cocharacter = Cocharacter::new(distinct, projectors)?;

    let inertial = if order == 1 {
        InertialData::trivial(&k, n)
    } else {
        let c = cyclotomic_companion(&k, order);
        let gen = Matrix::from_fn(&k, n, n, |i, j| {
            if i < r * m && j < r * m {
                if i / m == j / m {
                    c.get(i % m, j % m).clone()
                } else {
                    k.zero()
                }
            } else if i == j {
                k.one()
            } else {
                k.zero()
            }
        });
        let mut elements = Vec::new();
        let mut power = Matrix::identity(&k, n);
        for j in 0..order {
            let label = match j {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{j}"),
            };
            elements.push(InertialElement { label, matrix: power.clone() });
            power = &power * &gen;
        }
        InertialData::new(elements, &HashMap::new())?
    };

    let triple = WDTriple { group: GroupSpec::gl(&k, n), phi, nilpotent, inertial, q: k.from_int(q as i64), sqrt_q };
    triple.validate()?;
    let scenario = Scenario { name: Some(format!("generated-{template}-n{n}-q{q}-seed{seed}")), seed: Some(seed), triple };
    Ok(GeneratedScenario { scenario, conjugator: conj, semisimple, cocharacter })
}
