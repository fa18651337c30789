use std::collections::BTreeMap;

use super::field::FieldElement;
use super::poly::UnivariatePoly;
use super::qpoly::RationalPoly;
use super::rational::rat;
use crate::linalg::Matrix;

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// All `m ≥ 1` with `φ(m) ≤ bound`. Since `φ(m) ≥ √(m/2)` these satisfy `m ≤ 2·bound²`.
fn orders_up_to(bound: u64) -> impl Iterator<Item = u64> {
    (1..=2 * bound * bound + 2).filter(move |&m| euler_phi(m) <= bound)
}

/// The order of `alpha` as a root of unity, if it is one.
pub fn root_of_unity_order(alpha: &FieldElement) -> Option<u64> {
    if alpha.is_zero() {
        return None;
    }
    let d = alpha.field().degree() as u64;
    orders_up_to(d).find(|&m| alpha.pow(m as i64).is_one())
}

/// Cyclotomic polynomials `Φ_k` for every `k` in `orders`, which must be closed
/// under taking divisors and sorted.
fn cyclotomic_polynomials(orders: &[u64]) -> BTreeMap<u64, RationalPoly> {
    let mut out: BTreeMap<u64, RationalPoly> = BTreeMap::new();
    for &k in orders {
        let mut coeffs = vec![rat(0); k as usize + 1];
        coeffs[0] = rat(-1);
        coeffs[k as usize] = rat(1);
        let mut p = RationalPoly::new(coeffs);
        for (d, phi_d) in &out {
            if k % d == 0 {
                p = p.div_rem(phi_d).0;
            }
        }
        out.insert(k, p);
    }
    out
}

/// Whether the square matrix `a` has finite multiplicative order.
///
/// That holds exactly when the minimal polynomial `μ` is squarefree and every
/// root is a root of unity. A root of `μ` has degree at most `deg μ · [K:ℚ]` over
/// ℚ, so only the cyclotomic factors `Φ_k` with `φ(k)` below that bound can
/// occur; they are divided out one at a time.
pub fn has_finite_order(a: &Matrix) -> bool {
    let mu = a.minimal_polynomial();
    if !mu.is_squarefree() || mu.coeff(0).is_zero() {
        return false;
    }
    let k = a.field();
    let bound = (mu.degree().unwrap() * k.degree()) as u64;
    let orders: Vec<u64> = orders_up_to(bound).collect();
    let mut rest = mu;
    for phi_k in cyclotomic_polynomials(&orders).values() {
        let g = rest.gcd(&UnivariatePoly::from_rational(k, phi_k));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
        }
        if rest.degree() == Some(0) {
            return true;
        }
    }
    false
}
