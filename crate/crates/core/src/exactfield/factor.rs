//! Factorization over ℚ by the Zassenhaus method.
//!
//! A squarefree primitive integer polynomial is factored modulo a small prime
//! (distinct-degree plus Cantor–Zassenhaus splitting), the modular factors are
//! Hensel-lifted past a Mignotte coefficient bound, and true factors are
//! recovered by trial recombination of subsets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, ModPoly};
use super::qpoly::RationalPoly;
use crate::error::{Error, Result};

type ZPoly = Vec<BigInt>;

const SMALL_PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307,
    311, 313, 317, 331, 337, 347, 349, 353, 359, 367, 373, 379, 383, 389, 397, 401, 409, 419, 421,
    431, 433, 439, 443, 449, 457, 461, 463, 467, 479, 487, 491, 499, 503, 509, 521, 523, 541,
];

/// Number of admissible primes tried when looking for a sparse modular factorization.
const PRIME_TRIALS: usize = 4;

/// Monic irreducible factors of `p` with multiplicities, sorted by degree then
/// coefficients. The product of `factor^multiplicity` equals `p / lc(p)`.
pub fn factor_over_rationals(p: &RationalPoly) -> Result<Vec<(RationalPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in p.squarefree_decomposition() {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    Ok(out)
}

/// True if `p` has positive degree and no nontrivial factorization over ℚ.
pub fn is_irreducible(p: &RationalPoly) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        Some(_) => p.is_squarefree() && factor_squarefree(p).len() == 1,
    }
}

fn factor_squarefree(f: &RationalPoly) -> Vec<RationalPoly> {
    let mut z = f.primitive_integer();
    let mut out = Vec::new();
    if z.len() >= 2 && z[0].is_zero() {
        out.push(RationalPoly::x());
        z.remove(0);
    }
    if z.len() >= 2 {
        for g in factor_primitive(z) {
            out.push(RationalPoly::from_integers(&g).monic());
        }
    }
    out
}

fn factor_primitive(f: ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f];
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);

    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for &p in SMALL_PRIMES {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::from_integers(&f, p);
        if fp.len() != f.len() || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let factors = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
        if factors.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == PRIME_TRIALS {
            break;
        }
    }
    let (p, modular) = best.expect("no admissible prime for a squarefree polynomial");

    // Coefficient bound for any factor scaled by lc: |lc| 2^n (n+1) max|f_i|.
    let max_coeff = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * max_coeff;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        pk *= &pb;
        k += 1;
    }

    let lifted = hensel_lift_all(&f, &modular, p, k, &pk);
    recombine(f, lifted, &pk)
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn lift_modpoly(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    ztrim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default()
            })
            .collect(),
    )
}

fn zadd_scaled(a: &[BigInt], b: &[u64], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + m * BigInt::from(b.get(i).copied().unwrap_or(0)))
        .collect()
}

/// Lifts `f ≡ g·h (mod p)` with `g` monic to `f ≡ G·H (mod p^k)`.
fn hensel_lift_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (s, t) = modp::bezout(g, h, p);
    let pb = BigInt::from(p);
    let mut big_g = lift_modpoly(g);
    let mut big_h = lift_modpoly(h);
    let mut m = pb.clone();
    for _ in 1..k {
        let mp = &m * &pb;
        let err = zmod(&zsub(f, &zmul(&big_g, &big_h)), &mp);
        let e: ModPoly = modp::from_integers(
            &err.iter().map(|c| c / &m).collect::<Vec<_>>(),
            p,
        );
        if !modp::is_zero(&e) {
            let (q, r) = modp::div_rem(&modp::mul(&e, &t, p), g, p);
            let dh = modp::add(&modp::mul(&e, &s, p), &modp::mul(&q, h, p), p);
            big_g = zadd_scaled(&big_g, &r, &m);
            big_h = zadd_scaled(&big_h, &dh, &m);
        }
        m = mp;
    }
    (zmod(&big_g, &m), zmod(&big_h, &m))
}

fn hensel_lift_all(f: &[BigInt], modular: &[ModPoly], p: u64, k: u32, pk: &BigInt) -> Vec<ZPoly> {
    let lc = f.last().unwrap().clone();
    let lc_p = modp::reduce_bigint(&lc, p);
    let mut out = Vec::with_capacity(modular.len());
    let mut current = zmod(f, pk);
    for i in 0..modular.len() - 1 {
        let rest = modular[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, g| modp::mul(&acc, g, p));
        let (g, h) = hensel_lift_pair(&current, &modular[i], &rest, p, k);
        out.push(g);
        current = h;
    }
    let lc_inv = mod_inverse(&lc, pk);
    out.push(zmod(&current.iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), pk));
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "leading coefficient not invertible modulo p^k");
    e.x.mod_floor(m)
}

fn primitive(a: ZPoly) -> ZPoly {
    let content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign: BigInt = if a.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    a.into_iter().map(|c| c / &content * &sign).collect()
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, pk: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.last().unwrap().clone();
        let target: ZPoly = f.iter().map(|c| c * &lc).collect();
        for subset in Combinations::new(lifted.len(), size) {
            let (inside, outside): (Vec<_>, Vec<_>) =
                (0..lifted.len()).partition(|i| subset.contains(i));
            let prod = |ids: &[usize]| {
                let raw = ids.iter().fold(vec![lc.clone()], |acc, &i| zmul(&acc, &lifted[i]));
                symmetric(&raw, pk)
            };
            let g = prod(&inside);
            let h = prod(&outside);
            if zmul(&g, &h) == target {
                out.push(primitive(g));
                f = primitive(h);
                lifted = outside.iter().map(|&i| lifted[i].clone()).collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    out.push(f);
    out
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let cur = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(cur)
    }
}
