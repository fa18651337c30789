//! Polynomials over a small prime field `𝔽_p`, used by the Zassenhaus factorizer.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

pub(crate) type ModPoly = Vec<u64>;

fn trim(mut a: ModPoly) -> ModPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn reduce_bigint(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

pub(crate) fn from_integers(f: &[BigInt], p: u64) -> ModPoly {
    trim(f.iter().map(|c| reduce_bigint(c, p)).collect())
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[u64], s: u64, p: u64) -> ModPoly {
    trim(a.iter().map(|&c| c * s % p).collect())
}

pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    let db = b.len() - 1;
    let lc_inv = inv(b[db], p);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quo = vec![0u64; rem.len() - db];
    for k in (0..quo.len()).rev() {
        let c = rem[k + db] * lc_inv % p;
        if c == 0 {
            continue;
        }
        for (j, &d) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * d % p) % p;
        }
        quo[k] = c;
    }
    rem.truncate(db);
    (trim(quo), trim(rem))
}

pub(crate) fn monic(a: &[u64], p: u64) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = div_rem(&a, &b, p).1;
        a = std::mem::replace(&mut b, r);
    }
    monic(&a, p)
}

/// `s, t` with `s·a + t·b = 1` for coprime `a, b`.
pub(crate) fn bezout(a: &[u64], b: &[u64], p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let c = inv(r0[0], p);
    (scale(&s0, c, p), scale(&t0, c, p))
}

pub(crate) fn derivative(a: &[u64], p: u64) -> ModPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn pow_mod(base: &[u64], exp: &BigUint, modulus: &[u64], p: u64) -> ModPoly {
    let mut acc = vec![1u64];
    let base = div_rem(base, modulus, p).1;
    for i in (0..exp.bits()).rev() {
        acc = div_rem(&mul(&acc, &acc, p), modulus, p).1;
        if exp.bit(i) {
            acc = div_rem(&mul(&acc, &base, p), modulus, p).1;
        }
    }
    acc
}

pub(crate) fn is_squarefree(f: &[u64], p: u64) -> bool {
    gcd(f, &derivative(f, p), p).len() == 1
}

/// Splits a monic squarefree polynomial into its monic irreducible factors.
pub(crate) fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<ModPoly> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        equal_degree(&g, d, p, rng, &mut out);
    }
    out.sort();
    out
}

fn distinct_degree(f: &[u64], p: u64) -> Vec<(ModPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x: ModPoly = vec![0, 1];
    let mut h = x.clone();
    let pb = BigUint::from(p);
    let mut d = 1;
    while f.len() > 2 * d {
        h = pow_mod(&h, &pb, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = div_rem(&f, &g, p).0;
            h = div_rem(&h, &f, p).1;
            out.push((g, d));
        }
        d += 1;
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

fn equal_degree<R: Rng>(g: &[u64], d: usize, p: u64, rng: &mut R, out: &mut Vec<ModPoly>) {
    let n = g.len() - 1;
    if n == d {
        out.push(g.to_vec());
        return;
    }
    // (p^d - 1) / 2, p odd
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: ModPoly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&pow_mod(&a, &e, g, p), &[1], p);
        let u = gcd(&b, g, p);
        if u.len() > 1 && u.len() < g.len() {
            let v = div_rem(g, &u, p).0;
            equal_degree(&u, d, p, rng, out);
            equal_degree(&monic(&v, p), d, p, rng, out);
            return;
        }
    }
}

pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|c| c.is_zero())
}
