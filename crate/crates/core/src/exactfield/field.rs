//! Number fields `K = ℚ[x]/(f)` presented by a primitive element, and their elements.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::factor::is_irreducible;
use super::qpoly::RationalPoly;
use super::rational::{format_rational, rat, Rational};
use crate::error::{Error, Result};

/// The defining data of a number field: a monic irreducible minimal polynomial.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    minimal_polynomial: RationalPoly,
    degree: usize,
    /// The minimal polynomial as integer numerators over one denominator.
    scaled: (Vec<BigInt>, BigInt),
}

impl FieldDescriptor {
    fn build(minimal_polynomial: RationalPoly, degree: usize) -> Self {
        let scaled = integral_form(minimal_polynomial.coeffs());
        FieldDescriptor { minimal_polynomial, degree, scaled }
    }
}

/// `coords = nums / den` with integer `nums` and the least common denominator.
fn integral_form(coords: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coords.iter().fold(BigInt::one(), |acc, c| if c.denom().is_one() { acc } else { acc.lcm(c.denom()) });
    let nums = coords
        .iter()
        .map(|c| if den.is_one() { c.numer().clone() } else { c.numer() * (&den / c.denom()) })
        .collect();
    (nums, den)
}

impl FieldDescriptor {
    pub fn minimal_polynomial(&self) -> &RationalPoly {
        &self.minimal_polynomial
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Shared handle to a [`FieldDescriptor`]; cheap to clone.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldDescriptor>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Field {}

impl Field {
    /// Builds `ℚ[x]/(f)`, checking that `f` is monic and irreducible.
    pub fn new(minimal_polynomial: RationalPoly) -> Result<Self> {
        let degree = match minimal_polynomial.degree() {
            Some(d) if d >= 1 && minimal_polynomial.is_monic() => d,
            _ => return Err(Error::NotMonic),
        };
        if !is_irreducible(&minimal_polynomial) {
            return Err(Error::Reducible(minimal_polynomial.to_string()));
        }
        Ok(Field(Arc::new(FieldDescriptor::build(minimal_polynomial, degree))))
    }

    /// ℚ itself, presented as `ℚ[x]/(x)`.
    pub fn rationals() -> Self {
        static RATIONALS: OnceLock<Field> = OnceLock::new();
        RATIONALS
            .get_or_init(|| Field(Arc::new(FieldDescriptor::build(RationalPoly::x(), 1))))
            .clone()
    }

    /// `ℚ(√d)` for a non-square integer `d`.
    pub fn quadratic(d: i64) -> Result<Self> {
        Self::new(RationalPoly::from_ints(&[-d, 0, 1]))
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn minimal_polynomial(&self) -> &RationalPoly {
        &self.0.minimal_polynomial
    }

    pub fn is_rationals(&self) -> bool {
        self.0.degree == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), coords: vec![Rational::zero(); self.degree()] }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(rat(n))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = r;
        FieldElement { field: self.clone(), coords }
    }

    /// The class of `x`. For ℚ this is the root `0` of the presentation `x`.
    pub fn generator(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.from_rational(-self.minimal_polynomial().coeff(0));
        }
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[1] = Rational::one();
        FieldElement { field: self.clone(), coords }
    }

    /// Element with the given power-basis coordinates (padded or reduced as needed).
    pub fn element(&self, coords: Vec<Rational>) -> FieldElement {
        self.reduce_poly(&RationalPoly::new(coords))
    }

    pub fn reduce_poly(&self, p: &RationalPoly) -> FieldElement {
        let r = if self.degree() == 1 {
            RationalPoly::constant(p.eval(&-self.minimal_polynomial().coeff(0)))
        } else {
            p.rem(self.minimal_polynomial())
        };
        let mut coords = r.coeffs().to_vec();
        coords.resize(self.degree(), Rational::zero());
        FieldElement { field: self.clone(), coords }
    }

    /// Regular representation over ℚ: the matrix of multiplication by `a` in the power basis.
    pub fn multiplication_matrix(&self, a: &FieldElement) -> Vec<Vec<Rational>> {
        let d = self.degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = self.one();
        let x = self.generator();
        for _ in 0..d {
            cols.push((a * &basis).coords);
            basis = &basis * &x;
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }
}

/// An element of a number field, stored by its power-basis coordinates.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn as_poly(&self) -> RationalPoly {
        RationalPoly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Total bit length of the coordinates; a cheap size measure.
    pub(crate) fn height(&self) -> u64 {
        self.coords.iter().map(|c| c.numer().bits() + c.denom().bits()).sum()
    }

    /// The rational value, if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coords[1..].iter().all(|c| c.is_zero()).then(|| self.coords[0].clone())
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against the
    /// minimal polynomial. `None` for zero.
    pub fn inv(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return None;
        }
        if self.field.degree() == 1 {
            return Some(self.field.from_rational(self.coords[0].recip()));
        }
        let (g, s, _) = self.as_poly().ext_gcd(self.field.minimal_polynomial());
        debug_assert_eq!(g, RationalPoly::one());
        Some(self.field.reduce_poly(&s))
    }

    pub fn pow(&self, e: i64) -> FieldElement {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| c * r).collect() }
    }

    fn assert_same(&self, other: &FieldElement) {
        assert!(self.field == other.field, "mixing elements of different fields");
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order: lexicographic on coordinates, highest power first,
/// so on ℚ it is the usual order.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.iter().rev().cmp(other.coords.iter().rev())
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let s = self.as_poly().to_string().replace('x', "a");
        write!(f, "({s})")
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same(rhs);
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same(rhs);
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same(rhs);
        let d = self.field.degree();
        if d == 1 {
            return FieldElement {
                field: self.field.clone(),
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            };
        }
        // integer arithmetic over a common denominator, normalized once at the end
        let (a, da) = integral_form(&self.coords);
        let (b, db) = integral_form(&rhs.coords);
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut den = da * db;
        // x^d = -(M_0 + ... + M_{d-1} x^{d-1}) / D
        let (m, m_den) = &self.field.0.scaled;
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            if !m_den.is_one() {
                for t in prod[..k].iter_mut() {
                    *t *= m_den;
                }
                den *= m_den;
            }
            for (j, mj) in m[..d].iter().enumerate() {
                if !mj.is_zero() {
                    prod[k - d + j] -= &c * mj;
                }
            }
        }
        prod.truncate(d);
        let coords = prod.into_iter().map(|p| Rational::new(p, den.clone())).collect();
        FieldElement { field: self.field.clone(), coords }
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement { (&self).$m(rhs) }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
