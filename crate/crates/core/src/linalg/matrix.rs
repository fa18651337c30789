use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactfield::{Field, FieldElement, UnivariatePoly};

use super::Vector;

/// A dense `rows × cols` matrix over a number field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

/// Result of reducing a matrix to reduced row echelon form.
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { field: field.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect(),
        )
    }

    pub fn diag(field: &Field, entries: &[FieldElement]) -> Self {
        let n = entries.len();
        Self::from_fn(field, n, n, |i, j| if i == j { entries[i].clone() } else { field.zero() })
    }

    /// Matrix unit `E_ij` of size `n`.
    pub fn unit(field: &Field, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m.set(i, j, field.one());
        m
    }

    /// Column vector as an `n × 1` matrix.
    pub fn column(field: &Field, v: &[FieldElement]) -> Self {
        Matrix { field: field.clone(), rows: v.len(), cols: 1, data: v.to_vec() }
    }

    /// Square matrix from its row-major flattening.
    pub fn from_flat(field: &Field, n: usize, v: &[FieldElement]) -> Self {
        assert_eq!(v.len(), n * n);
        Matrix { field: field.clone(), rows: n, cols: n, data: v.to_vec() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn from_columns(field: &Field, rows: usize, cols: &[Vector]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&FieldElement) -> FieldElement) -> Self {
        let data: Vec<FieldElement> = self.data.iter().map(f).collect();
        let field = data.first().map_or(self.field.clone(), |x| x.field().clone());
        Matrix { field, rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn trace(&self) -> FieldElement {
        (0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `[a, b] = ab − ba`
    pub fn bracket(a: &Matrix, b: &Matrix) -> Matrix {
        &(a * b) - &(b * a)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // the smallest pivot keeps intermediate coefficients short
            let Some(p) = (r..m.rows).filter(|&i| !m.get(i, c).is_zero()).min_by_key(|&i| m.get(i, c).height()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if rj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&factor * rj);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right kernel `{v : Av = 0}`; each free column contributes one
    /// vector with a 1 in that slot.
    pub fn kernel(&self) -> Vec<Vector> {
        self.kernel_and_pivots().0
    }

    /// The kernel basis of [`Matrix::kernel`] together with the pivot columns,
    /// which index a basis of the column space.
    pub fn kernel_and_pivots(&self) -> (Vec<Vector>, Vec<usize>) {
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.cols];
                v[f] = self.field.one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(i, f);
                }
                v
            })
            .collect();
        (kernel, pivots)
    }

    /// A particular solution of `Ax = b` with every free variable set to zero.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::column(&self.field, b));
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = reduced.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn det(&self) -> FieldElement {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det = &det * &pivot;
            let inv = pivot.inv().unwrap();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(&self.field, n));
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(&self.field, n, n, |i, j| reduced.get(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    pub fn eval_poly(&self, p: &UnivariatePoly) -> Matrix {
        let n = self.rows;
        let id = Matrix::identity(&self.field, n);
        p.coeffs()
            .iter()
            .rev()
            .fold(Matrix::zeros(&self.field, n, n), |acc, c| &(&acc * self) + &id.scale(c))
    }

    /// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier.
    pub fn charpoly(&self) -> UnivariatePoly {
        assert!(self.is_square());
        let n = self.rows;
        let k = &self.field;
        let id = Matrix::identity(k, n);
        let mut coeffs = vec![k.zero(); n + 1];
        coeffs[n] = k.one();
        let mut m = Matrix::zeros(k, n, n);
        for step in 1..=n {
            m = &(self * &m) + &id.scale(&coeffs[n - step + 1]);
            let am = self * &m;
            coeffs[n - step] = -(&am.trace() / &k.from_int(step as i64));
        }
        UnivariatePoly::new(k, coeffs)
    }

    /// Minimal polynomial, as the lcm of the local minimal polynomials of the
    /// standard basis vectors (Krylov sequences).
    pub fn minimal_polynomial(&self) -> UnivariatePoly {
        assert!(self.is_square());
        let k = &self.field;
        let n = self.rows;
        // reduced basis of the span of all Krylov vectors seen so far
        let mut invariant: Vec<(Vector, usize)> = Vec::new();
        let mut acc = UnivariatePoly::one(k);
        for i in 0..n {
            if invariant.len() == n {
                break;
            }
            let mut e = vec![k.zero(); n];
            e[i] = k.one();
            if reduce_against(&invariant, e.clone()).is_none() {
                continue;
            }
            let (p, krylov) = self.local_minimal_polynomial(&e);
            let g = acc.gcd(&p);
            acc = acc.mul(&p).div_rem(&g).0.monic();
            for v in krylov {
                if let Some((r, piv)) = reduce_against(&invariant, v) {
                    invariant.push((r, piv));
                }
            }
        }
        acc
    }

    /// Minimal monic `p` with `p(A)v = 0`, plus the Krylov vectors `v, Av, …`.
    fn local_minimal_polynomial(&self, v: &[FieldElement]) -> (UnivariatePoly, Vec<Vector>) {
        let k = &self.field;
        // reduced vectors with pivot index and the polynomial combination they represent
        let mut reduced: Vec<(Vector, usize, Vec<FieldElement>)> = Vec::new();
        let mut krylov = Vec::new();
        let mut w = v.to_vec();
        let mut deg = 0;
        loop {
            krylov.push(w.clone());
            let mut r = w.clone();
            let mut comb = vec![k.zero(); deg + 1];
            comb[deg] = k.one();
            for (rv, piv, rc) in &reduced {
                if r[*piv].is_zero() {
                    continue;
                }
                let f = &r[*piv] / &rv[*piv];
                for (x, y) in r.iter_mut().zip(rv) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
                for (x, y) in comb.iter_mut().zip(rc) {
                    *x = &*x - &(&f * y);
                }
            }
            match r.iter().position(|x| !x.is_zero()) {
                None => {
                    krylov.pop();
                    return (UnivariatePoly::new(k, comb), krylov);
                }
                Some(piv) => reduced.push((r, piv, comb)),
            }
            w = self.mul_vec(&w);
            deg += 1;
        }
    }
}

/// Reduces `v` by pivoted vectors; `None` if it lies in their span, else the
/// remainder with its first nonzero index.
fn reduce_against(basis: &[(Vector, usize)], mut v: Vector) -> Option<(Vector, usize)> {
    for (b, piv) in basis {
        if v[*piv].is_zero() {
            continue;
        }
        let f = &v[*piv] / &b[*piv];
        for (x, y) in v.iter_mut().zip(b) {
            if !y.is_zero() {
                *x = &*x - &(&f * y);
            }
        }
    }
    v.iter().position(|x| !x.is_zero()).map(|p| (v, p))
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.map(|x| -x)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: Matrix) -> Matrix { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Matrix> for Matrix {
            type Output = Matrix;
            fn $m(self, rhs: &Matrix) -> Matrix { (&self).$m(rhs) }
        }
        impl<'a> $tr<Matrix> for &'a Matrix {
            type Output = Matrix;
            fn $m(self, rhs: Matrix) -> Matrix { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn inverse_and_det() {
        let a = Matrix::from_ints(&q(), &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.det(), q().from_int(18));
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        let sing = Matrix::from_ints(&q(), &[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let a = Matrix::from_ints(&q(), &[&[1, 2, 3], &[2, 4, 6]]);
        let ker = a.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(super::super::is_zero_vector(&a.mul_vec(v)));
        }
        let b = vec![q().from_int(1), q().from_int(2)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(a.solve(&[q().from_int(1), q().from_int(3)]).is_none());
    }

    #[test]
    fn min_poly_vs_charpoly() {
        let k = q();
        // diag(2,2,3): charpoly (x-2)^2(x-3), minpoly (x-2)(x-3)
        let a = Matrix::diag(&k, &[k.from_int(2), k.from_int(2), k.from_int(3)]);
        let cp = a.charpoly().to_rational().unwrap();
        assert_eq!(cp, crate::RationalPoly::from_ints(&[-12, 16, -7, 1]));
        let mp = a.minimal_polynomial().to_rational().unwrap();
        assert_eq!(mp, crate::RationalPoly::from_ints(&[6, -5, 1]));
        // Jordan block
        let j = Matrix::from_ints(&k, &[&[2, 1], &[0, 2]]);
        assert_eq!(j.minimal_polynomial().to_rational().unwrap(), crate::RationalPoly::from_ints(&[4, -4, 1]));
    }

    proptest! {
        #[test]
        fn cayley_hamilton_and_min_poly(entries in proptest::collection::vec(-3i64..4, 9)) {
            let k = q();
            let a = Matrix::from_fn(&k, 3, 3, |i, j| k.from_int(entries[3 * i + j]));
            prop_assert!(a.eval_poly(&a.charpoly()).is_zero());
            let mp = a.minimal_polynomial();
            prop_assert!(a.eval_poly(&mp).is_zero());
            prop_assert!(a.charpoly().rem(&mp).is_zero());
        }
    }
}
