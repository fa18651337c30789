use proptest::prelude::*;
use wdwalk::exactfield::{
    extend_field, factor_over_rationals, has_finite_order, is_irreducible, primary_projector, root_of_unity_order,
    roots_in_field, rat, ratio, Field, RationalPoly, UnivariatePoly,
};
use wdwalk::{Error, Matrix};

fn poly(c: &[i64]) -> RationalPoly {
    RationalPoly::from_ints(c)
}

#[test]
fn factor_cyclotomic_split() {
    let mut f = factor_over_rationals(&poly(&[-1, 0, 0, 0, 1])).unwrap();
    f.sort_by_key(|(p, _)| (p.degree(), p.coeffs().to_vec()));
    assert_eq!(f, vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1), (poly(&[1, 0, 1]), 1)]);
}

#[test]
fn factor_perfect_square() {
    assert_eq!(factor_over_rationals(&poly(&[1, -2, 1])).unwrap(), vec![(poly(&[-1, 1]), 2)]);
}

#[test]
fn cube_root_of_two_is_irreducible() {
    let p = poly(&[-2, 0, 0, 1]);
    // no rational root among the divisors of 2, hence no linear or quadratic factor
    for r in [1, -1, 2, -2] {
        assert_ne!(p.eval(&rat(r)), rat(0));
    }
    assert!(is_irreducible(&p));
    assert_eq!(factor_over_rationals(&p).unwrap(), vec![(p, 1)]);
}

#[test]
fn factor_zero_polynomial_fails() {
    assert!(matches!(factor_over_rationals(&RationalPoly::zero()), Err(Error::ZeroPolynomial)));
}

#[test]
fn roots_of_x2_minus_2() {
    let q = Field::rationals();
    let p = poly(&[-2, 0, 1]);
    assert!(roots_in_field(&UnivariatePoly::from_rational(&q, &p)).unwrap().is_empty());

    let k = Field::new(p.clone()).unwrap();
    let roots = roots_in_field(&UnivariatePoly::from_rational(&k, &p)).unwrap();
    let g = k.generator();
    assert_eq!(roots.len(), 2);
    assert!(roots.iter().any(|(r, m)| *r == g && *m == 1));
    assert!(roots.iter().any(|(r, m)| *r == -&g && *m == 1));
}

#[test]
fn roots_of_split_quadratic() {
    let q = Field::rationals();
    let mut roots = roots_in_field(&UnivariatePoly::from_rational(&q, &poly(&[6, -5, 1]))).unwrap();
    roots.sort_by_key(|(r, _)| r.to_rational());
    assert_eq!(roots, vec![(q.from_int(2), 1), (q.from_int(3), 1)]);
}

#[test]
fn roots_over_quadratic_field_with_multiplicity() {
    // (x - √3)² (x + 1) over ℚ(√3)
    let k = Field::quadratic(3).unwrap();
    let s = k.generator();
    let lin = UnivariatePoly::linear(&s);
    let p = lin.mul(&lin).mul(&UnivariatePoly::linear(&k.from_int(-1)));
    let roots = roots_in_field(&p).unwrap();
    assert_eq!(roots.len(), 2);
    assert!(roots.contains(&(s, 2)));
    assert!(roots.contains(&(k.from_int(-1), 1)));
}

#[test]
fn extend_rationals_by_sqrt2() {
    let q = Field::rationals();
    let ext = extend_field(&q, &UnivariatePoly::from_rational(&q, &poly(&[-2, 0, 1]))).unwrap();
    assert_eq!(ext.field.degree(), 2);
    assert_eq!(&ext.root * &ext.root, ext.field.from_int(2));
}

#[test]
fn extend_sqrt2_by_sqrt3() {
    let k = Field::quadratic(2).unwrap();
    let ext = extend_field(&k, &UnivariatePoly::from_rational(&k, &poly(&[-3, 0, 1]))).unwrap();
    let l = &ext.field;
    assert_eq!(l.degree(), 4);
    let s2 = ext.embedding.apply(&k.generator());
    let s3 = ext.root.clone();
    assert_eq!(&s2 * &s2, l.from_int(2));
    assert_eq!(&s3 * &s3, l.from_int(3));

    // x⁴ − 10x² + 1 = (x² − 5)² − 24 and (√2 + √3)² − 5 = 2√6
    let a = &s2 + &s3;
    let a2 = &a * &a;
    let b = &a2 - &l.from_int(5);
    assert_eq!(&b * &b, l.from_int(24));
    let m = poly(&[1, 0, -10, 0, 1]);
    assert!(UnivariatePoly::from_rational(l, &m).eval(&a).is_zero());

    // the embedding is a ring map
    let x = &k.generator() + &k.from_int(3);
    let y = (&k.generator() * &k.from_rational(ratio(1, 2))) - k.one();
    assert_eq!(ext.embedding.apply(&(&x * &y)), &ext.embedding.apply(&x) * &ext.embedding.apply(&y));
}

#[test]
fn extend_by_linear_polynomial_is_identity() {
    let q = Field::rationals();
    let ext = extend_field(&q, &UnivariatePoly::linear(&q.from_int(5))).unwrap();
    assert_eq!(ext.field, q);
    assert_eq!(ext.root, q.from_int(5));
}

#[test]
fn primary_projectors() {
    let q = Field::rationals();
    let a = Matrix::diag(&q, &[q.from_int(1), q.from_int(2)]);
    assert_eq!(primary_projector(&a, &q.one()).unwrap(), Matrix::diag(&q, &[q.one(), q.zero()]));
    assert_eq!(primary_projector(&Matrix::identity(&q, 3), &q.one()).unwrap(), Matrix::identity(&q, 3));
    let rot = Matrix::from_ints(&q, &[&[0, -1], &[1, 0]]);
    assert!(matches!(primary_projector(&rot, &q.one()), Err(Error::NotAnEigenvalue(_))));
    let jordan = Matrix::from_ints(&q, &[&[1, 1], &[0, 1]]);
    assert!(matches!(primary_projector(&jordan, &q.one()), Err(Error::NotSemisimple)));
}

#[test]
fn projector_over_quadratic_field() {
    // [[0, 2], [1, 0]] has eigenvalues ±√2
    let k = Field::quadratic(2).unwrap();
    let a = Matrix::from_ints(&k, &[&[0, 2], &[1, 0]]);
    let s = k.generator();
    let p = primary_projector(&a, &s).unwrap();
    let p2 = primary_projector(&a, &-&s).unwrap();
    assert_eq!(&p * &p, p);
    assert_eq!(&p + &p2, Matrix::identity(&k, 2));
    assert_eq!(&a * &p, p.scale(&s));
    assert_eq!(p.rank(), 1);
}

#[test]
fn roots_of_unity() {
    let q = Field::rationals();
    assert_eq!(root_of_unity_order(&q.one()), Some(1));
    assert_eq!(root_of_unity_order(&q.from_int(-1)), Some(2));
    assert_eq!(root_of_unity_order(&q.from_int(2)), None);
    let w = Field::new(poly(&[1, 1, 1])).unwrap().generator();
    assert!(w.pow(3).is_one() && !w.is_one());
    assert_eq!(root_of_unity_order(&w), Some(3));
    assert_eq!(root_of_unity_order(&-&w), Some(6));
    let i = Field::new(poly(&[1, 0, 1])).unwrap().generator();
    assert_eq!(root_of_unity_order(&i), Some(4));
    // (1 + √2) is a unit of infinite order
    let k = Field::quadratic(2).unwrap();
    assert_eq!(root_of_unity_order(&(&k.one() + &k.generator())), None);
}

#[test]
fn finite_order_matrices() {
    let q = Field::rationals();
    assert!(has_finite_order(&Matrix::from_ints(&q, &[&[0, -1], &[1, -1]])));
    assert!(has_finite_order(&Matrix::from_ints(&q, &[&[0, -1], &[1, 1]])));
    assert!(has_finite_order(&Matrix::from_ints(&q, &[&[-1, 0], &[0, 1]])));
    assert!(!has_finite_order(&Matrix::from_ints(&q, &[&[2, 0], &[0, 1]])));
    // unipotent, not of finite order in characteristic 0
    assert!(!has_finite_order(&Matrix::from_ints(&q, &[&[1, 1], &[0, 1]])));
}

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=6)
}

fn cubic() -> Field {
    Field::new(poly(&[-2, 0, 0, 1])).unwrap()
}

fn element(k: &Field, c: &[(i64, i64)]) -> wdwalk::FieldElement {
    k.element(c.iter().map(|&(n, d)| ratio(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cubic_field_axioms(a in prop::collection::vec(small(), 3), b in prop::collection::vec(small(), 3),
                          c in prop::collection::vec(small(), 3)) {
        let k = cubic();
        let (a, b, c) = (element(&k, &a), element(&k, &b), element(&k, &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn factorization_reconstructs(roots in prop::collection::vec(-4i64..=4, 0..4), extra in 0usize..3) {
        let mut p = RationalPoly::one();
        for r in &roots {
            p = p.mul(&poly(&[-r, 1]));
        }
        let irreducibles = [poly(&[1, 0, 1]), poly(&[-2, 0, 0, 1]), poly(&[1, 1, 1])];
        for q in irreducibles.iter().take(extra) {
            p = p.mul(q);
        }
        let f = factor_over_rationals(&p).unwrap();
        let mut prod = RationalPoly::one();
        for (g, e) in &f {
            prop_assert!(g.is_monic() && is_irreducible(g));
            prod = prod.mul(&g.pow(*e));
        }
        prop_assert_eq!(prod, p.monic());
    }

    #[test]
    fn sqrt2_roots_found(a in small(), b in small()) {
        // (x − α)(x − ᾱ) for α = a + b√2 has both conjugates as roots over ℚ(√2)
        let k = Field::quadratic(2).unwrap();
        let alpha = element(&k, &[a, b]);
        let conj = element(&k, &[a, (-b.0, b.1)]);
        let p = UnivariatePoly::linear(&alpha).mul(&UnivariatePoly::linear(&conj));
        let roots = roots_in_field(&p).unwrap();
        prop_assert!(roots.iter().any(|(r, _)| *r == alpha));
        prop_assert!(roots.iter().any(|(r, _)| *r == conj));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_matches_polynomial_remainder(a in prop::collection::vec(small(), 3), b in prop::collection::vec(small(), 3)) {
        // x³ − x/2 − 1/3 has non-integral coefficients
        let m = RationalPoly::new(vec![ratio(-1, 3), ratio(-1, 2), rat(0), rat(1)]);
        prop_assert!(is_irreducible(&m));
        for k in [Field::new(m).unwrap(), cubic()] {
            let (x, y) = (element(&k, &a), element(&k, &b));
            let expected = x.as_poly().mul(&y.as_poly()).rem(k.minimal_polynomial());
            prop_assert_eq!((&x * &y).as_poly(), expected);
        }
    }
}
