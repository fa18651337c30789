//! Number fields, factorization and root finding.

use wdwalk::exactfield::{extend_field, factor_over_rationals, root_of_unity_order, roots_in_field, RationalPoly};
use wdwalk::{Field, UnivariatePoly};

fn main() -> wdwalk::Result<()> {
    let p = RationalPoly::from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
    println!("factors of {p}:");
    for (f, e) in factor_over_rationals(&p)? {
        println!("  ({f})^{e}");
    }

    let q = Field::rationals();
    let k = extend_field(&q, &UnivariatePoly::from_rational(&q, &RationalPoly::from_ints(&[-2, 0, 1])))?.field;
    let ext = extend_field(&k, &UnivariatePoly::from_rational(&k, &RationalPoly::from_ints(&[-3, 0, 1])))?;
    let l = &ext.field;
    println!("Q(sqrt2, sqrt3) = Q[x]/({}), degree {}", l.minimal_polynomial(), l.degree());

    let sqrt2 = ext.embedding.apply(&k.generator());
    let alpha = &sqrt2 + &ext.root;
    println!("sqrt2 + sqrt3 = {alpha}");

    let target = UnivariatePoly::from_rational(l, &RationalPoly::from_ints(&[1, 0, -10, 0, 1]));
    for (r, m) in roots_in_field(&target)? {
        println!("  root of x^4 - 10x^2 + 1: {r} (multiplicity {m})");
    }

    let w = Field::new(RationalPoly::from_ints(&[1, 1, 1]))?.generator();
    println!("order of w with w^2 + w + 1 = 0: {:?}", root_of_unity_order(&w));
    println!("order of -w: {:?}", root_of_unity_order(&-&w));
    Ok(())
}
