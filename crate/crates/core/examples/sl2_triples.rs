//! Jacobson-Morozov triples, cocharacters and lowest-weight splittings.

use wdwalk::matgroup::LieSubspace;
use wdwalk::sl2::{adapted_cocharacter, commuting_sl2, jacobson_morozov, lowest_weight_split, weight_grading};
use wdwalk::{Field, Matrix};

fn main() -> wdwalk::Result<()> {
    let k = Field::rationals();
    let gl3 = LieSubspace::full(&k, 3);
    let e = &Matrix::unit(&k, 3, 0, 1) + &Matrix::unit(&k, 3, 1, 2);
    let t = jacobson_morozov(&e, &gl3)?;
    println!("regular nilpotent in gl3:\n  h = {:?}\n  f = {:?}", t.h, t.f);

    let lambda = adapted_cocharacter(&t)?;
    println!("weights of the adapted cocharacter: {:?}", lambda.weights());
    for (w, piece) in weight_grading(&lambda, &gl3)? {
        println!("  weight {w:>2}: dimension {}", piece.dim());
    }

    // a triple whose h is fixed by g with Ad(g)e = 4e
    let g = Matrix::diag(&k, &[k.from_int(8), k.from_int(2), k.from_int(1)]);
    let e2 = Matrix::unit(&k, 3, 0, 1);
    let t2 = commuting_sl2(&e2, &g, &k.from_int(4), &gl3)?;
    println!("commuting triple for E12: h = {:?}", t2.h);

    let lambda2 = adapted_cocharacter(&t2)?;
    for (n, piece) in lowest_weight_split(&e2, &lambda2, &gl3)? {
        println!(
            "  g_{n}: {} = {} lowest-weight + {} image",
            piece.graded.dim(),
            piece.lowest_weight.dim(),
            piece.image.dim()
        );
    }
    Ok(())
}
