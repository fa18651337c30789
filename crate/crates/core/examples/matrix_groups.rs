//! Lie algebras, adjoint operators, invariants and the Jordan-Chevalley decomposition.

use wdwalk::matgroup::{
    ad_operator, invariant_subalgebra, jordan_chevalley, lie_algebra_basis, log_unipotent, GroupKind, GroupSpec,
    LieSubspace,
};
use wdwalk::{Field, Matrix};

fn main() -> wdwalk::Result<()> {
    let k = Field::rationals();
    let symplectic = GroupSpec::new(GroupKind::FormStabilizer(2, Matrix::from_ints(&k, &[&[0, 1], &[-1, 0]])), &k)?;
    for (name, g) in [("gl2", GroupSpec::gl(&k, 2)), ("sl2", GroupSpec::sl(&k, 2)), ("sp2", symplectic)] {
        println!("dim Lie({name}) = {}", lie_algebra_basis(&g).dim());
    }

    let gl2 = LieSubspace::full(&k, 2);
    let phi = Matrix::diag(&k, &[k.from_int(1), k.from_int(4)]);
    let ad = ad_operator(&phi, &gl2)?;
    println!("Ad(diag(1, 4)) has characteristic polynomial {}", ad.charpoly());

    let rotation = Matrix::from_ints(&k, &[&[0, -1], &[1, -1]]);
    let fixed = invariant_subalgebra(&[rotation.clone(), &rotation * &rotation], &gl2)?;
    println!("invariants of the order-3 rotation: dimension {}", fixed.dim());
    for b in fixed.basis() {
        println!("  {b:?}");
    }

    let m = Matrix::from_ints(&k, &[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
    let (s, u) = jordan_chevalley(&m)?;
    println!("semisimple part {s:?}");
    println!("unipotent part {u:?}, log {:?}", log_unipotent(&u)?);
    Ok(())
}
