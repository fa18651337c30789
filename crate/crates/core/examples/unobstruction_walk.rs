//! Walking an obstructed triple to an unobstructed point in its fiber.

use wdwalk::scenario::Scenario;
use wdwalk::walk::{unobstruct, WalkConfig, WalkTrace};
use wdwalk::wd::deformation_complex;

fn main() -> wdwalk::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios");
    for name in ["quarter_gl2", "obstructed_gl3"] {
        let d = Scenario::load(format!("{dir}/{name}.json"))?.triple;
        println!("{name}: h2 = {}", deformation_complex(&d)?.h2);
        let out = unobstruct(&d, &WalkConfig::default())?;
        match &out.trace {
            WalkTrace::AlreadyUnobstructed => println!("  already unobstructed"),
            WalkTrace::Case1(steps) => {
                for s in steps {
                    println!("  scale at t = {}: kernel {} -> {}", s.t, s.kernel_before, s.kernel_after);
                }
            }
            WalkTrace::Case2(t) => println!("  Psi = {:?}, finite order: {}", t.point.psi, t.finite_order),
        }
        for m in &out.certificate.moves {
            println!("  {} from t = {} to t = {}", m.family.kind(), m.from, m.to);
        }
        let end = d.with_phi(out.certificate.final_phi.clone());
        println!("  final Phi = {:?}, h2 = {}", end.phi, deformation_complex(&end)?.h2);
    }
    Ok(())
}
