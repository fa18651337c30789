//! Cohomology of the deformation complex and first- and second-order lifts.

use wdwalk::scenario::Scenario;
use wdwalk::wd::{deformation_complex, first_order_lifts, second_order_extend, SecondOrder};

fn main() -> wdwalk::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/scenarios");
    for name in ["steinberg_gl2", "quarter_gl2", "obstructed_gl3", "rotation_inverted_gl2", "sqrt2_gl2"] {
        let s = Scenario::load(format!("{dir}/{name}.json"))?;
        let d = &s.triple;
        let c = deformation_complex(d)?;
        let lifts = first_order_lifts(d)?;
        let mut extended = 0;
        for (a, b) in &lifts.basis {
            if let SecondOrder::Extended { .. } = second_order_extend(d, a, b)? {
                extended += 1;
            }
        }
        println!(
            "{name:<22} gamma={} h0={} h1={} h2={}  lifts={} (extend to second order: {extended})",
            c.gamma, c.h0, c.h1, c.h2, lifts.dimension
        );
    }
    Ok(())
}
