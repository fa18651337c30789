//! Random valid triples from seeds, and how often they are obstructed.

use wdwalk::scenario::{generate_scenario, Template};
use wdwalk::wd::deformation_complex;
use wdwalk::Error;

fn main() -> wdwalk::Result<()> {
    let templates = [Template::Trivial, Template::Cyclic(2), Template::Cyclic(3), Template::Cyclic(4), Template::Cyclic(6)];
    for template in templates {
        let (mut total, mut obstructed, mut infeasible) = (0, 0, 0);
        for seed in 0..40 {
            match generate_scenario(seed, 3, 4, template) {
                Ok(g) => {
                    total += 1;
                    if deformation_complex(&g.scenario.triple)?.h2 > 0 {
                        obstructed += 1;
                    }
                }
                Err(Error::GenerationInfeasible(_)) => infeasible += 1,
                Err(e) => return Err(e),
            }
        }
        println!("{template:<10} n=3 q=4: {total} generated, {obstructed} obstructed, {infeasible} infeasible");
    }
    let g = generate_scenario(11, 2, 5, Template::Trivial)?;
    println!("\n{}", g.scenario.to_string_pretty());
    Ok(())
}
