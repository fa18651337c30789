//! Scenario files, the random scenario generator and the command runner behind the
//! `wdwalk` binary.

mod generate;
pub mod json;
mod run;

pub use generate::{field_for_q, generate_scenario, GeneratedScenario, Template};
pub use json::Scenario;
pub use run::{parse_t_candidates, run_command, Command, Outcome, RunOptions, RunReport};
