use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wdwalk::scenario::{generate_scenario, parse_t_candidates, run_command, Command, RunOptions, Template};
use wdwalk::walk::WalkConfig;
use wdwalk::Error;

#[derive(Parser)]
#[command(name = "wdwalk", version, about = "Deformation cohomology and unobstructing walks for Weil–Deligne triples")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Output format; JSON is the only one.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(clap::Args)]
struct ScenarioArgs {
    #[arg(long)]
    scenario: PathBuf,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the defining conditions of a triple.
    Validate(ScenarioArgs),
    /// Dimensions of the deformation cohomology.
    Cohomology(ScenarioArgs),
    /// Dimension and a basis of the first-order lifts.
    Tangent(ScenarioArgs),
    /// Walk to an unobstructed point and emit a certificate.
    Unobstruct {
        #[arg(long)]
        scenario: PathBuf,
        /// Certificate path; the report always goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "2,3,5,7,11,13")]
        t_candidates: String,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Check a certificate produced by `unobstruct`.
    Verify {
        #[arg(long, required_unless_present = "scenario")]
        certificate: Option<PathBuf>,
        /// Accepted as an alias for --certificate.
        #[arg(long, conflicts_with = "certificate")]
        scenario: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a random valid scenario as JSON.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        q: u64,
        #[arg(long, default_value = "trivial")]
        template: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, Error> {
    let Format::Json = cli.format;
    let (command, input, report_out, options) = match cli.command {
        Cmd::Generate { seed, n, q, template, out } => {
            let g = generate_scenario(seed, n, q, template.parse::<Template>()?)?;
            emit(&g.scenario.to_json(), out.as_ref())?;
            return Ok(0);
        }
        Cmd::Validate(a) => (Command::Validate, a.scenario, a.out, RunOptions::default()),
        Cmd::Cohomology(a) => (Command::Cohomology, a.scenario, a.out, RunOptions::default()),
        Cmd::Tangent(a) => (Command::Tangent, a.scenario, a.out, RunOptions::default()),
        Cmd::Verify { certificate, scenario, out } => {
            (Command::Verify, certificate.or(scenario).expect("clap enforces one"), out, RunOptions::default())
        }
        Cmd::Unobstruct { scenario, out, t_candidates, max_steps } => {
            let walk = WalkConfig { t_candidates: parse_t_candidates(&t_candidates)?, max_steps };
            (Command::Unobstruct, scenario, None, RunOptions { certificate_out: out, walk })
        }
    };
    let report = run_command(command, &input, &options)?;
    emit(&report.to_json(true), report_out.as_ref())?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let err = json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            println!("{}", serde_json::to_string_pretty(&err).expect("JSON values serialize"));
            ExitCode::from(1)
        }
    }
}
