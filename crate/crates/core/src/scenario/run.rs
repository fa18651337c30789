use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactfield::{parse_rational, Rational};
use crate::walk::{unobstruct, verify_certificate, WalkConfig, WalkTrace};
use crate::wd::{first_order_lifts, validate_triple, CohomologyReport, Fiber};

use super::json::{certificate_from_json, certificate_to_json, cohomology_to_json, matrix_to_json, Scenario};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Cohomology,
    Unobstruct,
    Verify,
    Tangent,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Cohomology => "cohomology",
            Command::Unobstruct => "unobstruct",
            Command::Verify => "verify",
            Command::Tangent => "tangent",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// For `unobstruct`, where the certificate is written.
    pub certificate_out: Option<PathBuf>,
    pub walk: WalkConfig,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Invalid,
    Obstructed,
    WalkFailed(String),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Ok => "ok",
            Outcome::Invalid => "invalid",
            Outcome::Obstructed => "obstructed",
            Outcome::WalkFailed(_) => "walk_failed",
        }
    }
}

/// Result of one command. Everything except `timing_ms` is a function of the
/// input file and the options.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: Command,
    pub scenario: Option<String>,
    pub outcome: Outcome,
    pub cohomology: Option<CohomologyReport>,
    pub certificate: Option<Value>,
    pub details: Value,
    pub timing_ms: u128,
}

impl RunReport {
    /// `obstructed` is a successful answer to `cohomology`, so it exits 0.
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Ok | Outcome::Obstructed => 0,
            Outcome::Invalid | Outcome::WalkFailed(_) => 1,
        }
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command.name()));
        m.insert("scenario".into(), json!(self.scenario));
        m.insert("outcome".into(), json!(self.outcome.label()));
        if let Outcome::WalkFailed(reason) = &self.outcome {
            m.insert("reason".into(), json!(reason));
        }
        if let Some(c) = &self.cohomology {
            m.insert("cohomology".into(), cohomology_to_json(c));
        }
        if let Some(c) = &self.certificate {
            m.insert("certificate".into(), c.clone());
        }
        if !self.details.is_null() {
            m.insert("details".into(), self.details.clone());
        }
        if with_timing {
            m.insert("timing_ms".into(), json!(self.timing_ms as u64));
        }
        Value::Object(m)
    }
}

/// Parses a comma-separated list such as `"2,3,5/2"`.
pub fn parse_t_candidates(s: &str) -> Result<Vec<Rational>> {
    let list = s.split(',').map(|x| parse_rational(x.trim())).collect::<Result<Vec<_>>>()?;
    if list.is_empty() {
        return Err(Error::Parse("empty t-candidate list".into()));
    }
    Ok(list)
}

fn violations_json(s: &Scenario) -> Vec<Value> {
    validate_triple(&s.triple).iter().map(|v| json!({ "kind": v.kind(), "message": v.to_string() })).collect()
}

fn trace_label(t: &WalkTrace) -> &'static str {
    match t {
        WalkTrace::AlreadyUnobstructed => "already_unobstructed",
        WalkTrace::Case1(_) => "case1",
        WalkTrace::Case2(_) => "case2",
    }
}

/// Runs `command` on the file at `input`: a certificate for `verify`, a scenario
/// otherwise. Errors are returned only for unreadable input; failures of the
/// mathematics are reported through [`Outcome`].
pub fn run_command(command: Command, input: &Path, options: &RunOptions) -> Result<RunReport> {
    let started = Instant::now();
    let text = std::fs::read_to_string(input)?;
    let mut report = RunReport {
        command,
        scenario: None,
        outcome: Outcome::Ok,
        cohomology: None,
        certificate: None,
        details: Value::Null,
        timing_ms: 0,
    };

    if command == Command::Verify {
        let value: Value = serde_json::from_str(&text)?;
        report.scenario = value.pointer("/initial/name").and_then(Value::as_str).map(str::to_string);
        let cert = certificate_from_json(&value)?;
        let verdict = verify_certificate(&cert);
        report.outcome = if verdict.valid { Outcome::Ok } else { Outcome::Invalid };
        report.cohomology = Some(cert.final_report.clone());
        report.details = json!({ "valid": verdict.valid, "checks": verdict.checks, "failure": verdict.failure });
        report.timing_ms = started.elapsed().as_millis();
        return Ok(report);
    }

    let scenario = Scenario::from_str(&text)?;
    report.scenario = scenario.name.clone();
    let violations = violations_json(&scenario);
    if !violations.is_empty() {
        report.outcome = Outcome::Invalid;
        report.details = json!({ "violations": violations });
        report.timing_ms = started.elapsed().as_millis();
        return Ok(report);
    }
    let d = &scenario.triple;

    match command {
        Command::Validate => report.details = json!({ "violations": [] }),
        Command::Cohomology => {
            let c = Fiber::new(d)?.cohomology(&d.phi)?.without_differentials();
            if c.h2 > 0 {
                report.outcome = Outcome::Obstructed;
            }
            report.cohomology = Some(c);
        }
        Command::Tangent => {
            let lifts = first_order_lifts(d)?;
            let basis: Vec<Value> =
                lifts.basis.iter().map(|(a, b)| json!({ "a": matrix_to_json(a), "b": matrix_to_json(b) })).collect();
            report.details = json!({ "dimension": lifts.dimension, "basis": basis });
        }
        Command::Unobstruct => match unobstruct(d, &options.walk) {
            Ok(outcome) => {
                let cert = certificate_to_json(&outcome.certificate, scenario.name.as_deref());
                if let Some(path) = &options.certificate_out {
                    std::fs::write(path, serde_json::to_string_pretty(&cert)? + "\n")?;
                }
                report.cohomology = Some(outcome.certificate.final_report.without_differentials());
                report.details = json!({
                    "case": trace_label(&outcome.trace),
                    "moves": outcome.certificate.moves.len(),
                });
                if options.certificate_out.is_none() {
                    report.certificate = Some(cert);
                }
            }
            Err(e) => report.outcome = Outcome::WalkFailed(format!("{}: {e}", e.kind())),
        },
        Command::Verify => unreachable!(),
    }
    report.timing_ms = started.elapsed().as_millis();
    Ok(report)
}
