//! JSON forms of fields, elements, matrices, triples, cocharacters and certificates.
//!
//! Rationals are canonical strings (`"3"`, `"-7/4"`). A field element that happens
//! to be rational is written as such a string, any other element as the array of
//! its power-basis coordinates. A matrix is a row-major array of rows.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactfield::{format_rational, parse_rational, Field, FieldElement, RationalPoly};
use crate::linalg::Matrix;
use crate::matgroup::{GroupKind, GroupSpec};
use crate::sl2::Cocharacter;
use crate::walk::{MoveFamily, WalkCertificate, WalkMove};
use crate::wd::{CohomologyReport, InertialData, InertialElement, WDTriple};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing key {key:?}")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn rational_from(v: &Value) -> Result<crate::exactfield::Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(crate::exactfield::rat(n.as_i64().unwrap())),
        _ => Err(parse_err(format!("expected a rational string, got {v}"))),
    }
}

pub fn field_to_json(k: &Field) -> Value {
    json!({ "min_poly": k.minimal_polynomial().coeffs().iter().map(format_rational).collect::<Vec<_>>() })
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let coeffs = as_array(get(v, "min_poly")?, "min_poly")?
        .iter()
        .map(rational_from)
        .collect::<Result<Vec<_>>>()?;
    Field::new(RationalPoly::new(coeffs))
}

pub fn element_to_json(x: &FieldElement) -> Value {
    if let Some(r) = x.to_rational() {
        return Value::String(format_rational(&r));
    }
    Value::Array(x.coords().iter().map(|c| Value::String(format_rational(c))).collect())
}

/// Accepts either form written by [`element_to_json`].
pub fn element_from_json(k: &Field, v: &Value) -> Result<FieldElement> {
    match v {
        Value::Array(items) => {
            if items.len() > k.degree() {
                return Err(parse_err(format!("element has {} coordinates, field degree is {}", items.len(), k.degree())));
            }
            Ok(k.element(items.iter().map(rational_from).collect::<Result<Vec<_>>>()?))
        }
        other => Ok(k.from_rational(rational_from(other)?)),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(element_to_json).collect())).collect())
}

pub fn matrix_from_json(k: &Field, v: &Value) -> Result<Matrix> {
    let rows = as_array(v, "matrix")?
        .iter()
        .map(|r| as_array(r, "matrix row")?.iter().map(|x| element_from_json(k, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.is_empty() || rows.iter().any(|r| r.len() != cols) {
        return Err(parse_err("matrix must be a nonempty rectangular array"));
    }
    Ok(Matrix::from_rows(k, rows))
}

pub fn group_to_json(g: &GroupSpec) -> Value {
    match g.kind() {
        GroupKind::GeneralLinear(n) => json!({ "kind": "GL", "n": n }),
        GroupKind::SpecialLinear(n) => json!({ "kind": "SL", "n": n }),
        GroupKind::FormStabilizer(n, b) => json!({ "kind": "Form", "n": n, "form": matrix_to_json(b) }),
    }
}

pub fn group_from_json(k: &Field, v: &Value) -> Result<GroupSpec> {
    let n = get(v, "n")?.as_u64().ok_or_else(|| parse_err("group n must be a positive integer"))? as usize;
    if n == 0 {
        return Err(parse_err("group n must be positive"));
    }
    let kind = match get(v, "kind")?.as_str() {
        Some("GL") => GroupKind::GeneralLinear(n),
        Some("SL") => GroupKind::SpecialLinear(n),
        Some("Form") => GroupKind::FormStabilizer(n, matrix_from_json(k, get(v, "form")?)?),
        other => return Err(parse_err(format!("unknown group kind {other:?}"))),
    };
    GroupSpec::new(kind, k)
}

pub fn inertial_to_json(t: &InertialData) -> Value {
    let elements: Vec<Value> =
        t.elements().iter().map(|e| json!({ "label": e.label, "matrix": matrix_to_json(&e.matrix) })).collect();
    let mut sigma = Map::new();
    for (a, b) in t.sigma_map() {
        sigma.insert(a, Value::String(b));
    }
    json!({ "elements": elements, "sigma": sigma })
}

pub fn inertial_from_json(k: &Field, v: &Value) -> Result<InertialData> {
    let elements = as_array(get(v, "elements")?, "elements")?
        .iter()
        .map(|e| {
            let label = get(e, "label")?.as_str().ok_or_else(|| parse_err("label must be a string"))?.to_string();
            Ok(InertialElement { label, matrix: matrix_from_json(k, get(e, "matrix")?)? })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sigma = HashMap::new();
    if let Some(s) = v.get("sigma") {
        let obj = s.as_object().ok_or_else(|| parse_err("sigma must be an object"))?;
        for (a, b) in obj {
            let b = b.as_str().ok_or_else(|| parse_err("sigma values must be labels"))?;
            sigma.insert(a.clone(), b.to_string());
        }
    }
    InertialData::new(elements, &sigma)
}

/// A named triple as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub name: Option<String>,
    pub seed: Option<u64>,
    pub triple: WDTriple,
}

impl Scenario {
    pub fn new(name: impl Into<String>, triple: WDTriple) -> Self {
        Scenario { name: Some(name.into()), seed: None, triple }
    }

    pub fn display_name(&self) -> String {
        self.name.clone().unwrap_or_else(|| "unnamed".into())
    }

    pub fn to_json(&self) -> Value {
        let d = &self.triple;
        let mut m = Map::new();
        if let Some(name) = &self.name {
            m.insert("name".into(), Value::String(name.clone()));
        }
        if let Some(seed) = self.seed {
            m.insert("seed".into(), json!(seed));
        }
        m.insert("field".into(), field_to_json(d.group.field()));
        m.insert("q".into(), element_to_json(&d.q));
        m.insert("sqrt_q".into(), element_to_json(&d.sqrt_q));
        m.insert("group".into(), group_to_json(&d.group));
        m.insert("inertial".into(), inertial_to_json(&d.inertial));
        m.insert("Phi".into(), matrix_to_json(&d.phi));
        m.insert("N".into(), matrix_to_json(&d.nilpotent));
        Value::Object(m)
    }

    /// Structural parse only; call [`WDTriple::validate`] for the conditions.
    pub fn from_json(v: &Value) -> Result<Self> {
        let k = field_from_json(get(v, "field")?)?;
        let group = group_from_json(&k, get(v, "group")?)?;
        let n = group.n();
        let q = element_from_json(&k, get(v, "q")?)?;
        let sqrt_q = element_from_json(&k, get(v, "sqrt_q")?)?;
        let inertial = match v.get("inertial") {
            Some(t) => inertial_from_json(&k, t)?,
            None => InertialData::trivial(&k, n),
        };
        let phi = matrix_from_json(&k, get(v, "Phi")?)?;
        let nilpotent = matrix_from_json(&k, get(v, "N")?)?;
        let name = v.get("name").and_then(|x| x.as_str()).map(str::to_string);
        let seed = v.get("seed").and_then(|x| x.as_u64());
        Ok(Scenario { name, seed, triple: WDTriple { group, phi, nilpotent, inertial, q, sqrt_q } })
    }

    pub fn from_str(s: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(s)?)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize")
    }

    pub fn load(path: impl AsRef<std::path::Path>) -> Result<Self> {
        Self::from_str(&std::fs::read_to_string(path)?)
    }
}

pub fn cohomology_to_json(r: &CohomologyReport) -> Value {
    json!({ "gamma": r.gamma, "h0": r.h0, "h1": r.h1, "h2": r.h2 })
}

pub fn cohomology_from_json(v: &Value) -> Result<CohomologyReport> {
    let n = |key: &str| -> Result<usize> {
        get(v, key)?.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(format!("{key} must be a count")))
    };
    Ok(CohomologyReport { gamma: n("gamma")?, h0: n("h0")?, h1: n("h1")?, h2: n("h2")?, d0: None, d1: None })
}

pub fn cocharacter_to_json(l: &Cocharacter) -> Value {
    json!({
        "weights": l.weights(),
        "projectors": l.projectors().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// Unchecked: the certificate checker validates the parts.
pub fn cocharacter_from_json(k: &Field, v: &Value) -> Result<Cocharacter> {
    let weights = as_array(get(v, "weights")?, "weights")?
        .iter()
        .map(|w| w.as_i64().ok_or_else(|| parse_err("weights must be integers")))
        .collect::<Result<Vec<_>>>()?;
    let projectors = as_array(get(v, "projectors")?, "projectors")?
        .iter()
        .map(|p| matrix_from_json(k, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cocharacter::from_parts_unchecked(weights, projectors))
}

fn move_to_json(m: &WalkMove) -> Value {
    let witnesses = match &m.family {
        MoveFamily::UnipotentLine { left, log, right } => {
            json!({ "left": matrix_to_json(left), "log": matrix_to_json(log), "right": matrix_to_json(right) })
        }
        MoveFamily::CocharScale { base, cocharacter } => {
            json!({ "base": matrix_to_json(base), "cocharacter": cocharacter_to_json(cocharacter) })
        }
        MoveFamily::CocharInterpolation { base, lambda, lambda_prime, shift } => json!({
            "base": matrix_to_json(base),
            "lambda": cocharacter_to_json(lambda),
            "lambda_prime": cocharacter_to_json(lambda_prime),
            "shift": element_to_json(shift),
        }),
    };
    json!({
        "kind": m.family.kind(),
        "witnesses": witnesses,
        "t": { "from": element_to_json(&m.from), "to": element_to_json(&m.to) },
        "start": matrix_to_json(&m.start),
        "end": matrix_to_json(&m.end),
    })
}

fn move_from_json(k: &Field, v: &Value) -> Result<WalkMove> {
    let w = get(v, "witnesses")?;
    let mat = |key: &str| matrix_from_json(k, get(w, key)?);
    let family = match get(v, "kind")?.as_str() {
        Some("UnipotentLine") => MoveFamily::UnipotentLine { left: mat("left")?, log: mat("log")?, right: mat("right")? },
        Some("CocharScale") => {
            MoveFamily::CocharScale { base: mat("base")?, cocharacter: cocharacter_from_json(k, get(w, "cocharacter")?)? }
        }
        Some("CocharInterpolation") => MoveFamily::CocharInterpolation {
            base: mat("base")?,
            lambda: cocharacter_from_json(k, get(w, "lambda")?)?,
            lambda_prime: cocharacter_from_json(k, get(w, "lambda_prime")?)?,
            shift: element_from_json(k, get(w, "shift")?)?,
        },
        other => return Err(parse_err(format!("unknown move kind {other:?}"))),
    };
    let t = get(v, "t")?;
    Ok(WalkMove {
        family,
        from: element_from_json(k, get(t, "from")?)?,
        to: element_from_json(k, get(t, "to")?)?,
        start: matrix_from_json(k, get(v, "start")?)?,
        end: matrix_from_json(k, get(v, "end")?)?,
    })
}

pub fn certificate_to_json(c: &WalkCertificate, name: Option<&str>) -> Value {
    let initial = Scenario { name: name.map(str::to_string), seed: None, triple: c.initial.clone() };
    json!({
        "initial": initial.to_json(),
        "moves": c.moves.iter().map(move_to_json).collect::<Vec<_>>(),
        "final_phi": matrix_to_json(&c.final_phi),
        "final_report": cohomology_to_json(&c.final_report),
    })
}

pub fn certificate_from_json(v: &Value) -> Result<WalkCertificate> {
    let initial = Scenario::from_json(get(v, "initial")?)?.triple;
    let k = initial.group.field().clone();
    let moves = as_array(get(v, "moves")?, "moves")?.iter().map(|m| move_from_json(&k, m)).collect::<Result<Vec<_>>>()?;
    Ok(WalkCertificate {
        initial,
        moves,
        final_phi: matrix_from_json(&k, get(v, "final_phi")?)?,
        final_report: cohomology_from_json(get(v, "final_report")?)?,
    })
}
