//! JSON interchange:
//!
//! ```json
//! {"m": 2, "terms": [{"exps": {"x1": 2}, "mv": {"1": "1", "e12": "-1/2"}}]}
//! ```
//!
//! Terms follow the monomial order, blades the blade order, and every
//! rational is a string.

use serde_json::{json, Map, Value};

use super::parse::{parse_blade, parse_rational};
use super::print::blade_name;
use crate::clifford::{Dim, Multivector};
use crate::error::{CkError, Result};
use crate::mvpoly::{CliffordPolynomial, Monomial, Variable};

pub fn to_json(f: &CliffordPolynomial) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(monomial, coeff)| {
            let exps: Map<String, Value> = monomial
                .exponents()
                .iter()
                .map(|(v, e)| (v.to_string(), json!(e)))
                .collect();
            let mv: Map<String, Value> = coeff
                .terms()
                .map(|(b, c)| (blade_name(b), Value::String(c.to_string())))
                .collect();
            json!({ "exps": exps, "mv": mv })
        })
        .collect();
    json!({ "m": f.dim().get(), "terms": terms })
}

pub fn to_json_string(f: &CliffordPolynomial) -> String {
    to_json(f).to_string()
}

fn err(path: impl Into<String>, message: impl Into<String>) -> CkError {
    CkError::Json {
        path: path.into(),
        message: message.into(),
    }
}

fn parse_variable(name: &str, dim: Dim) -> Option<Variable> {
    let (head, digits) = name.split_at(name.len().min(1));
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return None;
    }
    let j: usize = digits.parse().ok()?;
    let v = match (head, j) {
        ("x", 0) => Variable::X0,
        ("x", j) => Variable::x(j.min(255)),
        ("u", j) => Variable::u(j.min(255)),
        _ => return None,
    };
    v.validate(dim).ok()
}

pub fn from_json(doc: &Value) -> Result<CliffordPolynomial> {
    let obj = doc
        .as_object()
        .ok_or_else(|| err("$", "expected an object"))?;
    for key in obj.keys() {
        if key != "m" && key != "terms" {
            return Err(err(format!("$.{key}"), "unknown field"));
        }
    }
    let m = obj
        .get("m")
        .ok_or_else(|| err("$.m", "missing field"))?
        .as_u64()
        .ok_or_else(|| err("$.m", "expected a positive integer"))?;
    let dim = Dim::new(m as usize).map_err(|e| err("$.m", e.to_string()))?;
    let terms = obj
        .get("terms")
        .ok_or_else(|| err("$.terms", "missing field"))?
        .as_array()
        .ok_or_else(|| err("$.terms", "expected an array"))?;

    let mut out = Vec::with_capacity(terms.len());
    for (i, term) in terms.iter().enumerate() {
        let path = format!("$.terms[{i}]");
        let term = term
            .as_object()
            .ok_or_else(|| err(&path, "expected an object"))?;
        for key in term.keys() {
            if key != "exps" && key != "mv" {
                return Err(err(format!("{path}.{key}"), "unknown field"));
            }
        }
        let exps = term
            .get("exps")
            .ok_or_else(|| err(format!("{path}.exps"), "missing field"))?
            .as_object()
            .ok_or_else(|| err(format!("{path}.exps"), "expected an object"))?;
        let mut pairs = Vec::with_capacity(exps.len());
        for (name, e) in exps {
            let epath = format!("{path}.exps.{name}");
            let v = parse_variable(name, dim)
                .ok_or_else(|| err(&epath, format!("unknown variable for m = {m}")))?;
            let e = e
                .as_u64()
                .filter(|&e| e >= 1 && e <= u32::MAX as u64)
                .ok_or_else(|| err(&epath, "expected a positive integer exponent"))?;
            pairs.push((v, e as u32));
        }

        let mv = term
            .get("mv")
            .ok_or_else(|| err(format!("{path}.mv"), "missing field"))?
            .as_object()
            .ok_or_else(|| err(format!("{path}.mv"), "expected an object"))?;
        let mut blades = Vec::with_capacity(mv.len());
        for (name, c) in mv {
            let cpath = format!("{path}.mv.{name}");
            let blade = parse_blade(name, dim).map_err(|e| err(&cpath, e.kind.to_string()))?;
            let text = c
                .as_str()
                .ok_or_else(|| err(&cpath, "expected a rational string"))?;
            let value = parse_rational(text).map_err(|e| err(&cpath, e.kind.to_string()))?;
            blades.push((blade, value));
        }
        let coeff = Multivector::from_terms(dim, blades)
            .map_err(|e| err(format!("{path}.mv"), e.to_string()))?;
        out.push((Monomial::from_exponents(pairs), coeff));
    }
    CliffordPolynomial::from_terms(dim, out)
}

pub fn from_json_str(text: &str) -> Result<CliffordPolynomial> {
    let doc: Value = serde_json::from_str(text).map_err(|e| err("$", e.to_string()))?;
    from_json(&doc)
}
