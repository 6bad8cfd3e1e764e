//! JSON schemas for rings, matrices and certificates.
//!
//! Serialization is canonical: fixed field order, canonical entry strings,
//! sorted route parameters and a fixed layout. Parsing followed
//! by serialization therefore reproduces canonical input byte for byte.

use std::collections::BTreeMap;
use std::str::FromStr;

use idemprod_core::ring::RingDescriptor;
use idemprod_core::{Factorization, Matrix, Ring, Route, RouteTag};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub ring: RingJson,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RouteJson {
    pub tag: String,
    #[serde(default)]
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub target: MatrixJson,
    pub route: RouteJson,
    pub factors: Vec<MatrixJson>,
}

pub fn ring_to_json(ring: &Ring) -> RingJson {
    match ring.descriptor() {
        RingDescriptor::Rationals => RingJson {
            kind: "rationals".into(),
            modulus: None,
            variables: None,
        },
        RingDescriptor::IntegersMod { modulus } => {
            // small moduli are plain JSON numbers, larger ones strings
            let modulus = match u64::try_from(modulus) {
                Ok(m) => Value::from(m),
                Err(_) => Value::from(modulus.to_string()),
            };
            RingJson {
                kind: "integers-mod-n".into(),
                modulus: Some(modulus),
                variables: None,
            }
        }
        RingDescriptor::Polynomial { variables } => RingJson {
            kind: "polynomial-over-rationals".into(),
            modulus: None,
            variables: Some(variables.clone()),
        },
    }
}

pub fn ring_from_json(json: &RingJson) -> Result<Ring, CliError> {
    let descriptor = match (json.kind.as_str(), &json.modulus, &json.variables) {
        ("rationals", None, None) => RingDescriptor::Rationals,
        ("integers-mod-n", Some(m), None) => {
            let modulus = match m {
                Value::Number(n) => n.as_u64().map(BigUint::from),
                Value::String(s) => BigUint::from_str(s).ok(),
                _ => None,
            }
            .ok_or_else(|| CliError::Parse(format!("bad modulus {m}")))?;
            RingDescriptor::IntegersMod { modulus }
        }
        ("polynomial-over-rationals", None, Some(vars)) => RingDescriptor::Polynomial { variables: vars.clone() },
        (kind, _, _) => return Err(CliError::Parse(format!("bad ring descriptor of kind {kind:?}"))),
    };
    Ok(Ring::new(descriptor)?)
}

/// Parses `q`, `rationals`, `zmod:n` or `poly:X,Y`.
pub fn ring_from_spec(spec: &str) -> Result<Ring, CliError> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("q") || spec == "rationals" {
        return Ok(Ring::rationals());
    }
    if let Some(m) = spec.strip_prefix("zmod:") {
        let m = BigUint::from_str(m.trim()).map_err(|_| CliError::Parse(format!("bad modulus in {spec:?}")))?;
        return Ok(Ring::integers_mod(m)?);
    }
    if let Some(vars) = spec.strip_prefix("poly:") {
        let vars: Vec<&str> = vars.split(',').map(str::trim).collect();
        return Ok(Ring::polynomial(&vars)?);
    }
    Err(CliError::Parse(format!("unknown ring {spec:?}; expected q, zmod:n or poly:X,Y")))
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    MatrixJson {
        ring: ring_to_json(m.ring()),
        rows: m.to_strings(),
    }
}

pub fn matrix_from_json(json: &MatrixJson) -> Result<Matrix, CliError> {
    let ring = ring_from_json(&json.ring)?;
    if json.rows.is_empty() {
        return Err(CliError::Parse("matrix has no rows".into()));
    }
    Ok(Matrix::parse(&ring, &json.rows)?)
}

pub fn route_to_json(route: &Route) -> RouteJson {
    RouteJson {
        tag: route.tag.as_str().into(),
        params: route.params.clone(),
    }
}

pub fn route_from_json(json: &RouteJson) -> Result<Route, CliError> {
    Ok(Route {
        tag: RouteTag::from_str(&json.tag)?,
        params: json.params.clone(),
    })
}

pub fn certificate_to_json(f: &Factorization) -> CertificateJson {
    CertificateJson {
        target: matrix_to_json(f.target()),
        route: route_to_json(f.route()),
        factors: f.factors().iter().map(matrix_to_json).collect(),
    }
}

/// Reads a certificate without verifying it; every factor is kept as given.
pub fn certificate_from_json(json: &CertificateJson) -> Result<Factorization, CliError> {
    let target = matrix_from_json(&json.target)?;
    let factors = json.factors.iter().map(matrix_from_json).collect::<Result<_, _>>()?;
    Ok(Factorization::from_parts(target, factors, route_from_json(&json.route)?))
}

/// Two-space indented JSON where arrays of scalars stay on one line, so each
/// matrix row reads as a row. Ends with a newline.
pub fn to_canonical<T: Serialize>(value: &T) -> String {
    let mut out = String::new();
    write_value(&serde_json::to_value(value).expect("serializable"), 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !(v.is_array() || v.is_object())
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (k, (key, item)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::from(key.as_str()).to_string());
                out.push_str(": ");
                write_value(item, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn from_text<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

pub fn parse_matrix(text: &str) -> Result<Matrix, CliError> {
    matrix_from_json(&from_text(text, "matrix")?)
}

pub fn parse_certificate(text: &str) -> Result<Factorization, CliError> {
    certificate_from_json(&from_text(text, "certificate")?)
}

pub fn matrix_text(m: &Matrix) -> String {
    to_canonical(&matrix_to_json(m))
}

pub fn certificate_text(f: &Factorization) -> String {
    to_canonical(&certificate_to_json(f))
}
