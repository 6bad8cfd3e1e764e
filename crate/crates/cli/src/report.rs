//! JSON records for the non-certificate commands.

use idemprod_core::oracle::{MatrixSet, OmearaReport};
use idemprod_core::tnn::{CounterexampleReport, Minor, StabilizerResult};
use idemprod_core::{Elem, Matrix, Ring, RingElement};
use serde_json::{json, Value};

use crate::format::{matrix_to_json, ring_to_json};

fn minor_json(ring: &Ring, m: &Minor) -> Value {
    json!({ "rows": m.rows, "cols": m.cols, "value": ring.format(&m.value) })
}

pub fn stabilizer_json(s: &StabilizerResult) -> Value {
    json!({
        "status": s.status.as_str(),
        "forced_rows": s.forced_rows(),
        "witness": s.witness.as_ref().map(matrix_to_json),
    })
}

pub fn tnn_json(a: &Matrix, minor: Option<&Minor>, determinant: &Elem, s: &StabilizerResult) -> Value {
    let ring = a.ring();
    json!({
        "tnn": minor.is_none(),
        "determinant": ring.format(determinant),
        "stabilizer": s.status.as_str(),
        "forced_rows": s.forced_rows(),
        "first_negative_minor": minor.map(|m| minor_json(ring, m)),
        "witness": s.witness.as_ref().map(matrix_to_json),
    })
}

pub fn counterexample_json(alpha: &RingElement, r: &CounterexampleReport) -> Value {
    let mut v = tnn_json(&r.matrix, r.first_negative_minor.as_ref(), &r.determinant, &r.stabilizer);
    let obj = v.as_object_mut().expect("object");
    obj.insert("alpha".into(), json!(alpha.to_string()));
    obj.insert("matrix".into(), serde_json::to_value(matrix_to_json(&r.matrix)).expect("serializable"));
    obj.insert("verified".into(), json!(r.verified()));
    v
}

pub fn omeara_json(a: &Matrix, r: &OmearaReport) -> Value {
    json!({
        "matrix": matrix_to_json(a),
        "lann_ideal_full": r.left_ideal_full,
        "rann_ideal_full": r.right_ideal_full,
        "unit_ideal_full": r.unit_ideal,
        "ideals_equal": r.equal,
        "sizes": {
            "space": r.space_size.to_string(),
            "lann": r.lann_size,
            "rann": r.rann_size,
            "lann_ideal": r.left_ideal_size,
            "rann_ideal": r.right_ideal_size,
            "unit_ideal": r.unit_ideal_size,
        },
    })
}

pub fn set_json(ring: &Ring, size: usize, set: &MatrixSet, list: bool, extra: Value) -> Value {
    let mut v = json!({
        "ring": ring_to_json(ring),
        "size": size,
        "count": set.len(),
    });
    let obj = v.as_object_mut().expect("object");
    if let Value::Object(extra) = extra {
        obj.extend(extra);
    }
    if list {
        let members: Vec<_> = set.matrices().iter().map(matrix_to_json).collect();
        obj.insert("members".into(), serde_json::to_value(members).expect("serializable"));
    }
    v
}
