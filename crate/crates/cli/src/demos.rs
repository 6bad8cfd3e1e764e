//! Worked examples, reconstructed and verified from scratch.

use idemprod_core::factor::{base_case_display, factor_padded, factor_quasi_elementary};
use idemprod_core::matrix::Elementary;
use idemprod_core::tnn::counterexample_report;
use idemprod_core::{Factorization, Matrix, Ring, RingElement};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::certificate_to_json;
use crate::report::counterexample_json;

pub const NAMES: [&str; 4] = ["non-principal", "tnn-counterexample", "quasi-elementary", "base-case"];

/// A demo's JSON report and whether every claim in it verified.
pub struct DemoReport {
    pub json: Value,
    pub verified: bool,
}

fn poly(vars: &[&str]) -> Ring {
    Ring::polynomial(vars).expect("valid variables")
}

fn m3(ring: &Ring, rows: [[&str; 3]; 3]) -> Matrix {
    Matrix::parse(ring, &rows).expect("literal matrix")
}

fn certified(target: Matrix, factors: Vec<Matrix>) -> Result<Factorization, CliError> {
    Factorization::manual(target, factors).map_err(CliError::from)
}

/// `[X Y; 0 0]` over `Q[X, Y]` is not a product of idempotents, but its
/// padding is: `[X Y 0] = [X 0 Y] · shuffle`, each side a displayed product.
pub fn non_principal() -> Result<DemoReport, CliError> {
    let r = poly(&["X", "Y"]);
    let lifted = m3(&r, [["X", "0", "Y"], ["0", "0", "0"], ["0", "0", "0"]]);
    let lifted_factors = vec![
        m3(&r, [["1", "0", "Y"], ["0", "1", "0"], ["0", "0", "0"]]),
        m3(&r, [["1", "X", "0"], ["0", "0", "0"], ["0", "0", "1"]]),
        m3(&r, [["0", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]),
        m3(&r, [["1", "0", "0"], ["1", "0", "0"], ["0", "0", "1"]]),
    ];
    let shuffle = m3(&r, [["1", "0", "0"], ["0", "0", "0"], ["0", "1", "0"]]);
    let shuffle_factors = vec![
        m3(&r, [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "1"]]),
        m3(&r, [["1", "0", "0"], ["0", "1", "0"], ["0", "1", "0"]]),
    ];
    let b = Matrix::parse(&r, &[["X", "Y"], ["0", "0"]]).expect("literal matrix");
    let padded = idemprod_core::matrix::block_pad(&b, 1)?;

    let first = certified(lifted, lifted_factors.clone())?;
    let second = certified(shuffle, shuffle_factors.clone())?;
    let composed = certified(padded, lifted_factors.into_iter().chain(shuffle_factors).collect())?;
    let dispatched = factor_padded(&b, 1)?;
    Ok(DemoReport {
        json: json!({
            "lifted": certificate_to_json(&first),
            "shuffle": certificate_to_json(&second),
            "composed": certificate_to_json(&composed),
            "dispatched": certificate_to_json(&dispatched),
            "verified": true,
        }),
        verified: true,
    })
}

pub fn tnn_counterexample(alpha: &RingElement) -> Result<DemoReport, CliError> {
    let report = counterexample_report(alpha)?;
    Ok(DemoReport {
        verified: report.verified(),
        json: counterexample_json(alpha, &report),
    })
}

/// `(1 - e_33)(I + b e_12)` with a symbolic `b`.
pub fn quasi_elementary() -> Result<DemoReport, CliError> {
    let r = poly(&["b"]);
    let core = Elementary::new(3, 1, 2, r.parse("b")?)?.matrix(&r);
    let f = factor_quasi_elementary(&core.with_row_zeroed(3)?)?;
    Ok(DemoReport {
        json: json!({ "certificate": certificate_to_json(&f), "verified": true }),
        verified: true,
    })
}

/// `[b 0; 0 0] = [1 b; 0 0] · [0 0; 1 1] · [1 0; 0 0]` with a symbolic `b`.
pub fn base_case() -> Result<DemoReport, CliError> {
    let r = poly(&["b"]);
    let b = r.parse("b")?;
    let target = Matrix::diagonal(&r, &[b.clone(), r.zero()]);
    let f = certified(target, base_case_display(&r, &b)?.to_vec())?;
    Ok(DemoReport {
        json: json!({ "certificate": certificate_to_json(&f), "verified": true }),
        verified: true,
    })
}

pub fn run(name: &str, alpha: &RingElement) -> Result<DemoReport, CliError> {
    match name {
        "non-principal" => non_principal(),
        "tnn-counterexample" => tnn_counterexample(alpha),
        "quasi-elementary" => quasi_elementary(),
        "base-case" => base_case(),
        other => Err(CliError::Parse(format!("unknown demo {other:?}; expected one of {}", NAMES.join(", ")))),
    }
}
