//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use idemprod_core::factor::{factor_padded_with, verify_factorization, ZeroRowEvidence, ZeroRowWitness};
use idemprod_core::oracle::{check_omeara, enumerate_idempotents, product_closure, FiniteMatrixSpace};
use idemprod_core::tnn::{first_negative_minor, left_stabilizer_nonneg};
use idemprod_core::{Matrix, Ring, RingElement};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::{certificate_text, certificate_to_json, parse_certificate, parse_matrix, ring_from_spec, to_canonical};
use crate::{demos, human, report};

#[derive(Debug, Parser)]
#[command(name = "idemprod", version, about = "Certified factorizations of matrices into idempotents")]
pub struct Cli {
    /// Render the report as text instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor block_pad(B, r) and emit a certificate.
    Factor {
        /// Matrix JSON: a file path, `-` for stdin, or inline JSON.
        input: String,
        /// Number of zero rows and columns added around B.
        #[arg(long, default_value_t = 1)]
        pad: usize,
        /// Row i such that (1 - e_ii) B has the column relation given by --coeffs.
        #[arg(long, requires = "coeffs")]
        zero_row: Option<usize>,
        /// Comma separated q_j, j ≠ i: column i of (1 - e_ii) B is Σ q_j column j.
        #[arg(long, requires = "zero_row", value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<String>,
        /// Also write the certificate to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-verify a certificate by exact multiplication.
    Verify {
        /// Certificate JSON: a file path, `-` for stdin, or inline JSON.
        certificate: String,
    },
    /// Count (and optionally list) the idempotents of M_k(Z/n).
    Idempotents {
        /// Ring, `zmod:n`.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        list: bool,
    },
    /// Count (and optionally list) the products of idempotents in M_k(Z/n).
    Closure {
        /// Ring, `zmod:n`.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        list: bool,
    },
    /// Compare lann(A)S, S rann(A) and S(I - A)S for A = block_pad(B, r) over Z/n.
    Omeara {
        input: String,
        #[arg(long, default_value_t = 1)]
        pad: usize,
    },
    /// Total nonnegativity and the nonnegative left stabilizer of a rational matrix.
    Tnn { input: String },
    /// Rebuild and verify a worked example.
    Demo {
        #[arg(value_parser = demo_name)]
        name: String,
        /// Parameter of the nonnegative counterexample.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        alpha: String,
    },
}

fn demo_name(s: &str) -> Result<String, String> {
    let name = match s {
        "remark-3-2" => "non-principal",
        "section-4" => "tnn-counterexample",
        other => other,
    };
    if demos::NAMES.contains(&name) {
        Ok(name.to_string())
    } else {
        Err(format!("expected one of {}", demos::NAMES.join(", ")))
    }
}

/// What the process prints and its exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
}

fn read_input(input: &str) -> Result<String, CliError> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        return Ok(input.to_string());
    }
    if input == "-" {
        return Ok(std::io::read_to_string(std::io::stdin())?);
    }
    std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))
}

fn finite_space(spec: &str, size: usize) -> Result<FiniteMatrixSpace, CliError> {
    let ring = ring_from_spec(spec)?;
    if size == 0 {
        return Err(CliError::Parse("size must be at least 1".into()));
    }
    Ok(FiniteMatrixSpace::new(&ring, size)?)
}

fn witness(b: &Matrix, row: Option<usize>, coeffs: &[String]) -> Result<Option<ZeroRowWitness>, CliError> {
    let Some(row) = row else { return Ok(None) };
    let ring: &Ring = b.ring();
    let q = coeffs.iter().map(|c| RingElement::parse(ring, c)).collect::<Result<Vec<_>, _>>()?;
    Ok(Some(ZeroRowWitness {
        row,
        evidence: ZeroRowEvidence::ColumnCombination(q),
    }))
}

enum Emit {
    /// Canonical JSON text, already final.
    Text(String, Value),
    Value(Value),
}

fn execute(command: Command) -> Result<(Emit, i32), CliError> {
    match command {
        Command::Factor {
            input,
            pad,
            zero_row,
            coeffs,
            output,
        } => {
            let b = parse_matrix(&read_input(&input)?)?;
            let w = witness(&b, zero_row, &coeffs)?;
            let f = factor_padded_with(&b, pad, w.as_ref())?;
            if !verify_factorization(&f) {
                return Err(CliError::Verification("emitted certificate does not verify".into()));
            }
            let text = certificate_text(&f);
            if let Some(path) = output {
                std::fs::write(&path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            let value = serde_json::to_value(certificate_to_json(&f)).expect("serializable");
            Ok((Emit::Text(text, value), 0))
        }
        Command::Verify { certificate } => {
            let f = parse_certificate(&read_input(&certificate)?)?;
            f.verify()?;
            Ok((
                Emit::Value(json!({
                    "valid": true,
                    "route": f.route().tag.as_str(),
                    "size": f.size(),
                    "factors": f.factors().len(),
                })),
                0,
            ))
        }
        Command::Idempotents { ring, size, list } => {
            let space = finite_space(&ring, size)?;
            let set = enumerate_idempotents(&space);
            Ok((Emit::Value(report::set_json(space.ring(), size, &set, list, json!({}))), 0))
        }
        Command::Closure { ring, size, list } => {
            let space = finite_space(&ring, size)?;
            let set = product_closure(&space);
            let idempotents = enumerate_idempotents(&space).len();
            let extra = json!({ "idempotents": idempotents, "space": space.cardinality().to_string() });
            Ok((Emit::Value(report::set_json(space.ring(), size, &set, list, extra)), 0))
        }
        Command::Omeara { input, pad } => {
            let b = parse_matrix(&read_input(&input)?)?;
            let r = check_omeara(&b, pad)?;
            let a = idemprod_core::matrix::block_pad(&b, pad)?;
            Ok((Emit::Value(report::omeara_json(&a, &r)), 0))
        }
        Command::Tnn { input } => {
            let a = parse_matrix(&read_input(&input)?)?;
            let minor = first_negative_minor(&a)?;
            let det = a.determinant()?;
            let s = left_stabilizer_nonneg(&a)?;
            if let Some(w) = &s.witness {
                if w * &a != a {
                    return Err(CliError::Verification("stabilizer witness does not fix A".into()));
                }
            }
            Ok((Emit::Value(report::tnn_json(&a, minor.as_ref(), &det, &s)), 0))
        }
        Command::Demo { name, alpha } => {
            let alpha = RingElement::parse(&Ring::rationals(), &alpha)?;
            let d = demos::run(&name, &alpha)?;
            Ok((Emit::Value(d.json), if d.verified { 0 } else { 3 }))
        }
    }
}

fn render(emit: Emit, human_output: bool) -> String {
    match (emit, human_output) {
        (Emit::Text(_, v) | Emit::Value(v), true) => human::render(&v),
        (Emit::Text(text, _), false) => text,
        (Emit::Value(v), false) => to_canonical(&v),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Output { code: 0, stdout: e.to_string() };
        }
        Err(e) => {
            let err = CliError::Parse(e.kind().to_string());
            let mut v = err.to_json();
            v["error"]["message"] = json!(e.to_string().trim_end());
            return Output { code: err.exit_code(), stdout: to_canonical(&v) };
        }
    };
    let human_output = cli.human;
    match execute(cli.command) {
        Ok((emit, code)) => Output { code, stdout: render(emit, human_output) },
        Err(e) => Output { code: e.exit_code(), stdout: to_canonical(&e.to_json()) },
    }
}
