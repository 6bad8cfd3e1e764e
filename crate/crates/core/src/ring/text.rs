//! Text syntax for ring elements.
//!
//! * rationals: `p/q` or `p`;
//! * residues: `k mod n` (a bare integer `k` is accepted and reduced);
//! * polynomials: expanded sums of terms such as `3*X^2*Y - 1/2`.
//!
//! Formatting always produces the canonical form, so `format(parse(s))` is
//! stable and byte-identical for equal elements.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{reduce, Elem, Monomial, Poly, Ring, RingDescriptor};
use crate::error::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_int(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(format!("invalid integer {s:?}")));
    }
    t.parse::<BigInt>()
        .map_err(|_| parse_err(format!("invalid integer {s:?}")))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(parse_err("zero denominator"));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

pub(super) fn parse(ring: &Ring, s: &str) -> Result<Elem> {
    match ring.descriptor() {
        RingDescriptor::Rationals => parse_rational(s).map(Elem::Rational),
        RingDescriptor::IntegersMod { modulus } => {
            let (k, n) = match s.split_once("mod") {
                Some((k, n)) => (k, Some(n)),
                None => (s, None),
            };
            if let Some(n) = n {
                let n = parse_int(n)?;
                if n != BigInt::from(modulus.clone()) {
                    return Err(parse_err(format!("residue modulus {n} does not match ring modulus {modulus}")));
                }
            }
            Ok(Elem::Residue(reduce(&parse_int(k)?, modulus)))
        }
        RingDescriptor::Polynomial { variables } => parse_poly(variables, s).map(Elem::Poly),
    }
}

#[derive(Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => k += 1,
            b'+' => {
                out.push(Tok::Plus);
                k += 1
            }
            b'-' => {
                out.push(Tok::Minus);
                k += 1
            }
            b'*' => {
                out.push(Tok::Star);
                k += 1
            }
            b'^' => {
                out.push(Tok::Caret);
                k += 1
            }
            b'/' => {
                out.push(Tok::Slash);
                k += 1
            }
            b'0'..=b'9' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                out.push(Tok::Num(s[start..k].parse().map_err(|_| parse_err("bad number"))?));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = k;
                while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                    k += 1;
                }
                out.push(Tok::Ident(s[start..k].to_string()));
            }
            _ => return Err(parse_err(format!("unexpected character {:?}", c as char))),
        }
    }
    Ok(out)
}

fn parse_poly(variables: &[String], s: &str) -> Result<Poly> {
    let nvars = variables.len();
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let mut pos = 0;
    let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
    let mut first = true;
    while pos < toks.len() {
        let mut negative = false;
        match toks[pos] {
            Tok::Plus => pos += 1,
            Tok::Minus => {
                negative = true;
                pos += 1
            }
            _ if first => {}
            _ => return Err(parse_err("expected '+' or '-' between terms")),
        }
        first = false;
        let mut coeff = BigRational::one();
        let mut exps = alloc::vec![0u32; nvars];
        loop {
            match toks.get(pos) {
                Some(Tok::Num(n)) => {
                    pos += 1;
                    let mut value = BigRational::from_integer(n.clone());
                    if toks.get(pos) == Some(&Tok::Slash) {
                        match toks.get(pos + 1) {
                            Some(Tok::Num(d)) if !d.is_zero() => {
                                value /= BigRational::from_integer(d.clone());
                                pos += 2;
                            }
                            _ => return Err(parse_err("expected nonzero denominator")),
                        }
                    }
                    coeff *= value;
                }
                Some(Tok::Ident(name)) => {
                    pos += 1;
                    let idx = variables
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| parse_err(format!("unknown variable {name:?}")))?;
                    let mut e = 1u32;
                    if toks.get(pos) == Some(&Tok::Caret) {
                        match toks.get(pos + 1) {
                            Some(Tok::Num(n)) => {
                                e = u32::try_from(n).map_err(|_| parse_err("exponent too large"))?;
                                pos += 2;
                            }
                            _ => return Err(parse_err("expected exponent after '^'")),
                        }
                    }
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| parse_err("exponent too large"))?;
                }
                _ => return Err(parse_err("expected a number or variable")),
            }
            if toks.get(pos) == Some(&Tok::Star) {
                pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((Monomial::from_exponents(exps), coeff));
    }
    Ok(Poly::from_terms(nvars, terms))
}

fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn format_monomial(variables: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in variables.iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

fn format_poly(variables: &[String], p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        let body = if m.is_constant() {
            format_rational(&abs)
        } else if abs.is_one() {
            format_monomial(variables, m)
        } else {
            format!("{}*{}", format_rational(&abs), format_monomial(variables, m))
        };
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

pub(super) fn format(ring: &Ring, e: &Elem) -> String {
    match (ring.descriptor(), e) {
        (_, Elem::Rational(q)) => format_rational(q),
        (RingDescriptor::IntegersMod { modulus }, Elem::Residue(r)) => format!("{r} mod {modulus}"),
        (RingDescriptor::Polynomial { variables }, Elem::Poly(p)) => format_poly(variables, p),
        (_, Elem::Residue(r)) => format!("{r}"),
        (_, Elem::Poly(p)) => format_poly(&[], p),
    }
}
