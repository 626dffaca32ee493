//! MVTX v1, a line-oriented text format for multivectors.
//!
//! ```text
//! mv n=2 complex=1 aux=0
//! 0.7071067811865476 010
//! -0.5 101
//! ```
//!
//! Each body line is a coefficient followed by a bitstring with one character
//! per reserved position, leftmost first (position 0 when `complex=1`,
//! position 1 otherwise).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::comb::{Algebra, Comb};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Mvtx { line, message: message.into() }
}

fn flag(line: usize, value: &str, name: &str) -> Result<bool> {
    match value {
        "0" => Ok(false),
        "1" => Ok(true),
        other => Err(err(line, format!("{name} must be 0 or 1, got {other:?}"))),
    }
}

fn parse_header(line_no: usize, line: &str) -> Result<Algebra> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [tag, n, complex, aux] = fields.as_slice() else {
        return Err(err(line_no, "expected header `mv n=<dim> complex=<0|1> aux=<0|1>`"));
    };
    if *tag != "mv" {
        return Err(err(line_no, format!("expected `mv`, found {tag:?}")));
    }
    let value = |field: &str, key: &str| -> Result<String> {
        field
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .map(str::to_owned)
            .ok_or_else(|| err(line_no, format!("expected `{key}=...`, found {field:?}")))
    };
    let n: usize = value(n, "n")?.parse().map_err(|_| err(line_no, format!("invalid width in {n:?}")))?;
    let complex = flag(line_no, &value(complex, "complex")?, "complex")?;
    let aux = flag(line_no, &value(aux, "aux")?, "aux")?;
    Algebra::new(n, complex, aux).map_err(|e| err(line_no, e.to_string()))
}

pub fn parse(text: &str) -> Result<Multivector> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_no, header) =
        lines.by_ref().find(|(_, l)| !l.trim().is_empty()).ok_or_else(|| err(1, "missing header"))?;
    let algebra = parse_header(header_no, header)?;

    let mut seen = BTreeSet::new();
    let mut terms = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => continue,
            [coefficient, bits] => {
                let c: f64 =
                    coefficient.parse().map_err(|_| err(line_no, format!("invalid coefficient {coefficient:?}")))?;
                if !c.is_finite() {
                    return Err(err(line_no, "coefficient must be finite"));
                }
                let comb = algebra.parse_bits(bits).map_err(|m| err(line_no, m))?;
                if !seen.insert(comb) {
                    return Err(err(line_no, format!("duplicate bitstring {bits}")));
                }
                terms.push((comb, c));
            }
            _ => return Err(err(line_no, "expected `<coefficient> <bitstring>`")),
        }
    }
    Multivector::from_terms(algebra, terms)
}

pub fn write(m: &Multivector) -> String {
    let algebra = m.algebra();
    let mut out = format!("mv {algebra}\n");
    for (comb, c) in m.terms() {
        let _ = writeln!(out, "{c} {}", algebra.format_bits(comb));
    }
    out
}

/// Formats a comb as `c<bits>` in the multivector's layout.
pub fn comb_label(algebra: Algebra, comb: Comb) -> String {
    format!("c{}", algebra.format_bits(comb))
}
