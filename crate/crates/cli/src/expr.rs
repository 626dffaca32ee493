//! The `eval` expression form: signed combs and numbers joined by `*`, `+`
//! and `-`, whitespace-separated. `*` binds tighter. Example:
//! `c10011 * c01011`, `2c01 + -c10 * c11`.

use anyhow::{anyhow, bail, Context, Result};
use gacode_core::{Algebra, Multivector};

enum Operand<'a> {
    Comb { coefficient: f64, bits: &'a str },
    Number(f64),
}

fn operand(token: &str) -> Result<Operand<'_>> {
    match token.find('c') {
        Some(at) => {
            let (head, bits) = (&token[..at], &token[at + 1..]);
            let coefficient = match head {
                "" | "+" => 1.0,
                "-" => -1.0,
                h => h.parse().with_context(|| format!("invalid coefficient in {token:?}"))?,
            };
            if bits.is_empty() || !bits.chars().all(|c| c == '0' || c == '1') {
                bail!("invalid comb {token:?}");
            }
            Ok(Operand::Comb { coefficient, bits })
        }
        None => Ok(Operand::Number(token.parse().with_context(|| format!("invalid operand {token:?}"))?)),
    }
}

pub fn evaluate(expr: &str) -> Result<Multivector> {
    let tokens: Vec<&str> = expr.split_whitespace().collect();
    if tokens.is_empty() {
        bail!("empty expression");
    }
    let width = tokens
        .iter()
        .filter(|t| !matches!(**t, "*" | "+" | "-"))
        .filter_map(|t| match operand(t) {
            Ok(Operand::Comb { bits, .. }) => Some(bits.len()),
            _ => None,
        })
        .next()
        .ok_or_else(|| anyhow!("expression needs at least one comb to fix the width"))?;
    let algebra = Algebra::real(width)?;

    let value = |token: &str| -> Result<Multivector> {
        match operand(token)? {
            Operand::Comb { coefficient, bits } => {
                if bits.len() != width {
                    bail!("comb {token:?} has {} bits, expected {width}", bits.len());
                }
                Ok(Multivector::from_bits(algebra, bits, coefficient)?)
            }
            Operand::Number(v) => Ok(Multivector::scalar(algebra, v)),
        }
    };

    let mut total = Multivector::zero(algebra);
    let mut term = value(tokens[0])?;
    let mut sign = 1.0;
    let mut rest = tokens[1..].iter();
    while let Some(&op) = rest.next() {
        let &next = rest.next().ok_or_else(|| anyhow!("expression ends after {op:?}"))?;
        let rhs = value(next)?;
        match op {
            "*" => term = term.geometric_product(&rhs)?,
            "+" | "-" => {
                total = total.add(&term.scale(sign))?;
                sign = if op == "-" { -1.0 } else { 1.0 };
                term = rhs;
            }
            other => bail!("expected an operator, found {other:?}"),
        }
    }
    Ok(total.add(&term.scale(sign))?)
}

/// One `<coefficient> c<bits>` line per term, or `0`.
pub fn format_terms(m: &Multivector) -> String {
    if m.is_empty() {
        return "0\n".to_owned();
    }
    m.terms().map(|(comb, c)| format!("{c} c{}\n", m.algebra().format_bits(comb))).collect()
}
