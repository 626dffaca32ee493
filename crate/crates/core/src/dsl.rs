//! Line-oriented circuit text format (`.gac`).
//!
//! ```text
//! # three Hadamards
//! circuit n=3
//! h 1
//! h 2
//! h 3
//! ```
//!
//! The header `circuit n=<int> [complex]` comes first. Each following line
//! holds one op: `h k`, `x k`, `z k`, `y k`, `phase k <angle>`, `t k`,
//! `cnot c t`, `toffoli c1 c2 t`, `reset k`, `select k`, `i` or
//! `gphase <angle>`. Angles are radians, written as decimals or as `pi`,
//! `pi/<int>` with an optional sign. `#` starts a comment.

use std::f64::consts::PI;
use std::fmt::{self, Write as _};

use crate::circuit::{Circuit, GateOp, Span};
use crate::comb::Algebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.token.is_empty() {
            write!(f, " (at {:?})", self.token)?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

/// Splits a line into whitespace-separated tokens with 1-based character
/// columns, stopping at `#`.
fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (column, (byte, ch)) in line.char_indices().enumerate() {
        if ch == '#' || ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                tokens.push(Token { text: &line[b..byte], column: c });
            }
            if ch == '#' {
                return tokens;
            }
        } else if start.is_none() {
            start = Some((byte, column + 1));
        }
    }
    if let Some((b, c)) = start {
        tokens.push(Token { text: &line[b..], column: c });
    }
    tokens
}

struct LineCtx {
    line: usize,
}

impl LineCtx {
    fn error(&self, column: usize, message: impl Into<String>, token: &str) -> ParseError {
        ParseError { line: self.line, column, message: message.into(), token: token.to_owned() }
    }

    fn at(&self, token: Token<'_>, message: impl Into<String>) -> ParseError {
        self.error(token.column, message, token.text)
    }
}

fn parse_header(ctx: &LineCtx, tokens: &[Token<'_>]) -> Result<(usize, bool), ParseError> {
    let head = tokens[0];
    if head.text != "circuit" {
        return Err(ctx.at(head, "expected header `circuit n=<int> [complex]`"));
    }
    let Some(&width_tok) = tokens.get(1) else {
        return Err(ctx.at(head, "header is missing `n=<int>`"));
    };
    let width = width_tok
        .text
        .strip_prefix("n=")
        .and_then(|w| w.parse::<usize>().ok())
        .ok_or_else(|| ctx.at(width_tok, "expected `n=<int>`"))?;
    if let Err(e) = Algebra::new(width, true, true) {
        return Err(ctx.at(width_tok, e.to_string()));
    }
    let complex = match tokens.get(2) {
        None => false,
        Some(t) if t.text == "complex" => true,
        Some(&t) => return Err(ctx.at(t, "expected `complex` or end of header")),
    };
    if let Some(&extra) = tokens.get(3) {
        return Err(ctx.at(extra, "unexpected token after header"));
    }
    Ok((width, complex))
}

fn parse_angle(ctx: &LineCtx, token: Token<'_>) -> Result<f64, ParseError> {
    let (sign, body) = match token.text.as_bytes().first() {
        Some(b'-') => (-1.0, &token.text[1..]),
        Some(b'+') => (1.0, &token.text[1..]),
        _ => (1.0, token.text),
    };
    let value = if body == "pi" {
        Some(sign * PI)
    } else if let Some(divisor) = body.strip_prefix("pi/") {
        divisor.parse::<u32>().ok().filter(|&d| d > 0).map(|d| sign * PI / f64::from(d))
    } else {
        token.text.parse::<f64>().ok()
    };
    match value {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(ctx.at(token, "invalid angle")),
    }
}

fn parse_op(ctx: &LineCtx, tokens: &[Token<'_>], width: usize, complex: bool) -> Result<GateOp, ParseError> {
    let head = tokens[0];
    let mnemonic = head.text.to_ascii_lowercase();
    // (index args, angle args)
    let shape = match mnemonic.as_str() {
        "h" | "x" | "z" | "y" | "t" | "reset" | "select" => (1, 0),
        "phase" => (1, 1),
        "cnot" => (2, 0),
        "toffoli" => (3, 0),
        "i" => (0, 0),
        "gphase" => (0, 1),
        "circuit" => return Err(ctx.at(head, "duplicate header")),
        _ => return Err(ctx.at(head, format!("unknown mnemonic `{}`", head.text))),
    };
    let arity = shape.0 + shape.1;
    let args = &tokens[1..];
    if args.len() < arity {
        return Err(ctx.at(head, format!("`{mnemonic}` takes {arity} argument(s), got {}", args.len())));
    }
    if let Some(&extra) = args.get(arity) {
        return Err(ctx.at(extra, format!("`{mnemonic}` takes {arity} argument(s), got {}", args.len())));
    }

    let mut indices = Vec::with_capacity(shape.0);
    for &tok in &args[..shape.0] {
        let k: usize = tok.text.parse().map_err(|_| ctx.at(tok, "invalid bit index"))?;
        if !(1..=width).contains(&k) {
            return Err(ctx.at(tok, format!("index out of range 1..={width}")));
        }
        if indices.contains(&k) {
            return Err(ctx.at(tok, "bit indices must be distinct"));
        }
        indices.push(k);
    }
    let angle = match shape.1 {
        0 => 0.0,
        _ => parse_angle(ctx, args[shape.0])?,
    };

    let op = match mnemonic.as_str() {
        "h" => GateOp::H(indices[0]),
        "x" => GateOp::X(indices[0]),
        "z" => GateOp::Z(indices[0]),
        "y" => GateOp::Y(indices[0]),
        "t" => GateOp::T(indices[0]),
        "reset" => GateOp::Reset(indices[0]),
        "select" => GateOp::Select(indices[0]),
        "phase" => GateOp::Phase(indices[0], angle),
        "cnot" => GateOp::Cnot { control: indices[0], target: indices[1] },
        "toffoli" => GateOp::Toffoli { controls: [indices[0], indices[1]], target: indices[2] },
        "i" => GateOp::GlobalI,
        "gphase" => GateOp::GlobalPhase(angle),
        _ => unreachable!("mnemonic checked above"),
    };
    if op.needs_complex() && !complex {
        return Err(ctx.at(head, format!("`{mnemonic}` needs a `complex` header")));
    }
    Ok(op)
}

pub fn parse_circuit(text: &str) -> Result<Circuit, ParseError> {
    let mut circuit: Option<Circuit> = None;
    for (i, line) in text.lines().enumerate() {
        let ctx = LineCtx { line: i + 1 };
        let tokens = tokenize(line);
        if tokens.is_empty() {
            continue;
        }
        match circuit.as_mut() {
            None => {
                let (width, complex) = parse_header(&ctx, &tokens)?;
                circuit = Some(Circuit::new(width, complex));
            }
            Some(c) => {
                let op = parse_op(&ctx, &tokens, c.width, c.complex)?;
                c.ops.push(op);
                c.spans.push(Span { line: ctx.line, column: tokens[0].column });
            }
        }
    }
    circuit.ok_or_else(|| ParseError {
        line: 1,
        column: 1,
        message: "missing header `circuit n=<int> [complex]`".into(),
        token: String::new(),
    })
}

/// 17 significant digits; parsing the text gives back the same `f64`.
fn angle(phi: f64) -> String {
    format!("{phi:.16e}")
}

pub fn print_circuit(c: &Circuit) -> String {
    let mut out = format!("circuit n={}", c.width);
    if c.complex {
        out.push_str(" complex");
    }
    out.push('\n');
    for op in &c.ops {
        let _ = match *op {
            GateOp::H(k) => writeln!(out, "h {k}"),
            GateOp::X(k) => writeln!(out, "x {k}"),
            GateOp::Z(k) => writeln!(out, "z {k}"),
            GateOp::Y(k) => writeln!(out, "y {k}"),
            GateOp::T(k) => writeln!(out, "t {k}"),
            GateOp::Reset(k) => writeln!(out, "reset {k}"),
            GateOp::Select(k) => writeln!(out, "select {k}"),
            GateOp::Phase(k, phi) => writeln!(out, "phase {k} {}", angle(phi)),
            GateOp::Cnot { control, target } => writeln!(out, "cnot {control} {target}"),
            GateOp::Toffoli { controls: [a, b], target } => writeln!(out, "toffoli {a} {b} {target}"),
            GateOp::GlobalI => writeln!(out, "i"),
            GateOp::GlobalPhase(phi) => writeln!(out, "gphase {}", angle(phi)),
        };
    }
    out
}
