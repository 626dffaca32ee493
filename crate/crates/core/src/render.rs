//! Bag-of-shapes rendering: every non-scalar term becomes an oriented,
//! multi-coloured polyline and the scalar part is written as a number.
//!
//! Conventions:
//! - generator `b_k` points along `90deg * (k - 1) / n` from the horizontal,
//!   so the data bits fan out over a quarter turn (the complex flag at
//!   position 0 falls just below the horizontal, the auxiliary bit at 90deg);
//! - segment colour is palette entry `floor((k - 1) / 2) mod 8`, pairing
//!   neighbouring dimensions;
//! - segments follow ascending position, the first one is stretched by
//!   `|coefficient|` and a negative coefficient reverses every arrowhead.

use std::fmt::Write as _;

use crate::comb::Comb;
use crate::error::{Error, Result};
use crate::multivector::Multivector;

pub const MAX_RENDER_WIDTH: usize = 16;

pub const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

const UNIT: f64 = 40.0;
const PAD: f64 = 16.0;
const HEADER: f64 = 40.0;
const MIN_WIDTH: f64 = 120.0;

#[derive(Clone, Debug, PartialEq)]
pub struct Polyline {
    pub comb: Comb,
    /// Canvas coordinates, y pointing down. One more point than segments.
    pub points: Vec<(f64, f64)>,
    /// Palette index per segment.
    pub colors: Vec<usize>,
    /// Per-segment orientation: `true` points from `points[i]` to
    /// `points[i + 1]`.
    pub forward: Vec<bool>,
    pub label: Option<String>,
}

impl Polyline {
    pub fn segments(&self) -> usize {
        self.points.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scene {
    pub polylines: Vec<Polyline>,
    pub scalar_label: String,
    pub width: f64,
    pub height: f64,
}

/// Coefficient text with at most three decimals and no trailing zeros.
pub fn format_coefficient(c: f64) -> String {
    let s = format!("{c:.3}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

fn palette_index(position: usize) -> usize {
    (position as i64 - 1).div_euclid(2).rem_euclid(PALETTE.len() as i64) as usize
}

fn direction(position: usize, n: usize) -> (f64, f64) {
    let theta = (90.0 * (position as f64 - 1.0) / n as f64).to_radians();
    (theta.cos(), theta.sin())
}

pub fn layout(m: &Multivector) -> Result<Scene> {
    let algebra = m.algebra();
    let n = algebra.n();
    if n > MAX_RENDER_WIDTH {
        return Err(Error::RenderCap { n, cap: MAX_RENDER_WIDTH });
    }

    // Local shapes in math orientation (y up), anchored at the origin.
    struct Shape {
        comb: Comb,
        points: Vec<(f64, f64)>,
        colors: Vec<usize>,
        coefficient: f64,
    }
    let mut shapes = Vec::new();
    for (comb, c) in m.terms().filter(|(comb, _)| comb.0 != 0) {
        let mut points = vec![(0.0, 0.0)];
        let mut colors = Vec::new();
        let (mut x, mut y) = (0.0, 0.0);
        for (i, position) in comb.positions().enumerate() {
            let (dx, dy) = direction(position, n);
            let length = if i == 0 { UNIT * c.abs() } else { UNIT };
            x += dx * length;
            y += dy * length;
            points.push((x, y));
            colors.push(palette_index(position));
        }
        shapes.push(Shape { comb, points, colors, coefficient: c });
    }

    let bounds = |pts: &[(f64, f64)]| {
        pts.iter().fold((f64::MAX, f64::MIN, f64::MAX, f64::MIN), |(x0, x1, y0, y1), &(x, y)| {
            (x0.min(x), x1.max(x), y0.min(y), y1.max(y))
        })
    };
    let (mut cell_w, mut cell_h) = (0.0f64, 0.0f64);
    for s in &shapes {
        let (x0, x1, y0, y1) = bounds(&s.points);
        cell_w = cell_w.max(x1 - x0);
        cell_h = cell_h.max(y1 - y0);
    }
    cell_w += 2.0 * PAD;
    cell_h += 2.0 * PAD;

    let count = shapes.len();
    let columns = (1..).find(|c| c * c >= count).unwrap_or(1).max(1);
    let rows = count.div_ceil(columns);

    let polylines = shapes
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let (x0, _, _, y1) = bounds(&s.points);
            let ox = (i % columns) as f64 * cell_w + PAD - x0;
            let oy = HEADER + (i / columns) as f64 * cell_h + PAD + y1;
            Polyline {
                comb: s.comb,
                points: s.points.iter().map(|&(x, y)| (ox + x, oy - y)).collect(),
                forward: vec![s.coefficient > 0.0; s.colors.len()],
                colors: s.colors,
                label: Some(format!("{} c{}", format_coefficient(s.coefficient), algebra.format_bits(s.comb))),
            }
        })
        .collect();

    Ok(Scene {
        polylines,
        scalar_label: format_coefficient(m.scalar_part()),
        width: (columns as f64 * cell_w).max(MIN_WIDTH),
        height: HEADER + rows as f64 * cell_h,
    })
}

/// Serializes a scene as an SVG 1.1 document. Output depends only on the
/// scene; coordinates are printed with three decimals.
pub fn emit_svg(scene: &Scene) -> String {
    let f = |v: f64| format!("{v:.3}");
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = f(scene.width),
        h = f(scene.height)
    );
    out.push_str("<defs>\n");
    for (i, color) in PALETTE.iter().enumerate() {
        let _ = writeln!(
            out,
            "<marker id=\"arrow-{i}\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"{color}\"/></marker>"
        );
    }
    out.push_str("</defs>\n");
    let _ = writeln!(
        out,
        "<text class=\"scalar\" x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"16\">{}</text>",
        f(PAD / 2.0),
        f(HEADER * 0.6),
        scene.scalar_label
    );
    for p in &scene.polylines {
        let id: String = format!("{:x}", p.comb.0);
        let _ = writeln!(out, "<g class=\"blade\" id=\"blade-{id}\">");
        if let Some(label) = &p.label {
            let _ = writeln!(out, "<title>{label}</title>");
        }
        for (i, w) in p.points.windows(2).enumerate() {
            let (start, end) = if p.forward[i] { (w[0], w[1]) } else { (w[1], w[0]) };
            let color = p.colors[i];
            let _ = writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\" marker-end=\"url(#arrow-{color})\"/>",
                f(start.0),
                f(start.1),
                f(end.0),
                f(end.1),
                PALETTE[color]
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
