//! Deterministic SVG figures of a script environment.
//!
//! The 512×512 viewport shows a square window fitted around the euclidean
//! points with a 10% margin. Lines are clipped to the window, ideal points
//! are arrows from the centroid, and every element is labeled by name.

use std::fmt::Write as _;

use crate::elements::{Line, Point};
use crate::script::{Environment, Value};

pub const SIZE: f64 = 512.0;
const MARGIN: f64 = 0.1;
const MIN_HALF_SPAN: f64 = 1.0;

#[derive(Debug)]
pub enum SvgError {
    NothingToRender,
    Io { path: String, source: std::io::Error },
}

impl std::fmt::Display for SvgError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SvgError::NothingToRender => f.write_str("nothing to render"),
            SvgError::Io { path, source } => write!(f, "cannot write {path}: {source}"),
        }
    }
}

impl std::error::Error for SvgError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            SvgError::Io { source, .. } => Some(source),
            SvgError::NothingToRender => None,
        }
    }
}

enum Shape<'a> {
    Dot(&'a str, f64, f64),
    Arrow(&'a str, f64, f64),
    Line(&'a str, Line),
}

fn shapes<'a>(env: &'a Environment, tol: f64) -> Vec<Shape<'a>> {
    let mut out = Vec::new();
    let add_point = |out: &mut Vec<Shape<'a>>, name: &'a str, p: &Point| match p.cartesian(tol) {
        Some((x, y)) => out.push(Shape::Dot(name, x, y)),
        None => {
            let n = p.x().hypot(p.y());
            if n > 0.0 {
                out.push(Shape::Arrow(name, p.x() / n, p.y() / n));
            }
        }
    };
    for (name, value) in env.iter() {
        match value {
            Value::Point(p) => add_point(&mut out, name, p),
            Value::Line(m) if !m.is_ideal(tol) => out.push(Shape::Line(name, *m)),
            Value::Decomposition(d) => {
                if let Ok(p) = Point::from_multivector(&d.parallel_part) {
                    if d.parallel_part.is_homogeneous(2, tol) {
                        add_point(&mut out, name, &p);
                    }
                } else if let Ok(m) = Line::from_multivector(&d.parallel_part) {
                    if !m.is_ideal(tol) {
                        out.push(Shape::Line(name, m));
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Square window `(cx, cy, half)` around the dots, or around the line feet
/// closest to the origin when there are no dots.
fn window(shapes: &[Shape]) -> (f64, f64, f64) {
    let mut pts: Vec<(f64, f64)> = shapes
        .iter()
        .filter_map(|s| match s {
            Shape::Dot(_, x, y) => Some((*x, *y)),
            _ => None,
        })
        .collect();
    if pts.is_empty() {
        pts = shapes
            .iter()
            .filter_map(|s| match s {
                Shape::Line(_, m) => {
                    let k = -m.c() / (m.a() * m.a() + m.b() * m.b());
                    Some((k * m.a(), k * m.b()))
                }
                _ => None,
            })
            .collect();
    }
    if pts.is_empty() {
        return (0.0, 0.0, MIN_HALF_SPAN);
    }
    let (mut x0, mut y0, mut x1, mut y1) = (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for (x, y) in &pts {
        x0 = x0.min(*x);
        y0 = y0.min(*y);
        x1 = x1.max(*x);
        y1 = y1.max(*y);
    }
    let span = (x1 - x0).max(y1 - y0);
    let half = (span / 2.0 + MARGIN * span).max(MIN_HALF_SPAN);
    ((x0 + x1) / 2.0, (y0 + y1) / 2.0, half)
}

/// Clips the line to the axis-aligned box; `None` if it misses.
fn clip(m: &Line, cx: f64, cy: f64, half: f64) -> Option<[(f64, f64); 2]> {
    let n2 = m.a() * m.a() + m.b() * m.b();
    let k = (m.a() * cx + m.b() * cy + m.c()) / n2;
    let (px, py) = (cx - k * m.a(), cy - k * m.b());
    let n = n2.sqrt();
    let (dx, dy) = (-m.b() / n, m.a() / n);
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, d, lo, hi) in [(px, dx, cx - half, cx + half), (py, dy, cy - half, cy + half)] {
        if d.abs() < 1e-15 {
            if p < lo || p > hi {
                return None;
            }
        } else {
            let (a, b) = ((lo - p) / d, (hi - p) / d);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
    }
    if t0 >= t1 {
        return None;
    }
    Some([(px + t0 * dx, py + t0 * dy), (px + t1 * dx, py + t1 * dy)])
}

fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('\'', "&apos;")
}

/// The SVG document for `env`.
pub fn svg_string(env: &Environment, tol: f64) -> Result<String, SvgError> {
    let shapes = shapes(env, tol);
    if shapes.is_empty() {
        return Err(SvgError::NothingToRender);
    }
    let (cx, cy, half) = window(&shapes);
    let to_px = |x: f64, y: f64| {
        (
            (x - (cx - half)) / (2.0 * half) * SIZE,
            ((cy + half) - y) / (2.0 * half) * SIZE,
        )
    };

    let dots: Vec<(f64, f64)> = shapes
        .iter()
        .filter_map(|s| match s {
            Shape::Dot(_, x, y) => Some((*x, *y)),
            _ => None,
        })
        .collect();
    let centroid = if dots.is_empty() {
        (cx, cy)
    } else {
        let n = dots.len() as f64;
        (
            dots.iter().map(|p| p.0).sum::<f64>() / n,
            dots.iter().map(|p| p.1).sum::<f64>() / n,
        )
    };

    let mut body = String::new();
    let mut labels = String::new();
    let mut label = |x: f64, y: f64, name: &str| {
        let _ = writeln!(
            labels,
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#222222\">{}</text>",
            num(x + 6.0),
            num(y - 6.0),
            escape(name)
        );
    };
    for shape in &shapes {
        match shape {
            Shape::Line(name, m) => {
                if let Some([(x0, y0), (x1, y1)]) = clip(m, cx, cy, half) {
                    let (a, b) = (to_px(x0, y0), to_px(x1, y1));
                    let _ = writeln!(
                        body,
                        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#b03a2e\" stroke-width=\"1.5\"/>",
                        num(a.0),
                        num(a.1),
                        num(b.0),
                        num(b.1)
                    );
                    label((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0, name);
                }
            }
            Shape::Arrow(name, u, v) => {
                let len = 0.25 * half;
                let a = to_px(centroid.0, centroid.1);
                let b = to_px(centroid.0 + len * u, centroid.1 + len * v);
                let _ = writeln!(
                    body,
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#2e7d32\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>",
                    num(a.0),
                    num(a.1),
                    num(b.0),
                    num(b.1)
                );
                label(b.0, b.1, name);
            }
            Shape::Dot(..) => {}
        }
    }
    for shape in &shapes {
        if let Shape::Dot(name, x, y) = shape {
            let p = to_px(*x, *y);
            let _ = writeln!(
                body,
                "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#1f4e79\"/>",
                num(p.0),
                num(p.1)
            );
            label(p.0, p.1, name);
        }
    }

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n",
    );
    svg.push_str("  <defs>\n    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"8\" markerHeight=\"8\" orient=\"auto\">\n      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#2e7d32\"/>\n    </marker>\n  </defs>\n");
    svg.push_str("  <rect width=\"512\" height=\"512\" fill=\"#ffffff\"/>\n");
    svg.push_str(&body);
    svg.push_str(&labels);
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Writes [`svg_string`] to `path`.
pub fn render_svg(env: &Environment, path: &str, tol: f64) -> Result<(), SvgError> {
    let svg = svg_string(env, tol)?;
    std::fs::write(path, svg).map_err(|source| SvgError::Io {
        path: path.to_string(),
        source,
    })
}
