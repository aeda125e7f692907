//! Distances, angles, sums, projections and three-way products of points and
//! lines.
//!
//! Every function normalizes its euclidean arguments before measuring, so
//! callers may pass any weight. Decompositions are of the normalized input.

use std::f64::consts::PI;

use crate::algebra::{Blade, Multivector};
use crate::elements::{Line, Point, Pseudoscalar};
use crate::error::{classification, domain, Result};
use crate::metric::IdealPoint;

/// A point or a line, for the operations that dispatch on both.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Primitive {
    Point(Point),
    Line(Line),
}

impl From<Point> for Primitive {
    fn from(p: Point) -> Self {
        Primitive::Point(p)
    }
}

impl From<Line> for Primitive {
    fn from(l: Line) -> Self {
        Primitive::Line(l)
    }
}

impl From<IdealPoint> for Primitive {
    fn from(p: IdealPoint) -> Self {
        Primitive::Point(p.to_point())
    }
}

impl Primitive {
    pub fn to_multivector(&self) -> Multivector {
        match self {
            Primitive::Point(p) => p.to_multivector(),
            Primitive::Line(l) => l.to_multivector(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasurementKind {
    /// Angle between two intersecting euclidean lines, in `[0, π]`.
    IntersectingLines,
    /// Distance between two parallel euclidean lines, nonnegative.
    ParallelLines,
    /// Distance between two euclidean points, nonnegative.
    EuclideanPoints,
    /// Angle between two ideal points (free vectors), in `[0, π]`.
    IdealPoints,
    /// Signed distance; `d(m, P) = -d(P, m)`, positive for `P` on the side
    /// of `m` its polar points to.
    LinePoint,
    /// Angle between the direction of a line and an ideal point, in `[0, π]`.
    LineIdealPoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measurement {
    pub value: f64,
    pub kind: MeasurementKind,
}

impl Measurement {
    fn new(value: f64, kind: MeasurementKind) -> Self {
        Measurement { value, kind }
    }

    pub fn is_angle(&self) -> bool {
        matches!(
            self.kind,
            MeasurementKind::IntersectingLines | MeasurementKind::IdealPoints | MeasurementKind::LineIdealPoint
        )
    }
}

/// A projection split into the part along the target and the rejection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decomposition {
    pub parallel_part: Multivector,
    pub orthogonal_part: Multivector,
}

impl Decomposition {
    pub fn sum(&self) -> Multivector {
        self.parallel_part + self.orthogonal_part
    }
}

fn euclidean_point(p: &Point, tol: f64) -> Result<Point> {
    if p.is_ideal(tol) {
        return classification(format!("expected a euclidean point, got ideal {p:?}"));
    }
    p.normalize(tol)
}

fn euclidean_line(m: &Line, tol: f64) -> Result<Line> {
    if m.is_ideal(tol) {
        return classification(format!("expected a euclidean line, got ideal {m:?}"));
    }
    m.normalize(tol)
}

fn ideal_point(p: &Point, tol: f64) -> Result<IdealPoint> {
    IdealPoint::from_point(p, tol)?.normalize()
}

/// Whether the meet of two normalized euclidean lines is ideal (or zero).
fn lines_parallel(m: &Line, n: &Line, tol: f64) -> bool {
    (m.a() * n.b() - m.b() * n.a()).abs() <= tol
}

/// Signed `S(m ∧ P)` of a normalized line and point.
fn signed_line_point(m: &Line, p: &Point) -> f64 {
    (m.to_multivector() ^ p.to_multivector()).pseudoscalar_part()
}

/// Distance between a pair of primitives.
///
/// * point–point: `‖P ∨ Q‖`
/// * parallel lines: `‖m ∧ n‖∞`; intersecting lines are a domain error
/// * line–point: `S(m ∧ P)`, signed, with `d(P, m) = −d(m, P)`
pub fn distance(x: impl Into<Primitive>, y: impl Into<Primitive>, tol: f64) -> Result<Measurement> {
    use Primitive as P;
    match (x.into(), y.into()) {
        (P::Point(p), P::Point(q)) => {
            let (p, q) = (euclidean_point(&p, tol)?, euclidean_point(&q, tol)?);
            let line = p.join(&q);
            let d = line[Blade::e1].hypot(line[Blade::e2]);
            Ok(Measurement::new(d, MeasurementKind::EuclideanPoints))
        }
        (P::Line(m), P::Line(n)) => {
            let (m, n) = (euclidean_line(&m, tol)?, euclidean_line(&n, tol)?);
            if !lines_parallel(&m, &n, tol) {
                return domain("lines intersect; use angle instead of distance");
            }
            let meet = m.meet(&n);
            let d = meet[Blade::E1].hypot(meet[Blade::E2]);
            Ok(Measurement::new(d, MeasurementKind::ParallelLines))
        }
        (P::Line(m), P::Point(p)) => {
            let (m, p) = (euclidean_line(&m, tol)?, euclidean_point(&p, tol)?);
            Ok(Measurement::new(signed_line_point(&m, &p), MeasurementKind::LinePoint))
        }
        (P::Point(p), P::Line(m)) => {
            let (m, p) = (euclidean_line(&m, tol)?, euclidean_point(&p, tol)?);
            Ok(Measurement::new(-signed_line_point(&m, &p), MeasurementKind::LinePoint))
        }
    }
}

/// Angle between lines and/or ideal points, in `[0, π]`.
///
/// * two euclidean lines: `atan2(|m ∧ n| weight, m · n)`
/// * two ideal points: `acos ⟨U, V⟩∞`
/// * line and ideal point: `acos ‖m · U‖∞`
///
/// All three are evaluated as `atan2(sin, cos)` for accuracy near 0 and π.
pub fn angle(x: impl Into<Primitive>, y: impl Into<Primitive>, tol: f64) -> Result<Measurement> {
    use Primitive as P;
    match (x.into(), y.into()) {
        (P::Line(m), P::Line(n)) => {
            if m.is_ideal(tol) && n.is_ideal(tol) {
                return domain("no angle is defined between two ideal lines");
            }
            let (m, n) = (euclidean_line(&m, tol)?, euclidean_line(&n, tol)?);
            let (mm, nm) = (m.to_multivector(), n.to_multivector());
            let cos = mm.dot(&nm).scalar_part();
            let sin = mm.outer(&nm)[Blade::E0].abs();
            Ok(Measurement::new(sin.atan2(cos), MeasurementKind::IntersectingLines))
        }
        (P::Point(u), P::Point(v)) => {
            let (u, v) = (ideal_point(&u, tol)?, ideal_point(&v, tol)?);
            let sin = (u.u * v.v - u.v * v.u).abs();
            Ok(Measurement::new(sin.atan2(u.inner(&v)), MeasurementKind::IdealPoints))
        }
        (P::Line(m), P::Point(u)) | (P::Point(u), P::Line(m)) => {
            let m = euclidean_line(&m, tol)?;
            let u = ideal_point(&u, tol)?;
            let (mm, um) = (m.to_multivector(), u.to_multivector());
            let cos = mm.dot(&um)[Blade::e0];
            let sin = mm.outer(&um).pseudoscalar_part().abs();
            Ok(Measurement::new(sin.atan2(cos), MeasurementKind::LineIdealPoint))
        }
    }
}

/// `m + n` of normalized lines: the angle bisector through their common
/// point, or the parallel mid-line.
///
/// Anti-parallel lines (parallel with `m · n < 0`) would sum to a multiple
/// of the ideal line and are reported instead; negate one argument.
pub fn midline(m: &Line, n: &Line, tol: f64) -> Result<Line> {
    let (m, n) = (euclidean_line(m, tol)?, euclidean_line(n, tol)?);
    let dot = m.a() * n.a() + m.b() * n.b();
    if lines_parallel(&m, &n, tol) && dot < 0.0 {
        return domain("anti-parallel lines have no mid-line; negate one of them");
    }
    Line::from_multivector(&(m.to_multivector() + n.to_multivector()))
}

/// `(P + Q) / 2` of normalized euclidean points.
pub fn midpoint(p: &Point, q: &Point, tol: f64) -> Result<Point> {
    let (p, q) = (euclidean_point(p, tol)?, euclidean_point(q, tol)?);
    Point::from_multivector(&(p.to_multivector() + q.to_multivector()).scale(0.5))
}

/// Line through `P` perpendicular to `m`, `m⊥_P := m · P`.
pub fn perp_line_through(m: &Line, p: &Point, tol: f64) -> Result<Line> {
    let (m, p) = (euclidean_line(m, tol)?, euclidean_point(p, tol)?);
    Line::from_multivector(&m.to_multivector().dot(&p.to_multivector()))
}

/// Orthogonal decomposition of `x` with respect to `onto`.
///
/// * point onto line: `P = m(m·P) + m(m∧P)`, the foot of the perpendicular
///   plus the ideal rejection `P − P_m`
/// * line onto point: `m = −(m·P)P − (m∧P)P`, the parallel through `P` plus
///   a multiple of `ω`
/// * line onto line: `m = (m·n)n + (m∧n)n`
/// * point onto point: `P = Q + (P − Q)`
pub fn project(x: impl Into<Primitive>, onto: impl Into<Primitive>, tol: f64) -> Result<Decomposition> {
    use Primitive as P;
    let (parallel_part, orthogonal_part) = match (x.into(), onto.into()) {
        (P::Point(p), P::Line(m)) => {
            let (p, m) = (
                euclidean_point(&p, tol)?.to_multivector(),
                euclidean_line(&m, tol)?.to_multivector(),
            );
            (m.gp(&m.dot(&p)), m.gp(&m.outer(&p)))
        }
        (P::Line(m), P::Point(p)) => {
            let (p, m) = (
                euclidean_point(&p, tol)?.to_multivector(),
                euclidean_line(&m, tol)?.to_multivector(),
            );
            (-m.dot(&p).gp(&p), -m.outer(&p).gp(&p))
        }
        (P::Line(m), P::Line(n)) => {
            let (m, n) = (
                euclidean_line(&m, tol)?.to_multivector(),
                euclidean_line(&n, tol)?.to_multivector(),
            );
            (m.dot(&n).gp(&n), m.outer(&n).gp(&n))
        }
        (P::Point(p), P::Point(q)) => {
            let (p, q) = (
                euclidean_point(&p, tol)?.to_multivector(),
                euclidean_point(&q, tol)?.to_multivector(),
            );
            (q, p - q)
        }
    };
    Ok(Decomposition {
        parallel_part,
        orthogonal_part,
    })
}

/// `A B C` of three normalized euclidean points, which is the point
/// `−(A − B + C)`.
pub fn triple_points(a: &Point, b: &Point, c: &Point, tol: f64) -> Result<Point> {
    let (a, b, c) = (
        euclidean_point(a, tol)?,
        euclidean_point(b, tol)?,
        euclidean_point(c, tol)?,
    );
    let prod = a.to_multivector() * (b.to_multivector() * c.to_multivector());
    Point::from_multivector(&prod)
}

/// The two graded parts of the product `abc` of three lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TripleLines {
    pub grade1: Line,
    pub grade3: Pseudoscalar,
    /// Some pair is parallel or all three lines are concurrent.
    pub degenerate: bool,
}

/// `abc` for three normalized euclidean lines.
pub fn triple_lines(a: &Line, b: &Line, c: &Line, tol: f64) -> Result<TripleLines> {
    let (a, b, c) = (
        euclidean_line(a, tol)?,
        euclidean_line(b, tol)?,
        euclidean_line(c, tol)?,
    );
    let (am, bm, cm) = (a.to_multivector(), b.to_multivector(), c.to_multivector());
    let prod = am * bm * cm;
    let parallel = lines_parallel(&a, &b, tol) || lines_parallel(&b, &c, tol) || lines_parallel(&a, &c, tol);
    let concurrent = (am ^ bm ^ cm).pseudoscalar_part().abs() <= tol;
    Ok(TripleLines {
        grade1: Line::from_multivector(&prod)?,
        grade3: Pseudoscalar::from_multivector(&prod),
        degenerate: parallel || concurrent,
    })
}

/// `abc + acb + bac + bca + cab + cba` of normalized lines.
pub fn symmetric_product(a: &Line, b: &Line, c: &Line, tol: f64) -> Result<Multivector> {
    let (a, b, c) = (
        euclidean_line(a, tol)?.to_multivector(),
        euclidean_line(b, tol)?.to_multivector(),
        euclidean_line(c, tol)?.to_multivector(),
    );
    Ok(a * b * c + a * c * b + b * a * c + b * c * a + c * a * b + c * b * a)
}

/// The symmetric line of three lines, the grade-1 part of
/// [`symmetric_product`] (which has no other grades).
pub fn symmetric_line(a: &Line, b: &Line, c: &Line, tol: f64) -> Result<Line> {
    Line::from_multivector(&symmetric_product(a, b, c, tol)?)
}

/// Angle `α ∈ (−π, π]` rotating oriented line `m` onto `n`.
pub fn oriented_angle(m: &Line, n: &Line, tol: f64) -> Result<f64> {
    let (m, n) = (euclidean_line(m, tol)?, euclidean_line(n, tol)?);
    let cos = m.a() * n.a() + m.b() * n.b();
    let sin = (m.to_multivector() ^ n.to_multivector())[Blade::E0];
    let a = sin.atan2(cos);
    Ok(if a <= -PI { a + 2.0 * PI } else { a })
}
