//! Reflections, motors, glide reflections, the exponential and logarithm of
//! motors, and the point-and-line transport solver.
//!
//! Every isometry acts by the sandwich `v x ṽ`. Reflections and glide
//! reflections come from odd versors (a line plus a pseudoscalar), rotations
//! and translations from motors (a scalar plus a bivector).
//!
//! Orientation: `rotator(P, α)` for a point of weight `+1` turns the plane
//! clockwise by `α`; `translator(V, d)` moves by `d` in the direction of `V`
//! turned a quarter counterclockwise.

use std::fmt;
use std::ops::Mul;

use crate::algebra::{Blade, Multivector};
use crate::elements::{Line, Point};
use crate::error::{classification, domain, Result};
use crate::metric::IdealPoint;

/// `sin t / t`, by series near zero.
fn sinc(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}

/// `t / sin t`, by series near zero.
fn inv_sinc(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        let t2 = t * t;
        1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0
    } else {
        t / t.sin()
    }
}

/// Anything that acts on the algebra by `v x ṽ`.
pub trait Versor {
    fn to_multivector(&self) -> Multivector;

    /// `v x ṽ`.
    fn sandwich(&self, x: &Multivector) -> Multivector {
        let v = self.to_multivector();
        v * *x * v.reverse()
    }

    fn apply_point(&self, p: &Point) -> Result<Point> {
        Point::from_multivector(&self.sandwich(&p.to_multivector()))
    }

    fn apply_line(&self, m: &Line) -> Result<Line> {
        Line::from_multivector(&self.sandwich(&m.to_multivector()))
    }
}

/// `v x ṽ` for any versor.
pub fn sandwich<V: Versor + ?Sized>(v: &V, x: &Multivector) -> Multivector {
    v.sandwich(x)
}

impl Versor for Multivector {
    fn to_multivector(&self) -> Multivector {
        *self
    }
}

impl Versor for Line {
    fn to_multivector(&self) -> Multivector {
        Line::to_multivector(self)
    }
}

/// An element `s + bx E1 + by E2 + bz E0` of the even subalgebra.
#[derive(Clone, Copy, PartialEq)]
pub struct Motor {
    s: f64,
    bx: f64,
    by: f64,
    bz: f64,
}

impl Motor {
    pub const IDENTITY: Motor = Motor {
        s: 1.0,
        bx: 0.0,
        by: 0.0,
        bz: 0.0,
    };

    pub fn new(s: f64, bx: f64, by: f64, bz: f64) -> Result<Self> {
        if ![s, bx, by, bz].iter().all(|v| v.is_finite()) {
            return Err(crate::PgaError::NonFinite("motor"));
        }
        Ok(Motor { s, bx, by, bz })
    }

    /// Even part of `m`.
    pub fn from_multivector(m: &Multivector) -> Self {
        Motor {
            s: m[Blade::Scalar],
            bx: m[Blade::E1],
            by: m[Blade::E2],
            bz: m[Blade::E0],
        }
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Bivector part `(bx, by, bz)` on `E1, E2, E0`.
    pub fn bivector(&self) -> [f64; 3] {
        [self.bx, self.by, self.bz]
    }

    pub fn coords(&self) -> [f64; 4] {
        [self.s, self.bx, self.by, self.bz]
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::raw([self.s, 0.0, 0.0, 0.0, self.bx, self.by, self.bz, 0.0])
    }

    pub fn reverse(&self) -> Motor {
        Motor {
            s: self.s,
            bx: -self.bx,
            by: -self.by,
            bz: -self.bz,
        }
    }

    pub fn scale(&self, k: f64) -> Motor {
        Motor {
            s: self.s * k,
            bx: self.bx * k,
            by: self.by * k,
            bz: self.bz * k,
        }
    }

    /// `√(g g̃) = √(s² + bz²)`.
    pub fn norm(&self) -> f64 {
        self.s.hypot(self.bz)
    }

    /// Scales to `g g̃ = 1`; pure ideal bivectors cannot be normalized.
    pub fn normalize(&self) -> Result<Motor> {
        let n = self.norm();
        if n == 0.0 {
            return domain("motor with zero norm cannot be normalized");
        }
        Ok(self.scale(1.0 / n))
    }

    /// The same isometry with `s ≥ 0` (or `bz > 0` when `s = 0`).
    pub fn canonical(&self) -> Motor {
        if self.s < 0.0 || (self.s == 0.0 && self.bz < 0.0) {
            self.scale(-1.0)
        } else {
            *self
        }
    }

    pub fn compose(&self, other: &Motor) -> Motor {
        Motor::from_multivector(&(self.to_multivector() * other.to_multivector()))
    }

    /// Whether `self` and `other` agree up to sign, coefficientwise to `tol`.
    pub fn approx_eq_up_to_sign(&self, other: &Motor, tol: f64) -> bool {
        let (a, b) = (self.to_multivector(), other.to_multivector());
        a.distance_inf(&b) <= tol || a.distance_inf(&-b) <= tol
    }

    /// Two normalized lines `(a, b)` with `b a = g` for a normalized motor `g`.
    ///
    /// `a` passes through the fixed point of `g` (an ideal point for
    /// translations), so `g a` has no grade-3 part.
    pub fn factor(&self) -> Result<(Line, Line)> {
        let g = self.normalize()?;
        let [bx, by, bz] = g.bivector();
        let candidates = [[0.0, bz, -by], [bz, 0.0, -bx], [-by, bx, 0.0]];
        let best = candidates
            .iter()
            .copied()
            .max_by(|p, q| p[0].hypot(p[1]).total_cmp(&q[0].hypot(q[1])))
            .expect("three candidates");
        let a = if best[0].hypot(best[1]) == 0.0 {
            Line::raw(1.0, 0.0, 0.0)
        } else {
            Line::raw(best[0], best[1], best[2]).normalize(0.0)?
        };
        let b = Line::from_multivector(&(g.to_multivector() * a.to_multivector()))?;
        Ok((a, b))
    }
}

impl Versor for Motor {
    fn to_multivector(&self) -> Multivector {
        Motor::to_multivector(self)
    }
}

impl Mul for Motor {
    type Output = Motor;
    fn mul(self, rhs: Motor) -> Motor {
        self.compose(&rhs)
    }
}

impl fmt::Debug for Motor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "motor({}, {}, {}, {})", self.s, self.bx, self.by, self.bz)
    }
}

/// The odd element `m + λ I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddVersor {
    pub line: Line,
    pub lambda: f64,
}

impl OddVersor {
    pub fn new(line: Line, lambda: f64) -> Self {
        OddVersor { line, lambda }
    }

    /// Grade-1 and grade-3 parts of `m`; fails when the grade-1 part is zero.
    pub fn from_multivector(m: &Multivector) -> Result<Self> {
        Ok(OddVersor {
            line: Line::from_multivector(m)?,
            lambda: m.pseudoscalar_part(),
        })
    }

    pub fn to_multivector(&self) -> Multivector {
        self.line.to_multivector() + Multivector::from_blade(Blade::I).scale(self.lambda)
    }

    /// Scales so the line part is normalized.
    pub fn normalize(&self, tol: f64) -> Result<OddVersor> {
        let n = self.line.norm(tol)?;
        Ok(OddVersor {
            line: self.line.scale(1.0 / n),
            lambda: self.lambda / n,
        })
    }
}

impl Versor for OddVersor {
    fn to_multivector(&self) -> Multivector {
        OddVersor::to_multivector(self)
    }
}

/// `a x a` for the normalized mirror `a`.
pub fn reflect(a: &Line, x: &Multivector, tol: f64) -> Result<Multivector> {
    if a.is_ideal(tol) {
        return domain("cannot reflect in the ideal line");
    }
    let a = a.normalize(tol)?.to_multivector();
    Ok(a * *x * a)
}

/// `b a`: reflection in `a` followed by reflection in `b`.
pub fn rotor_from_lines(a: &Line, b: &Line, tol: f64) -> Result<Motor> {
    if a.is_ideal(tol) || b.is_ideal(tol) {
        return classification("rotor mirrors must be euclidean lines");
    }
    let (a, b) = (a.normalize(tol)?, b.normalize(tol)?);
    Ok(Motor::from_multivector(&(b.to_multivector() * a.to_multivector())))
}

/// `e^B` of the bivector part of `b`: `cos t + (sin t / t) B` with `t` the
/// `E0` coefficient, which reduces to `1 + B` for ideal bivectors.
pub fn exp_bivector(b: &Multivector) -> Motor {
    let (bx, by, t) = (b[Blade::E1], b[Blade::E2], b[Blade::E0]);
    let k = sinc(t);
    Motor {
        s: t.cos(),
        bx: k * bx,
        by: k * by,
        bz: k * t,
    }
}

/// The bivector `B` with `e^B = ±g`, for a motor of nonzero norm.
///
/// The rotation branch uses `t = atan2(bz, s)` in `(−π, π]`, so `log` inverts
/// `exp` for every rotation magnitude below `π`. A motor with `bz = 0` is a
/// translator (negated first when `s < 0`) and its log is `B / s`.
pub fn log_motor(g: &Motor) -> Result<Multivector> {
    let mut g = g.normalize()?;
    if g.bz == 0.0 && g.s < 0.0 {
        g = g.scale(-1.0);
    }
    let t = g.bz.atan2(g.s);
    let k = if g.bz == 0.0 { 1.0 / g.s } else { inv_sinc(t) };
    Ok(Multivector::raw([
        0.0,
        0.0,
        0.0,
        0.0,
        k * g.bx,
        k * g.by,
        k * g.bz,
        0.0,
    ]))
}

/// `exp(t log g)`: the identity at `t = 0` and `±g` at `t = 1`.
pub fn interpolate(g: &Motor, t: f64) -> Result<Motor> {
    Ok(exp_bivector(&log_motor(g)?.scale(t)))
}

/// `exp((α/2) P)` for the normalized euclidean point `P`: rotation by `α`
/// about `P`.
pub fn rotator(p: &Point, alpha: f64, tol: f64) -> Result<Motor> {
    if p.is_ideal(tol) {
        return classification("rotation center must be a euclidean point");
    }
    let p = p.normalize(tol)?;
    Ok(exp_bivector(&p.to_multivector().scale(alpha / 2.0)))
}

/// `exp((d/2) V)` for the normalized ideal point `V`: translation by `d`
/// perpendicular (counterclockwise) to `V`.
pub fn translator(v: &IdealPoint, d: f64) -> Result<Motor> {
    let v = v.normalize()?;
    Ok(exp_bivector(&v.to_multivector().scale(d / 2.0)))
}

/// Translator moving every point by the vector `(dx, dy)`.
pub fn translation(dx: f64, dy: f64) -> Motor {
    Motor {
        s: 1.0,
        bx: dy / 2.0,
        by: -dx / 2.0,
        bz: 0.0,
    }
}

/// A glide reflection read off an odd versor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlideDecomposition {
    /// The normalized mirror line.
    pub axis: Line,
    /// `2λ / ‖m‖`; `axis + (distance / 2) I` is the normalized versor.
    pub translation_distance: f64,
}

impl GlideDecomposition {
    /// The displacement the versor applies after reflecting in the axis.
    ///
    /// The reflected point comes out with weight `−1`, so the displacement
    /// runs against the axis direction: `−translation_distance · axis∞`.
    pub fn translation(&self) -> IdealPoint {
        let dir = IdealPoint::new(self.axis.b(), -self.axis.a());
        dir.scale(-self.translation_distance)
    }

    /// Reflection in the axis followed by [`Self::translation`].
    pub fn apply_point(&self, p: &Point, tol: f64) -> Result<Point> {
        let r = reflect(&self.axis, &p.to_multivector(), tol)?;
        let (x, y) = Point::from_multivector(&r)?
            .cartesian(tol)
            .ok_or_else(|| crate::PgaError::Classification("glide reflection applies to euclidean points".into()))?;
        let t = self.translation();
        Ok(Point::at(x + t.u, y + t.v))
    }
}

/// Axis and translation of `v = m + λ I`.
pub fn glide_decompose(v: &OddVersor, tol: f64) -> Result<GlideDecomposition> {
    if v.line.is_ideal(tol) {
        return domain("odd versor with an ideal line part has no glide axis");
    }
    let n = v.line.norm(tol)?;
    Ok(GlideDecomposition {
        axis: v.line.scale(1.0 / n),
        translation_distance: 2.0 * v.lambda / n,
    })
}

fn same_point(p: &Point, q: &Point, tol: f64) -> bool {
    match (p.cartesian(tol), q.cartesian(tol)) {
        (Some((x1, y1)), Some((x2, y2))) => {
            let scale = 1f64.max(x1.abs()).max(y1.abs()).max(x2.abs()).max(y2.abs());
            (x1 - x2).abs().max((y1 - y2).abs()) <= tol * scale
        }
        _ => false,
    }
}

fn same_oriented_line(m: &Line, n: &Line, tol: f64) -> bool {
    match (m.normalize(tol), n.normalize(tol)) {
        (Ok(m), Ok(n)) => {
            let scale = 1f64.max(m.c().abs()).max(n.c().abs());
            m.to_multivector().distance_inf(&n.to_multivector()) <= tol * scale
        }
        _ => false,
    }
}

/// Rotation about the normalized point `a` taking `m` (through `a`) to `m2`.
fn rotation_about(a: &Point, m: &Line, m2: &Line) -> Result<Motor> {
    let g = Motor::from_multivector(&(Multivector::ONE + m2.to_multivector() * m.to_multivector()));
    if g.norm() > 1e-6 {
        g.normalize()
    } else {
        // m2 = −m: a half turn about a
        Ok(Motor::from_multivector(&a.to_multivector()))
    }
}

/// The geometric construction: `a = A∨A'`, `r = (A+A')·a`, `c = m − m'`,
/// `C = r∧c`, `s = A∨C`, `g = r s`, for normalized incident inputs.
///
/// The result is not checked; [`solve_point_line_transport`] verifies it and
/// falls back to a translation followed by a rotation when it fails.
pub fn construct_transport(a: &Point, m: &Line, a2: &Point, m2: &Line, tol: f64) -> Result<Motor> {
    let (am, a2m) = (a.to_multivector(), a2.to_multivector());
    let join = am.join(&a2m);
    if join.is_zero(tol) {
        return rotation_about(a, m, m2);
    }
    let r = (am + a2m).dot(&join).grade(1);
    let c = m.to_multivector() - m2.to_multivector();
    let center = r.outer(&c);
    let mut s = am.join(&center);
    if s.is_zero(tol * 1f64.max(center.max_abs()) * 1f64.max(am.max_abs())) {
        // c parallel to r (or zero): s is the line through A parallel to r
        s = -(r.dot(&am) * am).grade(1);
    }
    Motor::from_multivector(&(r * s)).normalize()
}

/// Translation taking `a` to `a2`, then rotation about `a2`.
fn transport_by_parts(a: &Point, m: &Line, a2: &Point, m2: &Line) -> Result<Motor> {
    let t = translation(a2.x() - a.x(), a2.y() - a.y());
    let moved = t.apply_line(m)?.normalize(0.0)?;
    Ok(rotation_about(a2, &moved, m2)? * t)
}

/// The direct isometry taking `A` to `A2` and the oriented line `m` (through
/// `A`) to `m2` (through `A2`).
///
/// Coincident points reduce to a rotation about `A`; both pairs equal give
/// the identity. The result is checked on `A` and `m` before it is returned.
pub fn solve_point_line_transport(a: &Point, m: &Line, a2: &Point, m2: &Line, tol: f64) -> Result<Motor> {
    if a.is_ideal(tol) || a2.is_ideal(tol) {
        return classification("transport points must be euclidean");
    }
    if m.is_ideal(tol) || m2.is_ideal(tol) {
        return classification("transport lines must be euclidean");
    }
    let (a, a2, m, m2) = (
        a.normalize(tol)?,
        a2.normalize(tol)?,
        m.normalize(tol)?,
        m2.normalize(tol)?,
    );
    let check = 1e-6f64.max(tol);
    if !m.is_incident(&a, check) || !m2.is_incident(&a2, check) {
        return domain("each point must lie on its line");
    }
    if same_point(&a, &a2, tol) && same_oriented_line(&m, &m2, tol) {
        return Ok(Motor::IDENTITY);
    }
    let verify = |g: &Motor| -> bool {
        let ok_point = g.apply_point(&a).map(|p| same_point(&p, &a2, check)).unwrap_or(false);
        let ok_line = g
            .apply_line(&m)
            .map(|l| same_oriented_line(&l, &m2, check))
            .unwrap_or(false);
        ok_point && ok_line
    };
    if let Ok(g) = construct_transport(&a, &m, &a2, &m2, tol) {
        if verify(&g) {
            return Ok(g.canonical());
        }
    }
    let g = transport_by_parts(&a, &m, &a2, &m2)?;
    if verify(&g) {
        Ok(g.canonical())
    } else {
        domain("no direct isometry maps the given point and line onto the targets")
    }
}
