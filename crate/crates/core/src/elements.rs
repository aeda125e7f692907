//! Typed views of the algebra: lines (grade 1), points (grade 2) and
//! pseudoscalars (grade 3).

use std::fmt;

use crate::algebra::{Blade, Multivector};
use crate::error::{domain, PgaError, Result};

/// Default tolerance for "is zero" and "is ideal" predicates, applied
/// relative to the largest coefficient of the tested element.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The 1-vector `c e0 + a e1 + b e2`, i.e. the line `ax + by + cz = 0`,
/// written `[a, b, c]`.
#[derive(Clone, Copy, PartialEq)]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

/// The 2-vector `x E1 + y E2 + z E0`, written `(x, y, z)`.
#[derive(Clone, Copy, PartialEq)]
pub struct Point {
    x: f64,
    y: f64,
    z: f64,
}

/// `s I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pseudoscalar(pub f64);

fn check(values: [f64; 3], what: &'static str) -> Result<()> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(PgaError::NonFinite(what));
    }
    if values.iter().all(|v| *v == 0.0) {
        return domain(format!("{what} with all coordinates zero"));
    }
    Ok(())
}

impl Line {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        check([a, b, c], "line")?;
        Ok(Line { a, b, c })
    }

    pub(crate) fn raw(a: f64, b: f64, c: f64) -> Self {
        Line { a, b, c }
    }

    /// The ideal line `ω = e0`.
    pub fn omega() -> Self {
        Line::raw(0.0, 0.0, 1.0)
    }

    /// Grade-1 part of `m`; fails when that part vanishes.
    pub fn from_multivector(m: &Multivector) -> Result<Self> {
        Line::new(m[Blade::e1], m[Blade::e2], m[Blade::e0])
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::raw([0.0, self.c, self.a, self.b, 0.0, 0.0, 0.0, 0.0])
    }

    pub fn scale(&self, s: f64) -> Self {
        Line::raw(self.a * s, self.b * s, self.c * s)
    }

    pub fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    /// Intersection point `self ∧ other`; the zero element for identical lines.
    pub fn meet(&self, other: &Line) -> Multivector {
        self.to_multivector().outer(&other.to_multivector())
    }

    pub(crate) fn max_abs(&self) -> f64 {
        self.a.abs().max(self.b.abs()).max(self.c.abs())
    }

    /// Value of the line equation at `p`: `ax + by + cz`.
    pub fn eval(&self, p: &Point) -> f64 {
        self.a * p.x + self.b * p.y + self.c * p.z
    }

    /// Incidence `self ∧ p = 0`, tested relative to the input magnitudes.
    pub fn is_incident(&self, p: &Point, tol: f64) -> bool {
        let scale = self.max_abs() * p.max_abs();
        self.eval(p).abs() <= tol * scale
    }
}

impl Point {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        check([x, y, z], "point")?;
        Ok(Point { x, y, z })
    }

    pub(crate) fn raw(x: f64, y: f64, z: f64) -> Self {
        Point { x, y, z }
    }

    /// The normalized euclidean point `(x, y, 1)`.
    ///
    /// # Panics
    /// If `x` or `y` is not finite.
    pub fn at(x: f64, y: f64) -> Self {
        assert!(x.is_finite() && y.is_finite(), "non-finite point coordinates");
        Point { x, y, z: 1.0 }
    }

    pub fn origin() -> Self {
        Point::at(0.0, 0.0)
    }

    /// Grade-2 part of `m`; fails when that part vanishes.
    pub fn from_multivector(m: &Multivector) -> Result<Self> {
        Point::new(m[Blade::E1], m[Blade::E2], m[Blade::E0])
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::raw([0.0, 0.0, 0.0, 0.0, self.x, self.y, self.z, 0.0])
    }

    pub fn scale(&self, s: f64) -> Self {
        Point::raw(self.x * s, self.y * s, self.z * s)
    }

    /// Joining line `self ∨ other`; the zero element for identical points.
    pub fn join(&self, other: &Point) -> Multivector {
        self.to_multivector().join(&other.to_multivector())
    }

    pub(crate) fn max_abs(&self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }

    /// Euclidean coordinates `(x/z, y/z)`; `None` for ideal points.
    pub fn cartesian(&self, tol: f64) -> Option<(f64, f64)> {
        if self.z.abs() <= tol * self.max_abs() {
            None
        } else {
            Some((self.x / self.z, self.y / self.z))
        }
    }
}

impl Pseudoscalar {
    pub fn from_multivector(m: &Multivector) -> Self {
        Pseudoscalar(m.pseudoscalar_part())
    }

    /// Signed magnitude `S(sI) = s`.
    pub fn magnitude(&self) -> f64 {
        self.0
    }

    pub fn to_multivector(&self) -> Multivector {
        Multivector::from_blade(Blade::I).scale(self.0)
    }
}

impl From<Line> for Multivector {
    fn from(l: Line) -> Self {
        l.to_multivector()
    }
}

impl From<Point> for Multivector {
    fn from(p: Point) -> Self {
        p.to_multivector()
    }
}

impl From<Pseudoscalar> for Multivector {
    fn from(p: Pseudoscalar) -> Self {
        p.to_multivector()
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}
