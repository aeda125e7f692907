//! Norms, normalization, ideal norms and euclidean/ideal classification.
//!
//! Norm domains:
//!
//! | element         | norm                      | ideal norm          |
//! |-----------------|---------------------------|---------------------|
//! | line `[a,b,c]`  | `√(a²+b²)`, euclidean     | `c`, ideal (signed) |
//! | point `(x,y,z)` | `z`, euclidean (signed)   | `√(x²+y²)`, ideal   |
//! | `aI`            |                           | `a` (signed)        |
//!
//! Asking for the wrong norm of an element is a classification error.

use crate::algebra::{Blade, Multivector};
use crate::elements::{Line, Point, Pseudoscalar};
use crate::error::{classification, domain, Result};

/// Which row of the norm table an element falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormTag {
    EuclideanLine,
    IdealLine,
    EuclideanPoint,
    IdealPoint,
    Pseudoscalar,
}

/// An ideal point `u E1 + v E2`, read as the free vector `(u, v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealPoint {
    pub u: f64,
    pub v: f64,
}

impl IdealPoint {
    pub fn new(u: f64, v: f64) -> Self {
        IdealPoint { u, v }
    }

    pub fn ideal_norm(&self) -> f64 {
        self.u.hypot(self.v)
    }

    /// `⟨U, V⟩∞`, the positive definite inner product on the ideal line.
    pub fn inner(&self, other: &IdealPoint) -> f64 {
        self.u * other.u + self.v * other.v
    }

    pub fn normalize(&self) -> Result<IdealPoint> {
        let n = self.ideal_norm();
        if n == 0.0 {
            return domain("cannot normalize the zero ideal point");
        }
        Ok(IdealPoint::new(self.u / n, self.v / n))
    }

    pub fn scale(&self, s: f64) -> IdealPoint {
        IdealPoint::new(self.u * s, self.v * s)
    }

    pub fn to_point(&self) -> Point {
        Point::raw(self.u, self.v, 0.0)
    }

    pub fn to_multivector(&self) -> Multivector {
        self.to_point().to_multivector()
    }

    /// Reads `p` as an ideal point; fails if `p` is euclidean.
    pub fn from_point(p: &Point, tol: f64) -> Result<IdealPoint> {
        if !p.is_ideal(tol) {
            return classification(format!("{p:?} is a euclidean point, not an ideal point"));
        }
        Ok(IdealPoint::new(p.x(), p.y()))
    }
}

impl From<IdealPoint> for Multivector {
    fn from(p: IdealPoint) -> Self {
        p.to_multivector()
    }
}

impl Line {
    pub fn is_ideal(&self, tol: f64) -> bool {
        self.a().hypot(self.b()) <= tol * self.max_abs()
    }

    pub fn tag(&self, tol: f64) -> NormTag {
        if self.is_ideal(tol) {
            NormTag::IdealLine
        } else {
            NormTag::EuclideanLine
        }
    }

    /// `√(a² + b²)`; classification error for ideal lines.
    pub fn norm(&self, tol: f64) -> Result<f64> {
        if self.is_ideal(tol) {
            return classification("ideal line has no euclidean norm, use ideal_norm");
        }
        Ok(self.a().hypot(self.b()))
    }

    /// `c` for an ideal line `cω`; classification error for euclidean lines.
    pub fn ideal_norm(&self, tol: f64) -> Result<f64> {
        if !self.is_ideal(tol) {
            return classification("euclidean line has no ideal norm, use norm");
        }
        Ok(self.c())
    }

    /// Euclidean lines are scaled to square 1; ideal lines to ideal norm 1.
    pub fn normalize(&self, tol: f64) -> Result<Line> {
        let n = if self.is_ideal(tol) {
            self.c()
        } else {
            self.a().hypot(self.b())
        };
        if n == 0.0 {
            return domain("cannot normalize the zero line");
        }
        Ok(Line::raw(self.a() / n, self.b() / n, self.c() / n))
    }

    /// The direction point `m ∧ ω`.
    pub fn ideal_point(&self, tol: f64) -> Result<IdealPoint> {
        if self.is_ideal(tol) {
            return domain("the ideal line has no ideal point of its own");
        }
        Ok(IdealPoint::new(self.b(), -self.a()))
    }
}

impl Point {
    /// `P ∧ ω = 0`, tested relative to the largest coordinate.
    pub fn is_ideal(&self, tol: f64) -> bool {
        self.z().abs() <= tol * self.max_abs()
    }

    pub fn tag(&self, tol: f64) -> NormTag {
        if self.is_ideal(tol) {
            NormTag::IdealPoint
        } else {
            NormTag::EuclideanPoint
        }
    }

    /// Signed weight `z`; classification error for ideal points.
    pub fn norm(&self, tol: f64) -> Result<f64> {
        if self.is_ideal(tol) {
            return classification("ideal point has no euclidean norm, use ideal_norm");
        }
        Ok(self.z())
    }

    /// `√(x² + y²)`; classification error for euclidean points.
    pub fn ideal_norm(&self, tol: f64) -> Result<f64> {
        if !self.is_ideal(tol) {
            return classification("euclidean point has no ideal norm, use norm");
        }
        Ok(self.x().hypot(self.y()))
    }

    /// Euclidean points are divided by `z`; ideal points scaled to unit ideal norm.
    pub fn normalize(&self, tol: f64) -> Result<Point> {
        let n = if self.is_ideal(tol) {
            self.x().hypot(self.y())
        } else {
            self.z()
        };
        if n == 0.0 {
            return domain("cannot normalize the zero point");
        }
        Ok(Point::raw(self.x() / n, self.y() / n, self.z() / n))
    }
}

impl Pseudoscalar {
    pub fn ideal_norm(&self) -> f64 {
        self.0
    }
}

/// Polar `I x`: a normalized euclidean line maps to its unit perpendicular
/// ideal point, a normalized euclidean point to `-ω`, ideal elements to 0.
pub fn polar(x: &Multivector) -> Multivector {
    x.polar()
}

/// Normalized point factorization `P = m n` into two orthonormal lines.
///
/// `m` is the line through `P` perpendicular to `e1` (i.e. horizontal), with
/// `e2` as fallback, and `n = m P`.
pub fn factor_point(p: &Point, tol: f64) -> Result<(Line, Line)> {
    let p = p.normalize(tol)?;
    if p.is_ideal(tol) {
        return classification("only euclidean points factor into two euclidean lines");
    }
    let pm = p.to_multivector();
    let candidate = Multivector::from_blade(Blade::e1).dot(&pm).grade(1);
    let m = match Line::from_multivector(&candidate) {
        Ok(l) if !l.is_ideal(tol) => l.normalize(tol)?,
        _ => Line::raw(0.0, 1.0, 0.0),
    };
    let n = Line::from_multivector(&m.to_multivector().gp(&pm))?;
    Ok((m, n))
}
