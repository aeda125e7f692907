//! Python bindings for `pga2d`: points, lines, motors and the measurement,
//! reflection, motion and transport operations.

use pga2d::isometry::{self, Versor};
use pga2d::{geometry, tables, Blade, Multivector, PgaError, Primitive, DEFAULT_TOL};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: PgaError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fmt(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

/// A point `x E1 + y E2 + z E0`; `z = 0` gives an ideal point.
#[pyclass(name = "Point", module = "pga2d_py", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyPoint(pga2d::Point);

#[pymethods]
impl PyPoint {
    #[new]
    #[pyo3(signature = (x, y, z = 1.0))]
    fn new(x: f64, y: f64, z: f64) -> PyResult<Self> {
        pga2d::Point::new(x, y, z).map(PyPoint).map_err(err)
    }

    #[getter]
    fn x(&self) -> f64 {
        self.0.x()
    }

    #[getter]
    fn y(&self) -> f64 {
        self.0.y()
    }

    #[getter]
    fn z(&self) -> f64 {
        self.0.z()
    }

    /// `(x/z, y/z)`, or `None` for an ideal point.
    fn cartesian(&self) -> Option<(f64, f64)> {
        self.0.cartesian(DEFAULT_TOL)
    }

    fn is_ideal(&self) -> bool {
        self.0.is_ideal(DEFAULT_TOL)
    }

    fn normalize(&self) -> PyResult<Self> {
        self.0.normalize(DEFAULT_TOL).map(PyPoint).map_err(err)
    }

    /// The joining line.
    fn join(&self, other: &PyPoint) -> PyResult<PyLine> {
        pga2d::Line::from_multivector(&self.0.join(&other.0))
            .map(PyLine)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Point({}, {}, {})", fmt(self.0.x()), fmt(self.0.y()), fmt(self.0.z()))
    }

    fn __eq__(&self, other: &PyPoint) -> bool {
        self.0 == other.0
    }
}

/// The line `a x + b y + c = 0`, stored as `c e0 + a e1 + b e2`.
#[pyclass(name = "Line", module = "pga2d_py", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyLine(pga2d::Line);

#[pymethods]
impl PyLine {
    #[new]
    fn new(a: f64, b: f64, c: f64) -> PyResult<Self> {
        pga2d::Line::new(a, b, c).map(PyLine).map_err(err)
    }

    #[getter]
    fn a(&self) -> f64 {
        self.0.a()
    }

    #[getter]
    fn b(&self) -> f64 {
        self.0.b()
    }

    #[getter]
    fn c(&self) -> f64 {
        self.0.c()
    }

    fn norm(&self) -> PyResult<f64> {
        self.0.norm(DEFAULT_TOL).map_err(err)
    }

    fn normalize(&self) -> PyResult<Self> {
        self.0.normalize(DEFAULT_TOL).map(PyLine).map_err(err)
    }

    /// The intersection point; ideal for parallel lines.
    fn meet(&self, other: &PyLine) -> PyResult<PyPoint> {
        pga2d::Point::from_multivector(&self.0.meet(&other.0))
            .map(PyPoint)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Line({}, {}, {})", fmt(self.0.a()), fmt(self.0.b()), fmt(self.0.c()))
    }

    fn __eq__(&self, other: &PyLine) -> bool {
        self.0 == other.0
    }
}

/// A direct isometry `s + bx E1 + by E2 + bz E0`, acting by `g X g̃`.
#[pyclass(name = "Motor", module = "pga2d_py", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyMotor(pga2d::Motor);

#[pymethods]
impl PyMotor {
    #[new]
    fn new(s: f64, bx: f64, by: f64, bz: f64) -> PyResult<Self> {
        pga2d::Motor::new(s, bx, by, bz).map(PyMotor).map_err(err)
    }

    #[staticmethod]
    fn identity() -> Self {
        PyMotor(pga2d::Motor::IDENTITY)
    }

    /// `(s, bx, by, bz)`.
    fn coords(&self) -> (f64, f64, f64, f64) {
        let [s, x, y, z] = self.0.coords();
        (s, x, y, z)
    }

    fn reverse(&self) -> Self {
        PyMotor(self.0.reverse())
    }

    fn normalize(&self) -> PyResult<Self> {
        self.0.normalize().map(PyMotor).map_err(err)
    }

    fn apply_point(&self, p: &PyPoint) -> PyResult<PyPoint> {
        self.0.apply_point(&p.0).map(PyPoint).map_err(err)
    }

    fn apply_line(&self, m: &PyLine) -> PyResult<PyLine> {
        self.0.apply_line(&m.0).map(PyLine).map_err(err)
    }

    /// Two lines `(a, b)` whose product `b a` is this motor.
    fn factor(&self) -> PyResult<(PyLine, PyLine)> {
        self.0.factor().map(|(a, b)| (PyLine(a), PyLine(b))).map_err(err)
    }

    /// `self` after `other`.
    fn __mul__(&self, other: &PyMotor) -> Self {
        PyMotor(self.0 * other.0)
    }

    fn __repr__(&self) -> String {
        let [s, x, y, z] = self.0.coords();
        format!("Motor({}, {}, {}, {})", fmt(s), fmt(x), fmt(y), fmt(z))
    }
}

#[derive(FromPyObject)]
enum Element {
    Point(PyPoint),
    Line(PyLine),
}

impl Element {
    fn primitive(&self) -> Primitive {
        match self {
            Element::Point(p) => p.0.into(),
            Element::Line(m) => m.0.into(),
        }
    }

    fn to_multivector(&self) -> Multivector {
        self.primitive().to_multivector()
    }
}

/// Distance between two elements: points, parallel lines, or a line and a point (signed).
#[pyfunction]
fn distance(x: Element, y: Element) -> PyResult<f64> {
    geometry::distance(x.primitive(), y.primitive(), DEFAULT_TOL)
        .map(|m| m.value)
        .map_err(err)
}

/// Angle in `[0, π]` between lines, ideal points, or a line and an ideal point.
#[pyfunction]
fn angle(x: Element, y: Element) -> PyResult<f64> {
    geometry::angle(x.primitive(), y.primitive(), DEFAULT_TOL)
        .map(|m| m.value)
        .map_err(err)
}

/// Reflection of a point or line in the line `m`.
#[pyfunction]
fn reflect(py: Python<'_>, m: &PyLine, x: Element) -> PyResult<Py<PyAny>> {
    let image = isometry::reflect(&m.0, &x.to_multivector(), DEFAULT_TOL).map_err(err)?;
    match x {
        Element::Point(_) => {
            let p = pga2d::Point::from_multivector(&image).map_err(err)?;
            Ok(Py::new(py, PyPoint(p.scale(-1.0)))?.into_any())
        }
        Element::Line(_) => {
            let l = pga2d::Line::from_multivector(&image).map_err(err)?;
            Ok(Py::new(py, PyLine(l))?.into_any())
        }
    }
}

/// Rotation about `p` by `alpha` radians (clockwise for a point of weight +1).
#[pyfunction]
fn rotator(p: &PyPoint, alpha: f64) -> PyResult<PyMotor> {
    isometry::rotator(&p.0, alpha, DEFAULT_TOL).map(PyMotor).map_err(err)
}

/// Translation by `(dx, dy)`.
#[pyfunction]
fn translation(dx: f64, dy: f64) -> PyMotor {
    PyMotor(isometry::translation(dx, dy))
}

/// The motor taking the point `a` on line `m` to `a2` on `m2`, respecting orientation.
#[pyfunction]
fn solve(a: &PyPoint, m: &PyLine, a2: &PyPoint, m2: &PyLine) -> PyResult<PyMotor> {
    isometry::solve_point_line_transport(&a.0, &m.0, &a2.0, &m2.0, DEFAULT_TOL)
        .map(PyMotor)
        .map_err(err)
}

/// `exp(bx E1 + by E2 + bz E0)`.
#[pyfunction]
fn exp(bx: f64, by: f64, bz: f64) -> PyMotor {
    let b = bx * Multivector::from_blade(Blade::E1) + by * Multivector::from_blade(Blade::E2);
    let b = b + bz * Multivector::from_blade(Blade::E0);
    PyMotor(isometry::exp_bivector(&b))
}

/// Bivector `(bx, by, bz)` with `exp(B) = g`.
#[pyfunction]
fn log(g: &PyMotor) -> PyResult<(f64, f64, f64)> {
    let b = isometry::log_motor(&g.0).map_err(err)?;
    Ok((b[Blade::E1], b[Blade::E2], b[Blade::E0]))
}

/// `g^t`, the motion interpolated a fraction `t` of the way.
#[pyfunction]
fn interpolate(g: &PyMotor, t: f64) -> PyResult<PyMotor> {
    isometry::interpolate(&g.0, t).map(PyMotor).map_err(err)
}

/// Parallel and orthogonal parts of `x` relative to `onto`, as coefficient lists
/// in the order `1, e0, e1, e2, E1, E2, E0, I`.
#[pyfunction]
fn project(x: Element, onto: Element) -> PyResult<(Vec<f64>, Vec<f64>)> {
    let d = geometry::project(x.primitive(), onto.primitive(), DEFAULT_TOL).map_err(err)?;
    Ok((
        d.parallel_part.coefficients().to_vec(),
        d.orthogonal_part.coefficients().to_vec(),
    ))
}

/// Product of two multivectors given as coefficient lists.
#[pyfunction]
fn geometric_product(u: [f64; 8], v: [f64; 8]) -> PyResult<Vec<f64>> {
    let u = Multivector::new(u).map_err(err)?;
    let v = Multivector::new(v).map_err(err)?;
    Ok((u * v).coefficients().to_vec())
}

/// The multiplication table and the duality map as text.
#[pyfunction]
fn cayley_table() -> String {
    format!("{}\n{}", tables::cayley_table(), tables::dual_table())
}

#[pymodule]
fn pga2d_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoint>()?;
    m.add_class::<PyLine>()?;
    m.add_class::<PyMotor>()?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(angle, m)?)?;
    m.add_function(wrap_pyfunction!(reflect, m)?)?;
    m.add_function(wrap_pyfunction!(rotator, m)?)?;
    m.add_function(wrap_pyfunction!(translation, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(exp, m)?)?;
    m.add_function(wrap_pyfunction!(log, m)?)?;
    m.add_function(wrap_pyfunction!(interpolate, m)?)?;
    m.add_function(wrap_pyfunction!(project, m)?)?;
    m.add_function(wrap_pyfunction!(geometric_product, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_table, m)?)?;
    Ok(())
}
