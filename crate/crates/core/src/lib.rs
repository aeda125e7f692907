//! Projective geometric algebra Cl*(2,0,1) for euclidean plane geometry.
//!
//! Lines are 1-vectors, points are 2-vectors, `∧` is the meet and the join
//! is obtained through Poincaré duality. On top of the algebra kernel sit the
//! metric layer (norms, ideal norms, polars), interpreted geometry
//! (distances, angles, projections, three-way products), isometries
//! (reflections, motors, glide reflections, exp/log) and a small
//! construction-script interpreter with SVG output.

pub mod algebra;
pub mod elements;
pub mod error;
pub mod geometry;
pub mod isometry;
pub mod metric;
pub mod script;
pub mod svg;
pub mod tables;

pub use algebra::{Blade, Multivector};
pub use elements::{Line, Point, Pseudoscalar, DEFAULT_TOL};
pub use error::{PgaError, Result};
pub use geometry::{Decomposition, Measurement, MeasurementKind, Primitive};
pub use isometry::{GlideDecomposition, Motor, OddVersor};
pub use metric::{IdealPoint, NormTag};
