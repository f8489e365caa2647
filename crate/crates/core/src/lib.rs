//! Orthogonal and staircase connectivity in the plane.
//!
//! The crate decides orthogonal convexity, orthogonal connectivity and
//! staircase connectivity on three models, and constructs the paths that
//! witness them:
//!
//! * [`grid`]: finite sets of unit cells, where every question has a cheap
//!   brute-force oracle;
//! * [`rect`]: finite unions of closed axis-aligned rectangles, degenerate ones
//!   included, where zero widths and cut points occur;
//! * [`convex`]: strictly convex polygons, with tangent-cone classification,
//!   rotation into staircase position, and s-extreme points.
//!
//! [`routing`] builds few-link orthogonal routes around convex obstacles.
//!
//! Geometry is generic over [`Scalar`]; the aliases below fix it to exact
//! [`BigRational`](num_rational::BigRational) arithmetic, which is what every
//! decision procedure is meant to run on.

mod error;
mod path;
mod point;
mod polygon;
mod predicates;
mod scalar;

pub mod convex;
pub mod gen;
pub mod grid;
pub mod rect;
pub mod routing;

pub use error::Error;
pub use path::{OrthoPath, PathError};
pub use point::{Axis, Direction, Point2};
pub use polygon::{convex_hull, BoundaryLocation, ConvexPolygon};
pub use predicates::{dot_sign, orient, ray_extent, ray_hits_convex, segment_hits_convex, HitMode, Orientation};
pub use scalar::{format_rational, parse_rational, ratio, Scalar};

pub type Rational = num_rational::BigRational;
pub type Point = Point2<Rational>;
pub type Polygon = ConvexPolygon<Rational>;
pub type Path = OrthoPath<Rational>;
pub type Complex = rect::RectComplex<Rational>;
pub type Rectangle = rect::Rect<Rational>;
pub type Scene = routing::RoutingScene<Rational>;

pub type PointF64 = Point2<f64>;
pub type PolygonF64 = ConvexPolygon<f64>;
