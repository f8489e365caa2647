//! Tangent cones, angle classes and staircase certificates for strictly
//! convex polygons.

mod extreme;
mod rotate;
mod union;

pub use extreme::{axis_chords, s_extreme_points, staircase_through, ExtremeReason};
pub use rotate::{rotate_to_staircase, AffineMap};
pub use union::{check_hull_obtuse, hull_of_union, union_orthogonal_connectivity_check, UnionCheck};

use std::cmp::Ordering;

use crate::{dot_sign, BoundaryLocation, ConvexPolygon, Direction, Error, Point2, Scalar};

/// Angular size of the tangent cone: below, at, or above a right angle, or a
/// straight angle at an edge point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaClass {
    Acute,
    Right,
    ObtuseAngle,
    Flat,
}

/// Closed cone at `apex` swept counter-clockwise from `edge_dirs.0` to
/// `edge_dirs.1`. At an edge point the two directions are opposite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentCone<T> {
    pub apex: Point2<T>,
    pub edge_dirs: (Point2<T>, Point2<T>),
    pub closed: bool,
}

impl<T: Scalar> TangentCone<T> {
    pub fn contains_dir(&self, d: &Point2<T>) -> bool {
        let (u, v) = &self.edge_dirs;
        if u.cross(v).is_zero() {
            return !u.cross(d).is_negative();
        }
        !u.cross(d).is_negative() && !d.cross(v).is_negative()
    }
}

pub fn tangent_cone<T: Scalar>(poly: &ConvexPolygon<T>, x: &Point2<T>) -> Result<TangentCone<T>, Error> {
    let (u, v) = match poly.boundary_location(x).ok_or(Error::NotOnBoundary)? {
        BoundaryLocation::Vertex(i) => (poly.next(i) - x, poly.prev(i) - x),
        BoundaryLocation::Edge(i) => (poly.next(i) - x, poly.vertex(i) - x),
    };
    Ok(TangentCone { apex: x.clone(), edge_dirs: (u, v), closed: true })
}

pub fn alpha_class<T: Scalar>(poly: &ConvexPolygon<T>, x: &Point2<T>) -> Result<AlphaClass, Error> {
    match poly.boundary_location(x).ok_or(Error::NotOnBoundary)? {
        BoundaryLocation::Edge(_) => Ok(AlphaClass::Flat),
        BoundaryLocation::Vertex(i) => vertex_class(poly, i),
    }
}

fn vertex_class<T: Scalar>(poly: &ConvexPolygon<T>, i: usize) -> Result<AlphaClass, Error> {
    let x = poly.vertex(i);
    Ok(match dot_sign(&(poly.next(i) - x), &(poly.prev(i) - x))? {
        Ordering::Greater => AlphaClass::Acute,
        Ordering::Equal => AlphaClass::Right,
        Ordering::Less => AlphaClass::ObtuseAngle,
    })
}

/// Every vertex is right or obtuse. Polygon cones are closed, so right
/// vertices always qualify.
pub fn is_obtuse_body<T: Scalar>(poly: &ConvexPolygon<T>) -> bool {
    (0..poly.len()).all(|i| vertex_class(poly, i).expect("distinct vertices") != AlphaClass::Acute)
}

/// Vertices whose cone is acute or right.
pub fn non_obtuse_vertices<T: Scalar>(poly: &ConvexPolygon<T>) -> Vec<usize> {
    (0..poly.len())
        .filter(|&i| matches!(vertex_class(poly, i), Ok(AlphaClass::Acute | AlphaClass::Right)))
        .collect()
}

/// Axis directions inside the closed tangent cone at vertex `i`.
pub fn cone_contains_axis_dir<T: Scalar>(poly: &ConvexPolygon<T>, i: usize) -> Result<Vec<Direction>, Error> {
    if i >= poly.len() {
        return Err(Error::NoSuchVertex(i));
    }
    let cone = tangent_cone(poly, poly.vertex(i))?;
    Ok(Direction::ALL.into_iter().filter(|d| cone.contains_dir(&d.unit())).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexCertificate<T> {
    Pass,
    /// Both axis widths vanish at this vertex.
    Violation { vertex: usize, point: Point2<T> },
}

impl<T> ConvexCertificate<T> {
    pub fn passed(&self) -> bool {
        matches!(self, ConvexCertificate::Pass)
    }
}

pub fn is_staircase_connected_convex<T: Scalar>(poly: &ConvexPolygon<T>) -> ConvexCertificate<T> {
    for i in 0..poly.len() {
        if cone_contains_axis_dir(poly, i).expect("index in range").is_empty() {
            return ConvexCertificate::Violation { vertex: i, point: poly.vertex(i).clone() };
        }
    }
    ConvexCertificate::Pass
}
