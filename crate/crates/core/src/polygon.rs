use crate::predicates::{orient, Orientation};
use crate::{Error, Point2, Scalar};

/// A bounded, strictly convex polygon with counter-clockwise vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Point2<T>>,
}

/// Where a boundary point sits: on vertex `i`, or in the relative interior of
/// the edge from vertex `i` to vertex `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryLocation {
    Vertex(usize),
    Edge(usize),
}

impl<T: Scalar> ConvexPolygon<T> {
    pub fn new(vertices: Vec<Point2<T>>) -> Result<Self, Error> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::RepeatedVertex((i + 1) % n));
            }
        }
        for i in 0..n {
            let prev = &vertices[(i + n - 1) % n];
            let next = &vertices[(i + 1) % n];
            if orient(prev, &vertices[i], next) != Orientation::CounterClockwise {
                return Err(Error::NotStrictlyConvex(i));
            }
        }
        // Local left turns everywhere still admit a polygon that winds twice;
        // the total turning must be a single revolution.
        let anchor = &vertices[0];
        for i in 1..n - 1 {
            if orient(anchor, &vertices[i], &vertices[i + 1]) != Orientation::CounterClockwise {
                return Err(Error::NotStrictlyConvex(i));
            }
        }
        Ok(ConvexPolygon { vertices })
    }

    /// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
    pub fn rectangle(x0: T, y0: T, x1: T, y1: T) -> Result<Self, Error> {
        ConvexPolygon::new(vec![
            Point2::new(x0.clone(), y0.clone()),
            Point2::new(x1.clone(), y0),
            Point2::new(x1, y1.clone()),
            Point2::new(x0, y1),
        ])
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> &Point2<T> {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn next(&self, i: usize) -> &Point2<T> {
        self.vertex(i + 1)
    }

    pub fn prev(&self, i: usize) -> &Point2<T> {
        self.vertex(i + self.vertices.len() - 1)
    }

    /// Edges as (start, end) pairs in counter-clockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2<T>, &Point2<T>)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Lower-left and upper-right corners of the bounding box.
    pub fn bbox(&self) -> (Point2<T>, Point2<T>) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            if v.x < lo.x {
                lo.x = v.x.clone();
            }
            if v.y < lo.y {
                lo.y = v.y.clone();
            }
            if v.x > hi.x {
                hi.x = v.x.clone();
            }
            if v.y > hi.y {
                hi.y = v.y.clone();
            }
        }
        (lo, hi)
    }

    pub fn contains_closed(&self, p: &Point2<T>) -> bool {
        self.edges().all(|(a, b)| orient(a, b, p) != Orientation::Clockwise)
    }

    pub fn contains_interior(&self, p: &Point2<T>) -> bool {
        self.edges().all(|(a, b)| orient(a, b, p) == Orientation::CounterClockwise)
    }

    pub fn vertex_index(&self, p: &Point2<T>) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    pub fn boundary_location(&self, p: &Point2<T>) -> Option<BoundaryLocation> {
        if let Some(i) = self.vertex_index(p) {
            return Some(BoundaryLocation::Vertex(i));
        }
        if !self.contains_closed(p) {
            return None;
        }
        self.edges()
            .position(|(a, b)| orient(a, b, p) == Orientation::Collinear)
            .map(BoundaryLocation::Edge)
    }

    /// Apply `f` to every vertex. `f` must preserve strict convexity and
    /// orientation (e.g. a translation or an orientation-preserving similarity).
    pub fn map_vertices(&self, f: impl Fn(&Point2<T>) -> Point2<T>) -> Result<Self, Error> {
        ConvexPolygon::new(self.vertices.iter().map(f).collect())
    }

    pub fn translate(&self, by: &Point2<T>) -> Self {
        self.map_vertices(|v| v + by).expect("translation preserves convexity")
    }

    pub fn scale(&self, factor: &T) -> Result<Self, Error> {
        self.map_vertices(|v| v.scale(factor))
    }

    /// Whether the closed polygons share at least one point.
    pub fn intersects_closed(&self, other: &Self) -> bool {
        !separated(self, other, false)
    }

    /// Whether the interiors share a point.
    pub fn interiors_intersect(&self, other: &Self) -> bool {
        !separated(self, other, true)
    }

    /// Largest squared distance between two vertices.
    pub fn diameter_squared(&self) -> T {
        let mut best = T::zero();
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                let d = (a - b).norm_squared();
                if d > best {
                    best = d;
                }
            }
        }
        best
    }
}

/// Separating-axis test over both polygons' edge normals. With `touching_ok`,
/// projections that meet in a single value still count as separated.
fn separated<T: Scalar>(p: &ConvexPolygon<T>, q: &ConvexPolygon<T>, touching_ok: bool) -> bool {
    let axes = p
        .edges()
        .chain(q.edges())
        .map(|(a, b)| (b - a).perp());
    for axis in axes {
        let (p_lo, p_hi) = project(p, &axis);
        let (q_lo, q_hi) = project(q, &axis);
        let apart = if touching_ok {
            p_hi <= q_lo || q_hi <= p_lo
        } else {
            p_hi < q_lo || q_hi < p_lo
        };
        if apart {
            return true;
        }
    }
    false
}

fn project<T: Scalar>(poly: &ConvexPolygon<T>, axis: &Point2<T>) -> (T, T) {
    let mut it = poly.vertices().iter().map(|v| v.dot(axis));
    let first = it.next().expect("polygon has vertices");
    it.fold((first.clone(), first), |(lo, hi), d| {
        let lo = if d < lo { d.clone() } else { lo };
        let hi = if d > hi { d } else { hi };
        (lo, hi)
    })
}

/// Convex hull by Andrew's monotone chain. Collinear boundary points are
/// dropped, so the result is strictly convex. Fails when the input spans no area.
pub fn convex_hull<T: Scalar>(points: &[Point2<T>]) -> Result<ConvexPolygon<T>, Error> {
    let mut pts: Vec<Point2<T>> = points.to_vec();
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .expect("comparable coordinates")
            .then_with(|| a.y.partial_cmp(&b.y).expect("comparable coordinates"))
    });
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::TooFewVertices(pts.len()));
    }
    let mut lower: Vec<Point2<T>> = Vec::with_capacity(pts.len());
    for p in &pts {
        while lower.len() >= 2
            && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Point2<T>> = Vec::with_capacity(pts.len());
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    ConvexPolygon::new(lower)
}
