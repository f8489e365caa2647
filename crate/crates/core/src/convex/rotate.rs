use super::{is_obtuse_body, is_staircase_connected_convex, non_obtuse_vertices};
use crate::{ConvexPolygon, Point2, Scalar};

/// `p -> M p + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap<T> {
    pub matrix: [[T; 2]; 2],
    pub translation: Point2<T>,
}

impl<T: Scalar> AffineMap<T> {
    pub fn identity() -> Self {
        AffineMap { matrix: [[T::one(), T::zero()], [T::zero(), T::one()]], translation: Point2::zero() }
    }

    /// Rotation taking `d` to the positive x-axis, scaled by `|d|`, applied
    /// after translating `origin` to zero.
    pub fn align(origin: &Point2<T>, d: &Point2<T>) -> Self {
        let matrix = [[d.x.clone(), d.y.clone()], [-d.y.clone(), d.x.clone()]];
        let mut map = AffineMap { matrix, translation: Point2::zero() };
        map.translation = -map.linear(origin);
        map
    }

    fn linear(&self, p: &Point2<T>) -> Point2<T> {
        let [[a, b], [c, d]] = &self.matrix;
        Point2::new(a.clone() * p.x.clone() + b.clone() * p.y.clone(), c.clone() * p.x.clone() + d.clone() * p.y.clone())
    }

    pub fn apply(&self, p: &Point2<T>) -> Point2<T> {
        self.linear(p) + self.translation.clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == AffineMap::identity()
    }

    /// Columns orthogonal with equal squared norms and positive determinant.
    pub fn is_similarity(&self) -> bool {
        let [[a, b], [c, d]] = &self.matrix;
        let col0 = Point2::new(a.clone(), c.clone());
        let col1 = Point2::new(b.clone(), d.clone());
        col0.dot(&col1).is_zero() && col0.norm_squared() == col1.norm_squared() && col0.cross(&col1).is_positive()
    }

    /// Square of the uniform scale factor.
    pub fn scale_squared(&self) -> T {
        let [[a, _], [c, _]] = &self.matrix;
        a.clone() * a.clone() + c.clone() * c.clone()
    }

    /// `(a, b, c, d, e, f)` with `x' = a x + b y + e` and `y' = c x + d y + f`.
    pub fn to_tuple(&self) -> [T; 6] {
        let [[a, b], [c, d]] = self.matrix.clone();
        [a, b, c, d, self.translation.x.clone(), self.translation.y.clone()]
    }
}

/// A rotated and uniformly scaled copy of `poly` that is staircase connected.
/// Polygons that already pass get the identity. Otherwise the chord from
/// the first non-obtuse vertex to the second one (or to its next vertex when
/// it is the only one) becomes horizontal.
pub fn rotate_to_staircase<T: Scalar>(poly: &ConvexPolygon<T>) -> (ConvexPolygon<T>, AffineMap<T>) {
    if is_obtuse_body(poly) || is_staircase_connected_convex(poly).passed() {
        return (poly.clone(), AffineMap::identity());
    }
    let candidates = non_obtuse_vertices(poly);
    let a = poly.vertex(candidates[0]);
    let b = match candidates.get(1) {
        Some(&j) => poly.vertex(j),
        None => poly.next(candidates[0]),
    };
    let map = AffineMap::align(a, &(b - a));
    let rotated = poly.map_vertices(|p| map.apply(p)).expect("similarity keeps strict convexity");
    (rotated, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::tests::{diamond, poly, square};
    use crate::{ratio, Rational};

    #[test]
    fn identity_cases() {
        let (q, t) = rotate_to_staircase(&square());
        assert!(t.is_identity());
        assert_eq!(q, square());
        let (q, t) = rotate_to_staircase(&diamond());
        assert!(t.is_identity());
        assert_eq!(q, diamond());
    }

    #[test]
    fn thin_triangle_rotates() {
        let thin = poly(&[(0, 0), (10, 1), (9, 3)]);
        let (q, t) = rotate_to_staircase(&thin);
        assert!(t.is_similarity());
        assert!(is_staircase_connected_convex(&q).passed());
        let ends: Vec<_> = non_obtuse_vertices(&thin).iter().take(2).map(|&i| q.vertex(i).clone()).collect();
        assert_eq!(ends[0].y, ends[1].y);
    }

    #[test]
    fn align_maps_anchor_to_origin() {
        let a = Point2::from_i64(3, -2);
        let d = Point2::from_i64(4, 3);
        let map: AffineMap<Rational> = AffineMap::align(&a, &d);
        assert_eq!(map.apply(&a), Point2::zero());
        assert_eq!(map.apply(&(a.clone() + d.clone())), Point2::new(ratio(25, 1), ratio(0, 1)));
        assert_eq!(map.scale_squared(), ratio(25, 1));
        assert_eq!(map.to_tuple()[4], ratio(-6, 1));
    }
}
