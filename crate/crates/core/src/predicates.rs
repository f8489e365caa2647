//! Primitive predicates: orientation, dot-product sign, and exact clipping of
//! segments and axis rays against convex polygons.

use std::cmp::Ordering;

use crate::{ConvexPolygon, Direction, Error, Point2, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn of<T: Scalar>(v: &T) -> Self {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orient<T: Scalar>(p: &Point2<T>, q: &Point2<T>, r: &Point2<T>) -> Orientation {
    Orientation::of(&(q - p).cross(&(r - p)))
}

/// Sign of `u . v`, compared against zero.
pub fn dot_sign<T: Scalar>(u: &Point2<T>, v: &Point2<T>) -> Result<Ordering, Error> {
    if u.is_zero() || v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(u.dot(v).partial_cmp(&T::zero()).expect("comparable"))
}

/// Whether a query targets the open interior or the closed polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HitMode {
    Interior,
    Closed,
}

#[derive(Clone, Debug)]
struct Bound<T> {
    value: T,
    strict: bool,
}

/// Parameter interval `{t : origin + t * delta in P}`, intersected with
/// `t >= 0` and, when given, `t <= t_max`. Strictness flags track open ends.
#[derive(Clone, Debug)]
pub struct ParamRange<T> {
    lo: Bound<T>,
    hi: Option<Bound<T>>,
}

impl<T: Scalar> ParamRange<T> {
    pub fn start(&self) -> &T {
        &self.lo.value
    }

    pub fn end(&self) -> Option<&T> {
        self.hi.as_ref().map(|b| &b.value)
    }
}

pub(crate) fn clip_line<T: Scalar>(
    origin: &Point2<T>,
    delta: &Point2<T>,
    poly: &ConvexPolygon<T>,
    mode: HitMode,
    t_max: Option<T>,
) -> Option<ParamRange<T>> {
    let strict = mode == HitMode::Interior;
    let mut lo = Bound { value: T::zero(), strict: false };
    let mut hi = t_max.map(|value| Bound { value, strict: false });
    for (a, b) in poly.edges() {
        let edge = b - a;
        let c0 = edge.cross(&(origin - a));
        let c1 = edge.cross(delta);
        if c1.is_zero() {
            if c0.is_negative() || (strict && c0.is_zero()) {
                return None;
            }
            continue;
        }
        let root = -c0 / c1.clone();
        if c1.is_positive() {
            if root > lo.value {
                lo = Bound { value: root, strict };
            } else if root == lo.value {
                lo.strict |= strict;
            }
        } else {
            match &mut hi {
                Some(h) if root > h.value => {}
                Some(h) if root == h.value => h.strict |= strict,
                _ => hi = Some(Bound { value: root, strict }),
            }
        }
    }
    let feasible = match &hi {
        None => true,
        Some(h) => lo.value < h.value || (lo.value == h.value && !lo.strict && !h.strict),
    };
    feasible.then_some(ParamRange { lo, hi })
}

/// Whether the closed segment `a b` meets the interior of `poly`
/// (`HitMode::Interior`) or the closed polygon (`HitMode::Closed`).
pub fn segment_hits_convex<T: Scalar>(
    a: &Point2<T>,
    b: &Point2<T>,
    poly: &ConvexPolygon<T>,
    mode: HitMode,
) -> bool {
    clip_line(a, &(b - a), poly, mode, Some(T::one())).is_some()
}

/// Whether the closed axis ray from `origin` in direction `dir` meets the
/// interior of `poly` or the closed polygon.
pub fn ray_hits_convex<T: Scalar>(
    origin: &Point2<T>,
    dir: Direction,
    poly: &ConvexPolygon<T>,
    mode: HitMode,
) -> bool {
    clip_line(origin, &dir.unit(), poly, mode, None).is_some()
}

/// Closed parameter range `[s, e]` with `origin + t * unit(dir)` in the closed
/// polygon, `t >= 0`; `None` when the ray misses.
pub fn ray_extent<T: Scalar>(origin: &Point2<T>, dir: Direction, poly: &ConvexPolygon<T>) -> Option<(T, T)> {
    let range = clip_line(origin, &dir.unit(), poly, HitMode::Closed, None)?;
    let end = range.end().expect("bounded polygon").clone();
    Some((range.start().clone(), end))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, Rational};
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point2<Rational> {
        Point2::from_i64(x, y)
    }

    fn q(xn: i64, xd: i64, yn: i64, yd: i64) -> Point2<Rational> {
        Point2::new(ratio(xn, xd), ratio(yn, yd))
    }

    fn unit_square() -> ConvexPolygon<Rational> {
        ConvexPolygon::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap()
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)).sign(), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)).sign(), 0);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)).sign(), -1);
    }

    #[test]
    fn dot_sign_examples() {
        assert_eq!(dot_sign(&p(1, 0), &p(0, 1)), Ok(Ordering::Equal));
        assert_eq!(dot_sign(&p(1, 0), &p(1, 1)), Ok(Ordering::Greater));
        assert_eq!(dot_sign(&p(1, 0), &p(-1, 1)), Ok(Ordering::Less));
        assert_eq!(dot_sign(&p(0, 0), &p(-1, 1)), Err(Error::ZeroVector));
    }

    #[test]
    fn segment_examples() {
        let sq = unit_square();
        assert!(segment_hits_convex(&q(-1, 1, 1, 2), &q(2, 1, 1, 2), &sq, HitMode::Interior));
        assert!(!segment_hits_convex(&p(-1, -1), &p(2, -1), &sq, HitMode::Closed));
        // grazing the bottom edge touches the boundary only
        assert!(!segment_hits_convex(&p(-1, 0), &p(2, 0), &sq, HitMode::Interior));
        assert!(segment_hits_convex(&p(-1, 0), &p(2, 0), &sq, HitMode::Closed));
        // touching a single corner
        assert!(segment_hits_convex(&p(1, 1), &p(2, 2), &sq, HitMode::Closed));
        assert!(!segment_hits_convex(&p(1, 1), &p(2, 2), &sq, HitMode::Interior));
        // degenerate segment inside
        let mid = q(1, 2, 1, 2);
        assert!(segment_hits_convex(&mid, &mid, &sq, HitMode::Interior));
        // diagonal through the corner region cuts the interior
        assert!(segment_hits_convex(&q(-1, 2, 1, 1), &q(1, 1, -1, 2), &sq, HitMode::Interior));
        // stops short of the square
        assert!(!segment_hits_convex(&q(-2, 1, 1, 2), &q(-1, 1, 1, 2), &sq, HitMode::Closed));
    }

    #[test]
    fn ray_examples() {
        let sq = unit_square();
        assert!(ray_hits_convex(&q(-1, 1, 1, 2), Direction::East, &sq, HitMode::Interior));
        assert!(!ray_hits_convex(&q(-1, 1, 1, 2), Direction::West, &sq, HitMode::Closed));
        for d in Direction::ALL {
            assert!(ray_hits_convex(&q(1, 2, 1, 2), d, &sq, HitMode::Interior));
        }
        assert_eq!(
            ray_extent(&q(-1, 1, 1, 2), Direction::East, &sq),
            Some((ratio(1, 1), ratio(2, 1)))
        );
        assert_eq!(ray_extent(&p(0, 0), Direction::North, &sq), Some((ratio(0, 1), ratio(1, 1))));
        assert_eq!(ray_extent(&p(1, 1), Direction::North, &sq), Some((ratio(0, 1), ratio(0, 1))));
    }

    #[test]
    fn float_instantiation_agrees_on_simple_cases() {
        let sq: ConvexPolygon<f64> = ConvexPolygon::rectangle(0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(segment_hits_convex(&Point2::new(-1.0, 0.5), &Point2::new(2.0, 0.5), &sq, HitMode::Interior));
        assert!(!ray_hits_convex(&Point2::new(-1.0, 0.5), Direction::West, &sq, HitMode::Closed));
        assert_eq!(orient(&Point2::new(0.0, 0.0), &Point2::new(1.0, 0.0), &Point2::new(0.0, 1.0)).sign(), 1);
    }

    fn small_point() -> impl Strategy<Value = Point2<Rational>> {
        (-50i64..50, 1i64..5, -50i64..50, 1i64..5).prop_map(|(a, b, c, d)| q(a, b, c, d))
    }

    proptest! {
        #[test]
        fn orient_antisymmetric_and_translation_invariant(
            a in small_point(), b in small_point(), c in small_point(), t in small_point()
        ) {
            prop_assert_eq!(orient(&a, &b, &c).sign(), -orient(&a, &c, &b).sign());
            prop_assert_eq!(orient(&a, &b, &c), orient(&(&a + &t), &(&b + &t), &(&c + &t)));
        }

        #[test]
        fn closed_miss_implies_interior_miss(o in small_point(), k in 0usize..4) {
            let sq = ConvexPolygon::rectangle(ratio(-5, 1), ratio(-3, 1), ratio(7, 2), ratio(4, 1)).unwrap();
            let d = Direction::ALL[k];
            if !ray_hits_convex(&o, d, &sq, HitMode::Closed) {
                prop_assert!(!ray_hits_convex(&o, d, &sq, HitMode::Interior));
            }
        }
    }
}
