use crate::{ray_extent, Axis, ConvexPolygon, Direction, OrthoPath, Point2, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremeReason {
    Hw0,
    Vw0,
    Both,
}

impl ExtremeReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ExtremeReason::Hw0 => "hw0",
            ExtremeReason::Vw0 => "vw0",
            ExtremeReason::Both => "both",
        }
    }
}

/// Lengths of the horizontal and vertical chords of `poly` through `p`,
/// measured by clipping both opposite axis rays.
pub fn axis_chords<T: Scalar>(poly: &ConvexPolygon<T>, p: &Point2<T>) -> Option<(T, T)> {
    if !poly.contains_closed(p) {
        return None;
    }
    let reach = |d: Direction| ray_extent(p, d, poly).map(|(_, end)| end).unwrap_or_else(T::zero);
    Some((
        reach(Direction::East) + reach(Direction::West),
        reach(Direction::North) + reach(Direction::South),
    ))
}

/// Index of the unique vertex attaining the extreme value of `coord`, or
/// `None` when an edge attains it.
fn unique_extreme<T: Scalar>(poly: &ConvexPolygon<T>, axis: Axis, max: bool) -> Option<usize> {
    let better = |a: &T, b: &T| if max { a > b } else { a < b };
    let mut best = 0;
    for i in 1..poly.len() {
        if better(poly.vertex(i).coord(axis), poly.vertex(best).coord(axis)) {
            best = i;
        }
    }
    let ties = (0..poly.len()).filter(|&i| poly.vertex(i).coord(axis) == poly.vertex(best).coord(axis)).count();
    (ties == 1).then_some(best)
}

/// Vertices where the horizontal chord (topmost or bottommost contact) or the
/// vertical chord (leftmost or rightmost contact) is a single point.
pub fn s_extreme_points<T: Scalar>(poly: &ConvexPolygon<T>) -> Vec<(Point2<T>, ExtremeReason)> {
    let mut found: Vec<(usize, ExtremeReason)> = vec![];
    let mut record = |i: usize, reason: ExtremeReason| match found.iter_mut().find(|(j, _)| *j == i) {
        Some((_, r)) if *r != reason => *r = ExtremeReason::Both,
        Some(_) => {}
        None => found.push((i, reason)),
    };
    for max in [true, false] {
        if let Some(i) = unique_extreme(poly, Axis::Vertical, max) {
            record(i, ExtremeReason::Hw0);
        }
    }
    for max in [true, false] {
        if let Some(i) = unique_extreme(poly, Axis::Horizontal, max) {
            record(i, ExtremeReason::Vw0);
        }
    }
    found.sort_by_key(|(i, _)| *i);
    found.into_iter().map(|(i, r)| (poly.vertex(i).clone(), r)).collect()
}

/// A two-link staircase inside `poly` having vertex `i` as its corner: one
/// leg along the horizontal chord, one along the vertical chord. `None` when
/// either chord is degenerate.
pub fn staircase_through<T: Scalar>(poly: &ConvexPolygon<T>, i: usize) -> Option<OrthoPath<T>> {
    let e = poly.vertex(i);
    let leg = |dirs: [Direction; 2]| {
        dirs.into_iter().find_map(|d| {
            let (_, end) = ray_extent(e, d, poly)?;
            end.is_positive().then(|| e.step(d, &end))
        })
    };
    let b = leg([Direction::East, Direction::West])?;
    let c = leg([Direction::North, Direction::South])?;
    let path = OrthoPath::new(vec![b, e.clone(), c]).ok()?;
    (path.link_count() == 2 && path.is_staircase() && path.vertices().iter().all(|v| poly.contains_closed(v)))
        .then_some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::tests::{diamond, poly, square};
    use crate::{ratio, Rational};
    use num_traits::{Signed, Zero};

    #[test]
    fn extreme_examples() {
        assert!(s_extreme_points(&square()).is_empty());
        let d = s_extreme_points(&diamond());
        assert_eq!(
            d,
            vec![
                (Point2::from_i64(0, -1), ExtremeReason::Hw0),
                (Point2::from_i64(1, 0), ExtremeReason::Vw0),
                (Point2::from_i64(0, 1), ExtremeReason::Hw0),
                (Point2::from_i64(-1, 0), ExtremeReason::Vw0),
            ]
        );
        let tilted = poly(&[(0, 0), (10, 1), (9, 11), (-1, 10)]);
        let t = s_extreme_points(&tilted);
        assert_eq!(t.len(), 4);
    }

    #[test]
    fn both_reason_merges() {
        let tri = poly(&[(0, 0), (4, 1), (1, 4)]);
        let e = s_extreme_points(&tri);
        assert!(e.contains(&(Point2::from_i64(0, 0), ExtremeReason::Both)));
    }

    #[test]
    fn chords_match_reasons() {
        for (p, reason) in s_extreme_points(&diamond()) {
            let (hw, vw) = axis_chords(&diamond(), &p).unwrap();
            match reason {
                ExtremeReason::Hw0 => assert!(hw.is_zero() && vw.is_positive()),
                ExtremeReason::Vw0 => assert!(vw.is_zero() && hw.is_positive()),
                ExtremeReason::Both => assert!(hw.is_zero() && vw.is_zero()),
            }
        }
        let mid = Point2::new(ratio(1, 2), ratio(1, 2));
        assert_eq!(axis_chords(&square(), &mid), Some((ratio(1, 1), ratio(1, 1))));
        assert_eq!(axis_chords::<Rational>(&square(), &Point2::from_i64(5, 5)), None);
    }

    #[test]
    fn two_link_staircase_at_square_corner() {
        let path = staircase_through(&square(), 0).unwrap();
        assert_eq!(path.vertices(), &[Point2::from_i64(1, 0), Point2::from_i64(0, 0), Point2::from_i64(0, 1)]);
        assert_eq!(staircase_through(&diamond(), 0), None);
    }
}
