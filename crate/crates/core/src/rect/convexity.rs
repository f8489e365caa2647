use super::RectComplex;
use crate::{Axis, Point2, Scalar};

/// Two points of the set on a common axis-parallel line whose joining
/// segment leaves the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexityViolation<T> {
    pub axis: Axis,
    pub from: Point2<T>,
    pub to: Point2<T>,
}

/// Every critical coordinate and one probe strictly inside each slab between
/// consecutive ones. Cross-sections are constant on open slabs.
pub(crate) fn probe_lines<T: Scalar>(coords: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(coords.len() * 2);
    for (i, c) in coords.iter().enumerate() {
        if i > 0 {
            out.push((coords[i - 1].clone() + c.clone()) * T::half());
        }
        out.push(c.clone());
    }
    out
}

impl<T: Scalar> RectComplex<T> {
    /// First line parallel to `axis` whose cross-section is not one interval.
    pub fn convexity_violation_along(&self, axis: Axis) -> Option<ConvexityViolation<T>> {
        for at in probe_lines(&self.coords(axis.other())) {
            let section = self.cross_section(axis, &at);
            if section.len() > 1 {
                let lift = |v: &T| match axis {
                    Axis::Horizontal => Point2::new(v.clone(), at.clone()),
                    Axis::Vertical => Point2::new(at.clone(), v.clone()),
                };
                return Some(ConvexityViolation { axis, from: lift(&section[0].1), to: lift(&section[1].0) });
            }
        }
        None
    }

    pub fn orthogonal_convexity_violation(&self) -> Option<ConvexityViolation<T>> {
        self.convexity_violation_along(Axis::Horizontal)
            .or_else(|| self.convexity_violation_along(Axis::Vertical))
    }

    pub fn is_orthogonally_convex_exact(&self) -> bool {
        self.orthogonal_convexity_violation().is_none()
    }

    /// Every vertical cross-section is empty or one interval.
    pub fn is_vertically_convex(&self) -> bool {
        self.convexity_violation_along(Axis::Vertical).is_none()
    }

    pub fn is_horizontally_convex(&self) -> bool {
        self.convexity_violation_along(Axis::Horizontal).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rect::Rect;
    use crate::{ratio, Rational};

    fn complex(rects: &[(i64, i64, i64, i64)]) -> RectComplex<Rational> {
        RectComplex::new(rects.iter().map(|&(a, b, c, d)| Rect::from_i64(a, b, c, d).unwrap()).collect()).unwrap()
    }

    #[test]
    fn convexity_examples() {
        assert!(complex(&[(0, 0, 3, 2)]).is_orthogonally_convex_exact());

        let u = complex(&[(0, 0, 3, 1), (0, 1, 1, 3), (2, 1, 3, 3)]);
        let v = u.orthogonal_convexity_violation().unwrap();
        assert_eq!(v.axis, Axis::Horizontal);
        assert!(u.contains(&v.from) && u.contains(&v.to));
        assert!(!u.contains(&((v.from.clone() + v.to.clone()).scale(&ratio(1, 2)))));

        let stairs = complex(&[(0, 0, 2, 2), (1, 1, 3, 3), (2, 2, 4, 4)]);
        assert!(stairs.is_orthogonally_convex_exact());
    }

    #[test]
    fn degenerate_pieces_break_convexity() {
        let gap = RectComplex::new(vec![
            Rect::<Rational>::from_i64(0, 0, 2, 2).unwrap(),
            Rect::from_i64(2, 0, 4, 0).unwrap(),
            Rect::from_i64(4, 0, 4, 2).unwrap(),
        ])
        .unwrap();
        assert!(!gap.is_orthogonally_convex_exact());
        assert!(gap.is_vertically_convex());
    }

    #[test]
    fn probes_interleave() {
        let lines = probe_lines(&[ratio(0, 1), ratio(2, 1), ratio(3, 1)]);
        assert_eq!(lines, vec![ratio(0, 1), ratio(1, 1), ratio(2, 1), ratio(5, 2), ratio(3, 1)]);
    }
}
