//! Finite unions of closed axis-aligned rectangles.
//!
//! Rectangles may be degenerate (segments or points); those are what create
//! zero widths, cut points and one-dimensional corridors.

mod convexity;
mod cut;
mod profile;
mod staircase;

pub use convexity::ConvexityViolation;
pub use cut::CutStructure;
pub use profile::{is_unimodal, Profiles, StepFunction, UnimodalCheck};
pub use staircase::{ArrangementGraph, StaircaseCertificate};

use crate::scalar::{max_of, min_of};
use crate::{Axis, Error, Point2, Scalar};

/// Closed rectangle `[xmin, xmax] x [ymin, ymax]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rect<T> {
    pub xmin: T,
    pub ymin: T,
    pub xmax: T,
    pub ymax: T,
}

impl<T: Scalar> Rect<T> {
    pub fn new(xmin: T, ymin: T, xmax: T, ymax: T) -> Option<Self> {
        (xmin <= xmax && ymin <= ymax).then_some(Rect { xmin, ymin, xmax, ymax })
    }

    pub fn point(p: &Point2<T>) -> Self {
        Rect { xmin: p.x.clone(), ymin: p.y.clone(), xmax: p.x.clone(), ymax: p.y.clone() }
    }

    pub fn from_i64(xmin: i64, ymin: i64, xmax: i64, ymax: i64) -> Option<Self> {
        Rect::new(T::from_i64(xmin), T::from_i64(ymin), T::from_i64(xmax), T::from_i64(ymax))
    }

    pub fn contains(&self, p: &Point2<T>) -> bool {
        self.xmin <= p.x && p.x <= self.xmax && self.ymin <= p.y && p.y <= self.ymax
    }

    pub fn is_degenerate(&self) -> bool {
        self.xmin == self.xmax || self.ymin == self.ymax
    }

    pub fn is_point(&self) -> bool {
        self.xmin == self.xmax && self.ymin == self.ymax
    }

    /// Closed extent along `axis`: x-range for `Horizontal`, y-range for `Vertical`.
    pub fn span(&self, axis: Axis) -> (&T, &T) {
        match axis {
            Axis::Horizontal => (&self.xmin, &self.xmax),
            Axis::Vertical => (&self.ymin, &self.ymax),
        }
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        Rect::new(
            max_of(&self.xmin, &other.xmin),
            max_of(&self.ymin, &other.ymin),
            min_of(&self.xmax, &other.xmax),
            min_of(&self.ymax, &other.ymax),
        )
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.intersection(other).is_some()
    }

    pub fn corners(&self) -> [Point2<T>; 4] {
        [
            Point2::new(self.xmin.clone(), self.ymin.clone()),
            Point2::new(self.xmax.clone(), self.ymin.clone()),
            Point2::new(self.xmax.clone(), self.ymax.clone()),
            Point2::new(self.xmin.clone(), self.ymax.clone()),
        ]
    }
}

/// Sorted, merged closed intervals; touching intervals merge.
pub(crate) fn merge_intervals<T: Scalar>(mut spans: Vec<(T, T)>) -> Vec<(T, T)> {
    spans.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("comparable"));
    let mut merged: Vec<(T, T)> = Vec::with_capacity(spans.len());
    for (lo, hi) in spans {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
}

pub(crate) fn sorted_unique<T: Scalar>(mut values: Vec<T>) -> Vec<T> {
    values.sort_by(|a, b| a.partial_cmp(b).expect("comparable"));
    values.dedup();
    values
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RectComplex<T> {
    rects: Vec<Rect<T>>,
}

impl<T: Scalar> RectComplex<T> {
    pub fn new(rects: Vec<Rect<T>>) -> Result<Self, Error> {
        if rects.is_empty() {
            return Err(Error::EmptyComplex);
        }
        if let Some(i) = rects.iter().position(|r| r.xmin > r.xmax || r.ymin > r.ymax) {
            return Err(Error::InvalidRect(i));
        }
        Ok(RectComplex { rects })
    }

    pub fn rects(&self) -> &[Rect<T>] {
        &self.rects
    }

    pub fn contains(&self, p: &Point2<T>) -> bool {
        self.rects.iter().any(|r| r.contains(p))
    }

    pub fn has_degenerate(&self) -> bool {
        self.rects.iter().any(Rect::is_degenerate)
    }

    /// The union is a single point.
    pub fn is_single_point(&self) -> bool {
        self.rects.iter().all(|r| r.is_point() && *r == self.rects[0])
    }

    /// All distinct rectangle coordinates along `axis`, ascending.
    pub fn coords(&self, axis: Axis) -> Vec<T> {
        sorted_unique(
            self.rects
                .iter()
                .flat_map(|r| {
                    let (lo, hi) = r.span(axis);
                    [lo.clone(), hi.clone()]
                })
                .collect(),
        )
    }

    /// The closed rectangles' intersection graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.rects.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && self.rects[i].intersects(&self.rects[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Merged closed intervals of the cross-section along the line through
    /// `at` parallel to `axis` (a horizontal line for `Horizontal`).
    pub fn cross_section(&self, axis: Axis, at: &T) -> Vec<(T, T)> {
        let across = axis.other();
        let spans = self
            .rects
            .iter()
            .filter(|r| {
                let (lo, hi) = r.span(across);
                lo <= at && at <= hi
            })
            .map(|r| {
                let (lo, hi) = r.span(axis);
                (lo.clone(), hi.clone())
            })
            .collect();
        merge_intervals(spans)
    }

    fn width_at(&self, p: &Point2<T>, axis: Axis) -> Result<T, Error> {
        if !self.contains(p) {
            return Err(Error::PointNotInComplex);
        }
        let (along, across) = match axis {
            Axis::Horizontal => (&p.x, &p.y),
            Axis::Vertical => (&p.y, &p.x),
        };
        let section = self.cross_section(axis, across);
        let (lo, hi) = section
            .into_iter()
            .find(|(lo, hi)| lo <= along && along <= hi)
            .expect("point lies in the cross-section");
        Ok(hi - lo)
    }

    /// Length of the component of the horizontal cross-section through `p`
    /// that contains `p`.
    pub fn hw_at(&self, p: &Point2<T>) -> Result<T, Error> {
        self.width_at(p, Axis::Horizontal)
    }

    /// Vertical analogue of [`RectComplex::hw_at`].
    pub fn vw_at(&self, p: &Point2<T>) -> Result<T, Error> {
        self.width_at(p, Axis::Vertical)
    }

    /// Points `(x, y)` with `x` and `y` drawn from the rectangle coordinates
    /// that lie in the union.
    pub fn arrangement_vertices(&self) -> Vec<Point2<T>> {
        let xs = self.coords(Axis::Horizontal);
        let ys = self.coords(Axis::Vertical);
        let mut out = vec![];
        for y in &ys {
            for x in &xs {
                let p = Point2::new(x.clone(), y.clone());
                if self.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }

    /// Points of the union on the arrangement refined by the midlines of
    /// every slab. Each face of the arrangement contributes one point.
    pub fn probe_vertices(&self) -> Vec<Point2<T>> {
        let xs = with_midpoints(self.coords(Axis::Horizontal));
        let ys = with_midpoints(self.coords(Axis::Vertical));
        let mut out = vec![];
        for y in &ys {
            for x in &xs {
                let p = Point2::new(x.clone(), y.clone());
                if self.contains(&p) {
                    out.push(p);
                }
            }
        }
        out
    }
}

pub(crate) fn with_midpoints<T: Scalar>(coords: Vec<T>) -> Vec<T> {
    let mids: Vec<T> = coords.windows(2).map(|w| (w[0].clone() + w[1].clone()) * T::half()).collect();
    sorted_unique(coords.into_iter().chain(mids).collect())
}
