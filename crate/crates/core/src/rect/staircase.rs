use std::cmp::Ordering;

use super::{sorted_unique, ConvexityViolation, RectComplex};
use crate::{Axis, Error, Point2, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StaircaseCertificate<T> {
    Pass,
    NotOrthogonallyConvex(ConvexityViolation<T>),
    /// Both widths vanish at `point`.
    ZeroWidth { point: Point2<T> },
    /// Both widths vanish at `point` inside piece `piece` of the cut at `cut`.
    PieceZeroWidth { cut: Point2<T>, piece: usize, point: Point2<T> },
}

impl<T> StaircaseCertificate<T> {
    pub fn passed(&self) -> bool {
        matches!(self, StaircaseCertificate::Pass)
    }
}

fn zero_width_point<T: Scalar>(r: &RectComplex<T>) -> Option<Point2<T>> {
    r.arrangement_vertices().into_iter().find(|p| {
        r.hw_at(p).expect("vertex in set").is_zero() && r.vw_at(p).expect("vertex in set").is_zero()
    })
}

impl<T: Scalar> RectComplex<T> {
    /// Decides staircase connectivity through orthogonal convexity and the
    /// width condition, checked on the complex and on every piece of every
    /// cut point. A complex that is a single point passes.
    pub fn is_staircase_connected_exact(&self) -> Result<StaircaseCertificate<T>, Error> {
        if !self.is_connected() {
            return Err(Error::ComplexDisconnected);
        }
        if self.is_single_point() {
            return Ok(StaircaseCertificate::Pass);
        }
        if let Some(v) = self.orthogonal_convexity_violation() {
            return Ok(StaircaseCertificate::NotOrthogonallyConvex(v));
        }
        if let Some(point) = zero_width_point(self) {
            return Ok(StaircaseCertificate::ZeroWidth { point });
        }
        for cut in self.cut_structures()? {
            for (i, piece) in cut.pieces.iter().enumerate() {
                if piece.is_single_point() {
                    continue;
                }
                if let Some(point) = zero_width_point(piece) {
                    return Ok(StaircaseCertificate::PieceZeroWidth { cut: cut.point.clone(), piece: i, point });
                }
            }
        }
        Ok(StaircaseCertificate::Pass)
    }

    /// Searches the arrangement graph for a staircase from `p` to `q`.
    pub fn staircase_oracle(&self, p: &Point2<T>, q: &Point2<T>) -> Result<bool, Error> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::PointNotInComplex);
        }
        if p == q {
            return Ok(true);
        }
        let g = ArrangementGraph::new(self, &[p.clone(), q.clone()]);
        let src = g.locate(p).expect("extra coordinates included");
        let dst = g.locate(q).expect("extra coordinates included");
        let reach = g.monotone_reach(src, q.x >= p.x, q.y >= p.y);
        Ok(reach[g.index(dst)])
    }

    /// A pair of probe vertices with no staircase between them, if any.
    pub fn oracle_counterexample(&self) -> Option<(Point2<T>, Point2<T>)> {
        let g = ArrangementGraph::new(self, &self.probe_vertices());
        let nodes: Vec<(usize, usize)> =
            (0..g.ys.len()).flat_map(|j| (0..g.xs.len()).map(move |i| (i, j))).filter(|&n| g.node(n)).collect();
        for &s in &nodes {
            for north in [true, false] {
                let reach = g.monotone_reach(s, true, north);
                for &t in &nodes {
                    let in_quadrant = t.0 >= s.0 && if north { t.1 >= s.1 } else { t.1 <= s.1 };
                    if in_quadrant && !reach[g.index(t)] {
                        return Some((g.point(s), g.point(t)));
                    }
                }
            }
        }
        None
    }
}

/// Grid induced by all rectangle coordinates. A node is present when its
/// point lies in the set; a unit edge between neighbouring nodes is present
/// when the segment joining them does.
#[derive(Clone, Debug)]
pub struct ArrangementGraph<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    nodes: Vec<bool>,
    east: Vec<bool>,
    north: Vec<bool>,
}

impl<T: Scalar> ArrangementGraph<T> {
    pub fn new(r: &RectComplex<T>, extra: &[Point2<T>]) -> Self {
        let mut xs = r.coords(Axis::Horizontal);
        let mut ys = r.coords(Axis::Vertical);
        xs.extend(extra.iter().map(|p| p.x.clone()));
        ys.extend(extra.iter().map(|p| p.y.clone()));
        let (xs, ys) = (sorted_unique(xs), sorted_unique(ys));
        let (nx, ny) = (xs.len(), ys.len());
        let mut nodes = vec![false; nx * ny];
        let mut east = vec![false; nx * ny];
        let mut north = vec![false; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let k = j * nx + i;
                nodes[k] = r.contains(&Point2::new(xs[i].clone(), ys[j].clone()));
                if i + 1 < nx {
                    let mid = (xs[i].clone() + xs[i + 1].clone()) * T::half();
                    east[k] = r.contains(&Point2::new(mid, ys[j].clone()));
                }
                if j + 1 < ny {
                    let mid = (ys[j].clone() + ys[j + 1].clone()) * T::half();
                    north[k] = r.contains(&Point2::new(xs[i].clone(), mid));
                }
            }
        }
        ArrangementGraph { xs, ys, nodes, east, north }
    }

    pub fn index(&self, (i, j): (usize, usize)) -> usize {
        j * self.xs.len() + i
    }

    pub fn node(&self, n: (usize, usize)) -> bool {
        self.nodes[self.index(n)]
    }

    pub fn point(&self, (i, j): (usize, usize)) -> Point2<T> {
        Point2::new(self.xs[i].clone(), self.ys[j].clone())
    }

    pub fn locate(&self, p: &Point2<T>) -> Option<(usize, usize)> {
        let cmp = |v: &T, t: &T| v.partial_cmp(t).unwrap_or(Ordering::Equal);
        let i = self.xs.binary_search_by(|v| cmp(v, &p.x)).ok()?;
        let j = self.ys.binary_search_by(|v| cmp(v, &p.y)).ok()?;
        Some((i, j))
    }

    /// Nodes reachable from `src` by paths moving only east (or west when
    /// `east` is false) and only north (or south).
    pub fn monotone_reach(&self, src: (usize, usize), east: bool, north: bool) -> Vec<bool> {
        let (nx, ny) = (self.xs.len(), self.ys.len());
        let mut reach = vec![false; nx * ny];
        if !self.node(src) {
            return reach;
        }
        let cols: Vec<usize> = if east { (src.0..nx).collect() } else { (0..=src.0).rev().collect() };
        let rows: Vec<usize> = if north { (src.1..ny).collect() } else { (0..=src.1).rev().collect() };
        for (rj, &j) in rows.iter().enumerate() {
            for (ci, &i) in cols.iter().enumerate() {
                let k = j * nx + i;
                if !self.nodes[k] {
                    continue;
                }
                if ci == 0 && rj == 0 {
                    reach[k] = true;
                    continue;
                }
                let from_side = ci > 0 && {
                    let pi = cols[ci - 1];
                    let edge = self.east[j * nx + pi.min(i)];
                    edge && reach[j * nx + pi]
                };
                let from_row = rj > 0 && {
                    let pj = rows[rj - 1];
                    let edge = self.north[pj.min(j) * nx + i];
                    edge && reach[pj * nx + i]
                };
                reach[k] = from_side || from_row;
            }
        }
        reach
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

    fn half_point(x2: i64, y2: i64) -> Point2<Rational> {
        Point2::new(ratio(x2, 2), ratio(y2, 2))
    }

    #[test]
    fn exact_examples() {
        assert!(complex(&[(0, 0, 2, 1)]).is_staircase_connected_exact().unwrap().passed());

        let u = complex(&[(0, 0, 3, 1), (0, 1, 1, 3), (2, 1, 3, 3)]);
        assert!(matches!(
            u.is_staircase_connected_exact().unwrap(),
            StaircaseCertificate::NotOrthogonallyConvex(_)
        ));

        let corridor = complex(&[(0, 0, 1, 1), (1, 1, 3, 1), (3, 1, 4, 2)]);
        assert!(corridor.is_staircase_connected_exact().unwrap().passed());

        let side_corridor = complex(&[(0, 0, 1, 1), (1, 0, 3, 0), (3, 0, 4, 1)]);
        assert!(!side_corridor.is_staircase_connected_exact().unwrap().passed());

        let apart = complex(&[(0, 0, 1, 1), (2, 2, 3, 3)]);
        assert_eq!(apart.is_staircase_connected_exact(), Err(Error::ComplexDisconnected));
    }

    #[test]
    fn corner_touching_squares_are_staircase_connected() {
        let corner = complex(&[(0, 0, 1, 1), (1, 1, 2, 2)]);
        assert!(corner.is_staircase_connected_exact().unwrap().passed());
        assert!(corner.staircase_oracle(&half_point(1, 1), &half_point(3, 3)).unwrap());
        assert_eq!(corner.oracle_counterexample(), None);
    }

    #[test]
    fn single_point_complex() {
        let dot = complex(&[(1, 1, 1, 1)]);
        assert!(dot.is_staircase_connected_exact().unwrap().passed());
        assert_eq!(dot.oracle_counterexample(), None);
    }

    #[test]
    fn oracle_examples() {
        let rect = complex(&[(0, 0, 2, 1)]);
        let p = Point2::from_i64(0, 0);
        assert!(rect.staircase_oracle(&p, &p).unwrap());
        assert!(rect.staircase_oracle(&p, &Point2::from_i64(2, 1)).unwrap());
        assert!(rect.staircase_oracle(&Point2::from_i64(0, 1), &Point2::from_i64(2, 0)).unwrap());
        assert_eq!(rect.staircase_oracle(&p, &Point2::from_i64(3, 0)), Err(Error::PointNotInComplex));

        let u = complex(&[(0, 0, 3, 1), (0, 1, 1, 3), (2, 1, 3, 3)]);
        assert!(!u.staircase_oracle(&Point2::from_i64(0, 3), &Point2::from_i64(3, 3)).unwrap());
        assert!(u.staircase_oracle(&Point2::from_i64(0, 3), &Point2::from_i64(3, 0)).unwrap());
        assert!(u.oracle_counterexample().is_some());
    }

    #[test]
    fn oracle_off_arrangement_points() {
        let l = complex(&[(0, 0, 2, 1), (0, 0, 1, 2)]);
        assert!(l.staircase_oracle(&half_point(1, 3), &half_point(3, 1)).unwrap());
        assert!(l.staircase_oracle(&half_point(3, 1), &half_point(1, 3)).unwrap());
    }

    #[test]
    fn hole_between_vertices_is_found() {
        let ring = complex(&[(0, 0, 3, 1), (0, 2, 3, 3), (0, 0, 1, 3), (2, 0, 3, 3)]);
        let (p, q) = ring.oracle_counterexample().unwrap();
        assert!(!ring.staircase_oracle(&p, &q).unwrap());
        assert!(!ring.is_staircase_connected_exact().unwrap().passed());
    }
}
