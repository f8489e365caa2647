use super::{CaseTag, RouteResult, RoutingScene};
use crate::grid::{min_link_path, Cell, GridSet, LinkGraph};
use crate::rect::sorted_unique;
use crate::scalar::{max_of, min_of};
use crate::{segment_hits_convex, ConvexPolygon, Direction, Error, HitMode, OrthoPath, Point2, Scalar};

pub const MAX_REFINEMENTS: usize = 4;

/// Lines `start + k * step` inside `[start, end]`, the end itself and `extra`.
fn lattice<T: Scalar>(start: &T, end: &T, step: &T, extra: &[T]) -> Vec<T> {
    let mut out = vec![];
    let mut v = start.clone();
    while v < *end {
        out.push(v.clone());
        v = v + step.clone();
    }
    out.push(end.clone());
    out.extend(extra.iter().cloned());
    sorted_unique(out)
}

fn blocked<T: Scalar>(a: &Point2<T>, b: &Point2<T>, obstacles: &[(ConvexPolygon<T>, (Point2<T>, Point2<T>))]) -> bool {
    obstacles.iter().any(|(poly, (lo, hi))| {
        let outside = max_of(&a.x, &b.x) <= lo.x
            || min_of(&a.x, &b.x) >= hi.x
            || max_of(&a.y, &b.y) <= lo.y
            || min_of(&a.y, &b.y) >= hi.y;
        !outside && segment_hits_convex(a, b, poly, HitMode::Interior)
    })
}

/// Axis-parallel lines through the window; a unit edge between adjacent
/// crossings exists when its segment avoids every obstacle interior.
struct LineGraph<T> {
    xs: Vec<T>,
    ys: Vec<T>,
    east: Vec<bool>,
    north: Vec<bool>,
}

impl<T: Scalar> LineGraph<T> {
    fn new(scene: &RoutingScene<T>, step: &T, extra: &[Point2<T>]) -> Self {
        let w = scene.window();
        let xs_extra: Vec<T> = extra.iter().map(|p| p.x.clone()).collect();
        let ys_extra: Vec<T> = extra.iter().map(|p| p.y.clone()).collect();
        let xs = lattice(&w.xmin, &w.xmax, step, &xs_extra);
        let ys = lattice(&w.ymin, &w.ymax, step, &ys_extra);
        let obstacles: Vec<_> = scene.obstacles().iter().map(|o| (o.clone(), o.bbox())).collect();
        let (nx, ny) = (xs.len(), ys.len());
        let mut east = vec![false; nx * ny];
        let mut north = vec![false; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let here = Point2::new(xs[i].clone(), ys[j].clone());
                if i + 1 < nx {
                    east[j * nx + i] = !blocked(&here, &Point2::new(xs[i + 1].clone(), ys[j].clone()), &obstacles);
                }
                if j + 1 < ny {
                    north[j * nx + i] = !blocked(&here, &Point2::new(xs[i].clone(), ys[j + 1].clone()), &obstacles);
                }
            }
        }
        LineGraph { xs, ys, east, north }
    }

    fn node_of(&self, p: &Point2<T>) -> usize {
        let i = self.xs.iter().position(|x| *x == p.x).expect("query coordinates are lines");
        let j = self.ys.iter().position(|y| *y == p.y).expect("query coordinates are lines");
        j * self.xs.len() + i
    }

    fn point_of(&self, node: usize) -> Point2<T> {
        let nx = self.xs.len();
        Point2::new(self.xs[node % nx].clone(), self.ys[node / nx].clone())
    }
}

impl<T: Scalar> LinkGraph for LineGraph<T> {
    fn node_count(&self) -> usize {
        self.xs.len() * self.ys.len()
    }

    fn neighbor(&self, node: usize, dir: Direction) -> Option<usize> {
        let nx = self.xs.len();
        let (i, j) = (node % nx, node / nx);
        match dir {
            Direction::East => (i + 1 < nx && self.east[node]).then(|| node + 1),
            Direction::West => (i > 0 && self.east[node - 1]).then(|| node - 1),
            Direction::North => (j + 1 < self.ys.len() && self.north[node]).then(|| node + nx),
            Direction::South => (j > 0 && self.north[node - nx]).then(|| node - nx),
        }
    }
}

/// Fewest-link route on the line grid of spacing `cell_size` anchored at the
/// window corner, halving the spacing until a verified route appears.
pub fn route_multi<T: Scalar>(
    scene: &RoutingScene<T>,
    p: &Point2<T>,
    q: &Point2<T>,
    cell_size: &T,
) -> Result<RouteResult<T>, Error> {
    if !cell_size.is_positive() {
        return Err(Error::NonPositiveCellSize);
    }
    scene.check_query_point(p)?;
    scene.check_query_point(q)?;
    if p == q {
        let path = OrthoPath::single(p.clone());
        return Ok(RouteResult { path, links: 0, verified: true, case_tag: CaseTag::Grid, refinements: 0 });
    }
    let mut step = cell_size.clone();
    for refinements in 0..=MAX_REFINEMENTS {
        let graph = LineGraph::new(scene, &step, &[p.clone(), q.clone()]);
        if let Some(walk) = min_link_path(&graph, graph.node_of(p), graph.node_of(q)) {
            let points: Vec<_> = walk.nodes.iter().map(|&n| graph.point_of(n)).collect();
            let path = OrthoPath::new(points).expect("grid walks are axis-parallel");
            if scene.verify_path(&path) {
                return Ok(RouteResult { links: path.link_count(), path, verified: true, case_tag: CaseTag::Grid, refinements });
            }
        }
        step = step * T::half();
    }
    Err(Error::ResolutionExhausted { refinements: MAX_REFINEMENTS, finest: format!("{}", step.to_f64() * 2.0) })
}

/// Window cells of side `cell_size` (cell `(0, 0)` at the window's lower-left
/// corner) whose closed square avoids every obstacle interior.
pub fn rasterize_free_space<T: Scalar>(scene: &RoutingScene<T>, cell_size: &T) -> Result<GridSet, Error> {
    if !cell_size.is_positive() {
        return Err(Error::NonPositiveCellSize);
    }
    let w = scene.window();
    let cols = ((w.xmax.clone() - w.xmin.clone()) / cell_size.clone()).floor_i64();
    let rows = ((w.ymax.clone() - w.ymin.clone()) / cell_size.clone()).floor_i64();
    let boxes: Vec<_> = scene.obstacles().iter().map(|o| (o, o.bbox())).collect();
    let mut cells = vec![];
    for row in 0..rows {
        for col in 0..cols {
            let x0 = w.xmin.clone() + T::from_i64(col) * cell_size.clone();
            let y0 = w.ymin.clone() + T::from_i64(row) * cell_size.clone();
            let (x1, y1) = (x0.clone() + cell_size.clone(), y0.clone() + cell_size.clone());
            let near: Vec<_> =
                boxes.iter().filter(|(_, (lo, hi))| x1 > lo.x && x0 < hi.x && y1 > lo.y && y0 < hi.y).collect();
            if near.is_empty() {
                cells.push(Cell::new(col, row));
                continue;
            }
            let square = ConvexPolygon::rectangle(x0, y0, x1, y1)?;
            if !near.iter().any(|(o, _)| o.interiors_intersect(&square)) {
                cells.push(Cell::new(col, row));
            }
        }
    }
    GridSet::from_cells(cells).map_err(|_| Error::EmptyRaster)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::routing::tests::{pt, unit_square};
    use crate::{ratio, Rational};

    #[test]
    fn empty_scene_routes_directly() {
        let scene: RoutingScene<Rational> =
            RoutingScene::with_auto_window(vec![], &[pt(0, 1, 0, 1), pt(3, 1, 2, 1)]).unwrap();
        let r = route_multi(&scene, &pt(0, 1, 0, 1), &pt(3, 1, 2, 1), &ratio(1, 1)).unwrap();
        assert_eq!(r.links, 2);
        let r = route_multi(&scene, &pt(0, 1, 0, 1), &pt(3, 1, 0, 1), &ratio(1, 1)).unwrap();
        assert_eq!(r.links, 1);
    }

    #[test]
    fn square_between_endpoints() {
        let scene = RoutingScene::with_auto_window(vec![unit_square()], &[]).unwrap();
        let (p, q) = (pt(-1, 1, 1, 2), pt(2, 1, 1, 2));
        let r = route_multi(&scene, &p, &q, &ratio(1, 2)).unwrap();
        assert_eq!(r.links, 3);
        assert!(r.verified && scene.verify_path(&r.path));
        assert_eq!(r.path.start(), &p);
        assert_eq!(r.path.end(), &q);
    }

    #[test]
    fn query_validation() {
        let scene = RoutingScene::with_auto_window(vec![unit_square()], &[]).unwrap();
        let inside = pt(1, 2, 1, 2);
        assert_eq!(route_multi(&scene, &inside, &pt(2, 1, 0, 1), &ratio(1, 1)), Err(Error::InsideObstacle));
        assert_eq!(route_multi(&scene, &pt(9, 1, 0, 1), &pt(2, 1, 0, 1), &ratio(1, 1)), Err(Error::OutsideWindow));
    }

    #[test]
    fn free_space_raster() {
        let scene = RoutingScene::new(vec![unit_square()], crate::rect::Rect::from_i64(-2, -2, 3, 3).unwrap()).unwrap();
        let g = rasterize_free_space(&scene, &ratio(1, 1)).unwrap();
        assert_eq!(g.len(), 24);
        assert!(!g.contains(Cell::new(2, 2)));
        assert!(g.contains(Cell::new(1, 2)));
    }
}
