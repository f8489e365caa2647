//! Few-link orthogonal routes in the complement of convex obstacles.

mod carve;
mod multi;
mod single;

pub use carve::{carve_check, CarveReport};
pub use multi::{rasterize_free_space, route_multi, MAX_REFINEMENTS};
pub use single::route_around_convex;

use crate::rect::Rect;
use crate::scalar::{max_of, min_of};
use crate::{ray_hits_convex, segment_hits_convex, ConvexPolygon, Direction, Error, HitMode, OrthoPath, Point2, Scalar};

/// Which construction produced a route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// The segment `pq` is axis-parallel and clear.
    Direct,
    /// One of the two L-shaped paths through a projection corner.
    LCorner,
    /// Both endpoints escape in the same direction past the obstacle.
    SharedEscape,
    /// One endpoint escapes horizontally, the other vertically.
    OppositeEscapes,
    /// Found on the line grid of the scene.
    Grid,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Direct => "direct",
            CaseTag::LCorner => "l-corner",
            CaseTag::SharedEscape => "shared-escape",
            CaseTag::OppositeEscapes => "opposite-escapes",
            CaseTag::Grid => "grid",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RouteResult<T> {
    pub path: OrthoPath<T>,
    pub links: usize,
    pub verified: bool,
    pub case_tag: CaseTag,
    /// Halvings of the cell size used before the route was found.
    pub refinements: usize,
}

/// Axis directions whose closed ray from `p` avoids the interior of `poly`.
pub fn escape_dirs<T: Scalar>(p: &Point2<T>, poly: &ConvexPolygon<T>) -> Result<Vec<Direction>, Error> {
    if poly.contains_interior(p) {
        return Err(Error::InsideObstacle);
    }
    Ok(Direction::ALL.into_iter().filter(|&d| !ray_hits_convex(p, d, poly, HitMode::Interior)).collect())
}

/// Every edge avoids the interior of every obstacle.
pub fn path_avoids<T: Scalar>(path: &OrthoPath<T>, obstacles: &[ConvexPolygon<T>]) -> bool {
    if path.link_count() == 0 {
        return obstacles.iter().all(|o| !o.contains_interior(path.start()));
    }
    path.edges().all(|(a, b)| obstacles.iter().all(|o| !segment_hits_convex(a, b, o, HitMode::Interior)))
}

/// Pairwise disjoint closed convex obstacles inside a window whose margin
/// around them is at least the largest obstacle diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoutingScene<T> {
    obstacles: Vec<ConvexPolygon<T>>,
    window: Rect<T>,
}

fn obstacles_bbox<T: Scalar>(obstacles: &[ConvexPolygon<T>]) -> Option<Rect<T>> {
    let mut boxes = obstacles.iter().map(|o| o.bbox());
    let (mut lo, mut hi) = boxes.next()?;
    for (l, h) in boxes {
        lo = Point2::new(min_of(&lo.x, &l.x), min_of(&lo.y, &l.y));
        hi = Point2::new(max_of(&hi.x, &h.x), max_of(&hi.y, &h.y));
    }
    Rect::new(lo.x, lo.y, hi.x, hi.y)
}

impl<T: Scalar> RoutingScene<T> {
    pub fn new(obstacles: Vec<ConvexPolygon<T>>, window: Rect<T>) -> Result<Self, Error> {
        for i in 0..obstacles.len() {
            for j in i + 1..obstacles.len() {
                if obstacles[i].intersects_closed(&obstacles[j]) {
                    return Err(Error::ObstaclesIntersect(i, j));
                }
            }
        }
        let diameter_sq = obstacles.iter().map(|o| o.diameter_squared()).fold(T::zero(), |a, b| max_of(&a, &b));
        for (i, o) in obstacles.iter().enumerate() {
            let (lo, hi) = o.bbox();
            let margins = [
                lo.x.clone() - window.xmin.clone(),
                lo.y.clone() - window.ymin.clone(),
                window.xmax.clone() - hi.x.clone(),
                window.ymax.clone() - hi.y.clone(),
            ];
            if margins.iter().any(|m| m.is_negative() || m.clone() * m.clone() < diameter_sq) {
                return Err(Error::WindowTooSmall(i));
            }
        }
        Ok(RoutingScene { obstacles, window })
    }

    /// Window around the obstacles and `points`, padded by the sum of the
    /// largest obstacle's bounding-box sides (at least one unit).
    pub fn with_auto_window(obstacles: Vec<ConvexPolygon<T>>, points: &[Point2<T>]) -> Result<Self, Error> {
        let mut bounds = obstacles_bbox(&obstacles);
        for p in points {
            let r = Rect::point(p);
            bounds = Some(match bounds {
                None => r,
                Some(b) => Rect {
                    xmin: min_of(&b.xmin, &r.xmin),
                    ymin: min_of(&b.ymin, &r.ymin),
                    xmax: max_of(&b.xmax, &r.xmax),
                    ymax: max_of(&b.ymax, &r.ymax),
                },
            });
        }
        let b = bounds.ok_or(Error::Hypothesis("scene needs an obstacle or a point".into()))?;
        let pad = obstacles
            .iter()
            .map(|o| {
                let (lo, hi) = o.bbox();
                hi.x - lo.x + hi.y - lo.y
            })
            .fold(T::one(), |a, b| max_of(&a, &b));
        let window = Rect {
            xmin: b.xmin - pad.clone(),
            ymin: b.ymin - pad.clone(),
            xmax: b.xmax + pad.clone(),
            ymax: b.ymax + pad,
        };
        RoutingScene::new(obstacles, window)
    }

    pub fn obstacles(&self) -> &[ConvexPolygon<T>] {
        &self.obstacles
    }

    pub fn window(&self) -> &Rect<T> {
        &self.window
    }

    /// `p` is inside the window and outside every obstacle interior.
    pub fn check_query_point(&self, p: &Point2<T>) -> Result<(), Error> {
        if !self.window.contains(p) {
            return Err(Error::OutsideWindow);
        }
        if self.obstacles.iter().any(|o| o.contains_interior(p)) {
            return Err(Error::InsideObstacle);
        }
        Ok(())
    }

    /// Every vertex lies in the window and every edge avoids every obstacle
    /// interior.
    pub fn verify_path(&self, path: &OrthoPath<T>) -> bool {
        path.vertices().iter().all(|v| self.window.contains(v)) && path_avoids(path, &self.obstacles)
    }
}
