use super::{escape_dirs, path_avoids, CaseTag, RouteResult};
use crate::scalar::{max_of, min_of};
use crate::{Axis, ConvexPolygon, Direction, Error, OrthoPath, Point2, Scalar};

/// Coordinate along `d` strictly beyond the polygon and both endpoints.
fn beyond<T: Scalar>(d: Direction, poly: &ConvexPolygon<T>, p: &Point2<T>, q: &Point2<T>) -> T {
    let (lo, hi) = poly.bbox();
    let axis = d.axis();
    match d {
        Direction::East | Direction::North => {
            max_of(&max_of(hi.coord(axis), p.coord(axis)), q.coord(axis)) + T::one()
        }
        Direction::West | Direction::South => {
            min_of(&min_of(lo.coord(axis), p.coord(axis)), q.coord(axis)) - T::one()
        }
    }
}

fn with_coord<T: Scalar>(p: &Point2<T>, axis: Axis, value: T) -> Point2<T> {
    match axis {
        Axis::Horizontal => Point2::new(value, p.y.clone()),
        Axis::Vertical => Point2::new(p.x.clone(), value),
    }
}

/// Candidate routes in the order the cases are tried.
fn candidates<T: Scalar>(
    p: &Point2<T>,
    q: &Point2<T>,
    poly: &ConvexPolygon<T>,
) -> Result<Vec<(CaseTag, Vec<Point2<T>>)>, Error> {
    let mut out = vec![];
    if p.axis_aligned_with(q) {
        out.push((CaseTag::Direct, vec![p.clone(), q.clone()]));
    } else {
        for corner in [Point2::new(q.x.clone(), p.y.clone()), Point2::new(p.x.clone(), q.y.clone())] {
            out.push((CaseTag::LCorner, vec![p.clone(), corner, q.clone()]));
        }
    }
    let ep = escape_dirs(p, poly)?;
    let eq = escape_dirs(q, poly)?;
    for d in ep.iter().filter(|d| eq.contains(d)) {
        let far = beyond(*d, poly, p, q);
        let axis = d.axis();
        out.push((
            CaseTag::SharedEscape,
            vec![p.clone(), with_coord(p, axis, far.clone()), with_coord(q, axis, far), q.clone()],
        ));
    }
    for dp in &ep {
        for dq in eq.iter().filter(|dq| dq.axis() != dp.axis()) {
            let p_far = beyond(*dp, poly, p, q);
            let q_far = beyond(*dq, poly, p, q);
            let p_turn = with_coord(p, dp.axis(), p_far.clone());
            let q_turn = with_coord(q, dq.axis(), q_far.clone());
            let corner = with_coord(&with_coord(p, dp.axis(), p_far), dq.axis(), q_far);
            out.push((CaseTag::OppositeEscapes, vec![p.clone(), p_turn, corner, q_turn, q.clone()]));
        }
    }
    Ok(out)
}

/// Route from `p` to `q` with at most four links avoiding the interior of
/// `poly`. Candidates are tried from the fewest links up and each is
/// checked exactly; failing to verify any of them is an error.
pub fn route_around_convex<T: Scalar>(
    p: &Point2<T>,
    q: &Point2<T>,
    poly: &ConvexPolygon<T>,
) -> Result<RouteResult<T>, Error> {
    if poly.contains_interior(p) || poly.contains_interior(q) {
        return Err(Error::InsideObstacle);
    }
    if p == q {
        return Err(Error::CoincidentEndpoints);
    }
    let obstacles = std::slice::from_ref(poly);
    for (case_tag, points) in candidates(p, q, poly)? {
        let path = OrthoPath::new(points).expect("candidate legs are axis-parallel");
        if path_avoids(&path, obstacles) {
            return Ok(RouteResult { links: path.link_count(), path, verified: true, case_tag, refinements: 0 });
        }
    }
    Err(Error::RouteUnverified(format!("no candidate between {p:?} and {q:?} avoided the obstacle")))
}
