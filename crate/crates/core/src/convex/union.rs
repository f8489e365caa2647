use super::{is_obtuse_body, is_staircase_connected_convex};
use crate::grid::rasterize_convex_union;
use crate::{convex_hull, ConvexPolygon, Error, Scalar};

pub fn hull_of_union<T: Scalar>(polys: &[ConvexPolygon<T>]) -> Result<ConvexPolygon<T>, Error> {
    let points: Vec<_> = polys.iter().flat_map(|p| p.vertices().iter().cloned()).collect();
    convex_hull(&points)
}

fn require_obtuse<T: Scalar>(polys: &[ConvexPolygon<T>]) -> Result<(), Error> {
    match polys.iter().position(|p| !is_obtuse_body(p)) {
        Some(i) => Err(Error::Hypothesis(format!("polygon {i} is not obtuse"))),
        None => Ok(()),
    }
}

/// The hull of obtuse polygons is obtuse and passes the staircase
/// certificate.
pub fn check_hull_obtuse<T: Scalar>(polys: &[ConvexPolygon<T>]) -> Result<bool, Error> {
    require_obtuse(polys)?;
    let hull = hull_of_union(polys)?;
    Ok(is_obtuse_body(&hull) && is_staircase_connected_convex(&hull).passed())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionCheck {
    pub coarse_cells: usize,
    pub coarse_connected: bool,
    pub fine_cells: usize,
    pub fine_connected: bool,
}

impl UnionCheck {
    pub fn passed(&self) -> bool {
        self.coarse_connected && self.fine_connected
    }
}

/// Rasterizes a connected union of obtuse polygons at `cell_size` and at half
/// of it, reporting 4-connectivity at both resolutions.
pub fn union_orthogonal_connectivity_check<T: Scalar>(
    polys: &[ConvexPolygon<T>],
    cell_size: &T,
) -> Result<UnionCheck, Error> {
    if polys.is_empty() {
        return Err(Error::Hypothesis("no polygons".into()));
    }
    require_obtuse(polys)?;
    let n = polys.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && polys[i].intersects_closed(&polys[j]) {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    if seen.contains(&false) {
        return Err(Error::Hypothesis("union is disconnected".into()));
    }
    let coarse = rasterize_convex_union(polys, cell_size)?;
    let fine = rasterize_convex_union(polys, &(cell_size.clone() * T::half()))?;
    Ok(UnionCheck {
        coarse_cells: coarse.len(),
        coarse_connected: coarse.is_orthogonally_connected(),
        fine_cells: fine.len(),
        fine_connected: fine.is_orthogonally_connected(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convex::tests::{hexagon, poly, square};
    use crate::{ratio, Point2};

    #[test]
    fn hull_examples() {
        assert_eq!(hull_of_union(&[square()]).unwrap().len(), 4);
        assert!(check_hull_obtuse(&[square()]).unwrap());

        let far = square().translate(&Point2::from_i64(3, 2));
        let hull = hull_of_union(&[square(), far.clone()]).unwrap();
        assert_eq!(hull.len(), 6);
        assert!(check_hull_obtuse(&[square(), far]).unwrap());

        let shifted = hexagon().translate(&Point2::from_i64(1, 1));
        assert!(check_hull_obtuse(&[square(), shifted]).unwrap());

        let tri = poly(&[(0, 0), (4, 0), (0, 3)]);
        assert!(matches!(check_hull_obtuse(&[square(), tri]), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn union_examples() {
        let a = poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]);
        let b = a.translate(&Point2::from_i64(2, 2));
        assert!(union_orthogonal_connectivity_check(&[a.clone(), b], &ratio(1, 1)).unwrap().passed());

        let chain: Vec<_> = (0..3).map(|k| hexagon().translate(&Point2::from_i64(3 * k, 0))).collect();
        assert!(union_orthogonal_connectivity_check(&chain, &ratio(1, 2)).unwrap().passed());

        let corner = a.translate(&Point2::from_i64(4, 4));
        let check = union_orthogonal_connectivity_check(&[a.clone(), corner], &ratio(1, 1)).unwrap();
        assert!(!check.coarse_connected && !check.fine_connected);

        let apart = a.translate(&Point2::from_i64(10, 0));
        assert!(matches!(
            union_orthogonal_connectivity_check(&[a, apart], &ratio(1, 1)),
            Err(Error::Hypothesis(_))
        ));
    }
}
