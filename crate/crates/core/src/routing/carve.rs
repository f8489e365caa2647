use crate::grid::{rasterize_convex, GridSet};
use crate::{ConvexPolygon, Error, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarveReport {
    pub removed: usize,
    pub remaining: usize,
    pub connected: bool,
}

/// Removes the raster of `k` from `c` and reports whether what is left is
/// 4-connected. `c` must be 4-connected and every cell of the raster must
/// have its eight neighbours in `c`.
pub fn carve_check<T: Scalar>(c: &GridSet, k: &ConvexPolygon<T>, cell_size: &T) -> Result<CarveReport, Error> {
    if !c.is_orthogonally_connected() {
        return Err(Error::Hypothesis("C is not orthogonally connected".into()));
    }
    let carved = rasterize_convex(k, cell_size)?;
    for cell in carved.cells() {
        for dc in -1..=1 {
            for dr in -1..=1 {
                if !c.contains(cell.offset(dc, dr)) {
                    return Err(Error::Hypothesis(format!(
                        "K is not inside the interior of C: cell ({}, {}) lacks a neighbour",
                        cell.col, cell.row
                    )));
                }
            }
        }
    }
    let rest = c.difference(&carved).ok_or(Error::EmptyGrid)?;
    Ok(CarveReport { removed: carved.len(), remaining: rest.len(), connected: rest.is_orthogonally_connected() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Cell;
    use crate::{ratio, Point2};

    fn block(n: i64) -> GridSet {
        GridSet::from_cells((0..n).flat_map(|r| (0..n).map(move |c| Cell::new(c, r)))).unwrap()
    }

    #[test]
    fn carve_examples() {
        let sq = ConvexPolygon::rectangle(ratio(4, 1), ratio(4, 1), ratio(6, 1), ratio(6, 1)).unwrap();
        let r = carve_check(&block(10), &sq, &ratio(1, 1)).unwrap();
        assert!(r.connected);
        assert_eq!(r.removed, 4);
        assert_eq!(r.remaining, 96);

        let diamond = ConvexPolygon::new(vec![
            Point2::from_i64(5, 2),
            Point2::from_i64(8, 5),
            Point2::from_i64(5, 8),
            Point2::from_i64(2, 5),
        ])
        .unwrap();
        assert!(carve_check(&block(10), &diamond, &ratio(1, 1)).unwrap().connected);
    }

    #[test]
    fn touching_boundary_rejected() {
        let edge = ConvexPolygon::rectangle(ratio(0, 1), ratio(4, 1), ratio(2, 1), ratio(6, 1)).unwrap();
        assert!(matches!(carve_check(&block(10), &edge, &ratio(1, 1)), Err(Error::Hypothesis(_))));
    }
}
