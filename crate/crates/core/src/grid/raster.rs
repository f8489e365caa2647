use super::{Cell, GridSet};
use crate::{ConvexPolygon, Error, Point2, Scalar};

/// Center of cell `c` when cells have side `cell_size` and cell `(0, 0)`
/// spans `[0, cell_size]^2`.
pub(crate) fn cell_center<T: Scalar>(c: Cell, cell_size: &T) -> Point2<T> {
    let half = T::half();
    Point2::new(
        (T::from_i64(c.col) + half.clone()) * cell_size.clone(),
        (T::from_i64(c.row) + half) * cell_size.clone(),
    )
}

/// Index range of cells whose span meets `[lo, hi]` on one axis.
pub(crate) fn cell_range<T: Scalar>(lo: &T, hi: &T, cell_size: &T) -> std::ops::RangeInclusive<i64> {
    (lo.clone() / cell_size.clone()).floor_i64() - 1..=(hi.clone() / cell_size.clone()).ceil_i64()
}

/// Extent of the closed polygon along the horizontal line at height `y`.
fn row_span<T: Scalar>(poly: &ConvexPolygon<T>, y: &T) -> Option<(T, T)> {
    let mut span: Option<(T, T)> = None;
    for (a, b) in poly.edges() {
        let (lo, hi) = if a.y <= b.y { (a, b) } else { (b, a) };
        if *y < lo.y || *y > hi.y {
            continue;
        }
        let xs = if lo.y == hi.y {
            vec![lo.x.clone(), hi.x.clone()]
        } else {
            vec![lo.x.clone() + (y.clone() - lo.y.clone()) * (hi.x.clone() - lo.x.clone()) / (hi.y.clone() - lo.y.clone())]
        };
        for x in xs {
            span = Some(match span {
                None => (x.clone(), x),
                Some((l, r)) => (if x < l { x.clone() } else { l }, if x > r { x } else { r }),
            });
        }
    }
    span
}

/// Cells whose center lies in the closed polygon.
pub fn rasterize_convex<T: Scalar>(poly: &ConvexPolygon<T>, cell_size: &T) -> Result<GridSet, Error> {
    if !cell_size.is_positive() {
        return Err(Error::NonPositiveCellSize);
    }
    let (lo, hi) = poly.bbox();
    let mut cells = vec![];
    for row in cell_range(&lo.y, &hi.y, cell_size) {
        let y = cell_center(Cell::new(0, row), cell_size).y;
        if let Some((l, r)) = row_span(poly, &y) {
            let first = (l / cell_size.clone() - T::half()).ceil_i64();
            let last = (r / cell_size.clone() - T::half()).floor_i64();
            cells.extend((first..=last).map(|col| Cell::new(col, row)));
        }
    }
    GridSet::from_cells(cells).map_err(|_| Error::EmptyRaster)
}

/// Cells whose center lies in at least one of the closed polygons.
pub fn rasterize_convex_union<T: Scalar>(polys: &[ConvexPolygon<T>], cell_size: &T) -> Result<GridSet, Error> {
    if !cell_size.is_positive() {
        return Err(Error::NonPositiveCellSize);
    }
    let mut cells = vec![];
    for poly in polys {
        if let Ok(g) = rasterize_convex(poly, cell_size) {
            cells.extend(g.cells());
        }
    }
    GridSet::from_cells(cells).map_err(|_| Error::EmptyRaster)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, Rational};

    fn p(x: i64, y: i64) -> Point2<Rational> {
        Point2::from_i64(x, y)
    }

    #[test]
    fn unit_square_is_one_cell() {
        let sq = ConvexPolygon::rectangle(ratio(0, 1), ratio(0, 1), ratio(1, 1), ratio(1, 1)).unwrap();
        let g = rasterize_convex(&sq, &ratio(1, 1)).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g.origin(), Cell::new(0, 0));
    }

    #[test]
    fn diamond_is_staircase_connected() {
        let diamond = ConvexPolygon::new(vec![p(0, -4), p(4, 0), p(0, 4), p(-4, 0)]).unwrap();
        let g = rasterize_convex(&diamond, &ratio(1, 1)).unwrap();
        assert_eq!(g.to_rows()[0], "...##...");
        assert_eq!(g.to_rows()[3], "########");
        assert_eq!(g.len(), 40);
        assert!(g.is_orthogonally_convex());
        assert!(g.is_staircase_connected());
    }

    #[test]
    fn misses_every_center() {
        let sliver = ConvexPolygon::new(vec![
            Point2::new(ratio(1, 10), ratio(1, 10)),
            Point2::new(ratio(2, 10), ratio(1, 10)),
            Point2::new(ratio(2, 10), ratio(2, 10)),
        ])
        .unwrap();
        assert_eq!(rasterize_convex(&sliver, &ratio(1, 1)), Err(Error::EmptyRaster));
        assert_eq!(rasterize_convex(&sliver, &ratio(0, 1)), Err(Error::NonPositiveCellSize));
    }

    #[test]
    fn rows_match_center_tests() {
        let tri = ConvexPolygon::new(vec![p(0, 0), p(7, 2), p(3, 9)]).unwrap();
        let size = ratio(2, 3);
        let g = rasterize_convex(&tri, &size).unwrap();
        for row in -2..16 {
            for col in -2..14 {
                let c = Cell::new(col, row);
                assert_eq!(g.contains(c), tri.contains_closed(&cell_center(c, &size)));
            }
        }
    }
}
