//! Finite sets of unit cells on the integer grid.
//!
//! A [`GridSet`] denotes the union of its closed unit cells. Orthogonal
//! connectivity on this model is 4-connectivity, and horizontal/vertical
//! widths are run lengths counted in cells.

mod analysis;
mod greedy;
mod links;
mod random;
mod raster;

pub use greedy::GreedyOutcome;
pub use links::{link_distances_from, min_link_path, LinkGraph, LinkPath, LinkWalk};
pub use random::{random_grid, random_staircase_grid};
pub use raster::{rasterize_convex, rasterize_convex_union};

use crate::{Error, Point2};

/// Absolute cell coordinates; `row` grows northward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: i64,
    pub row: i64,
}

impl Cell {
    pub const fn new(col: i64, row: i64) -> Self {
        Cell { col, row }
    }

    pub fn offset(self, dcol: i64, drow: i64) -> Self {
        Cell::new(self.col + dcol, self.row + drow)
    }

    pub fn step(self, dir: crate::Direction) -> Self {
        let (dx, dy) = dir.delta();
        self.offset(dx, dy)
    }

    pub fn as_point(self) -> Point2<i64> {
        Point2::new(self.col, self.row)
    }
}

impl From<Point2<i64>> for Cell {
    fn from(p: Point2<i64>) -> Self {
        Cell::new(p.x, p.y)
    }
}

/// A non-empty set of cells stored as bit rows over its tight bounding box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridSet {
    origin: Cell,
    width: usize,
    height: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl GridSet {
    /// Build from any collection of cells; the bounding box is fitted tightly.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self, Error> {
        let cells: Vec<Cell> = cells.into_iter().collect();
        let first = *cells.first().ok_or(Error::EmptyGrid)?;
        let (mut c0, mut c1, mut r0, mut r1) = (first.col, first.col, first.row, first.row);
        for c in &cells {
            c0 = c0.min(c.col);
            c1 = c1.max(c.col);
            r0 = r0.min(c.row);
            r1 = r1.max(c.row);
        }
        let width = (c1 - c0 + 1) as usize;
        let height = (r1 - r0 + 1) as usize;
        let mut grid = GridSet::blank(Cell::new(c0, r0), width, height);
        for c in cells {
            grid.set(c);
        }
        Ok(grid)
    }

    /// Parse the text form: rows listed from the top (northmost) row down,
    /// `'#'` for a present cell and `'.'` for an absent one; `origin` is the
    /// absolute position of the bottom-left corner of the box. The box must
    /// already be tight.
    pub fn from_rows<S: AsRef<str>>(origin: Cell, rows: &[S]) -> Result<Self, Error> {
        let height = rows.len();
        if height == 0 {
            return Err(Error::EmptyGrid);
        }
        let width = rows[0].as_ref().chars().count();
        if width == 0 {
            return Err(Error::EmptyGrid);
        }
        let mut grid = GridSet::blank(origin, width, height);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.chars().count() != width {
                return Err(Error::MalformedRow { row: i, reason: format!("expected {width} columns") });
            }
            let y = origin.row + (height - 1 - i) as i64;
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '#' => grid.set(Cell::new(origin.col + j as i64, y)),
                    '.' => {}
                    other => {
                        return Err(Error::MalformedRow { row: i, reason: format!("unexpected character {other:?}") })
                    }
                }
            }
        }
        if grid.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let any_in_row = |y: usize| (0..width).any(|x| grid.get_local(x, y));
        let any_in_col = |x: usize| (0..height).any(|y| grid.get_local(x, y));
        if !any_in_row(height - 1) {
            return Err(Error::NotTight("top row empty"));
        }
        if !any_in_row(0) {
            return Err(Error::NotTight("bottom row empty"));
        }
        if !any_in_col(0) {
            return Err(Error::NotTight("left column empty"));
        }
        if !any_in_col(width - 1) {
            return Err(Error::NotTight("right column empty"));
        }
        Ok(grid)
    }

    /// Inverse of [`GridSet::from_rows`].
    pub fn to_rows(&self) -> Vec<String> {
        (0..self.height)
            .rev()
            .map(|r| (0..self.width).map(|c| if self.get_local(c, r) { '#' } else { '.' }).collect())
            .collect()
    }

    fn blank(origin: Cell, width: usize, height: usize) -> Self {
        let stride = width.div_ceil(64);
        GridSet { origin, width, height, stride, bits: vec![0; stride * height] }
    }

    fn set(&mut self, c: Cell) {
        let (x, y) = ((c.col - self.origin.col) as usize, (c.row - self.origin.row) as usize);
        self.bits[y * self.stride + x / 64] |= 1u64 << (x % 64);
    }

    fn get_local(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.stride + x / 64] >> (x % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn origin(&self) -> Cell {
        self.origin
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn min_col(&self) -> i64 {
        self.origin.col
    }

    pub fn max_col(&self) -> i64 {
        self.origin.col + self.width as i64 - 1
    }

    pub fn min_row(&self) -> i64 {
        self.origin.row
    }

    pub fn max_row(&self) -> i64 {
        self.origin.row + self.height as i64 - 1
    }

    pub fn in_box(&self, c: Cell) -> bool {
        (self.min_col()..=self.max_col()).contains(&c.col) && (self.min_row()..=self.max_row()).contains(&c.row)
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.in_box(c)
            && self.get_local((c.col - self.origin.col) as usize, (c.row - self.origin.row) as usize)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Cells in row-major order, southmost row first, west to east.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height).flat_map(move |y| {
            (0..self.width)
                .filter(move |&x| self.get_local(x, y))
                .map(move |x| Cell::new(self.origin.col + x as i64, self.origin.row + y as i64))
        })
    }

    pub(crate) fn require(&self, c: Cell) -> Result<(), Error> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::CellNotInGrid { col: c.col, row: c.row })
        }
    }

    /// Dense index of a cell within the bounding box.
    pub(crate) fn index_of(&self, c: Cell) -> usize {
        (c.row - self.origin.row) as usize * self.width + (c.col - self.origin.col) as usize
    }

    pub(crate) fn cell_at(&self, index: usize) -> Cell {
        Cell::new(
            self.origin.col + (index % self.width) as i64,
            self.origin.row + (index / self.width) as i64,
        )
    }

    /// This set with `other`'s cells removed; `None` when nothing is left.
    pub fn difference(&self, other: &GridSet) -> Option<GridSet> {
        GridSet::from_cells(self.cells().filter(|c| !other.contains(*c))).ok()
    }
}

impl LinkGraph for GridSet {
    fn node_count(&self) -> usize {
        self.width * self.height
    }

    fn neighbor(&self, node: usize, dir: crate::Direction) -> Option<usize> {
        let next = self.cell_at(node).step(dir);
        self.contains(next).then(|| self.index_of(next))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_and_orientation() {
        let g = GridSet::from_rows(Cell::new(3, -2), &["#.#", "###"]).unwrap();
        assert_eq!(g.len(), 5);
        assert!(g.contains(Cell::new(3, -1)));
        assert!(!g.contains(Cell::new(4, -1)));
        assert!(g.contains(Cell::new(4, -2)));
        assert_eq!(g.to_rows(), vec!["#.#", "###"]);
        assert_eq!(g.origin(), Cell::new(3, -2));
    }

    #[test]
    fn text_errors() {
        assert_eq!(GridSet::from_rows::<&str>(Cell::new(0, 0), &[]), Err(Error::EmptyGrid));
        assert!(matches!(GridSet::from_rows(Cell::new(0, 0), &["#", "##"]), Err(Error::MalformedRow { .. })));
        assert!(matches!(GridSet::from_rows(Cell::new(0, 0), &["#x"]), Err(Error::MalformedRow { .. })));
        assert!(matches!(GridSet::from_rows(Cell::new(0, 0), &["#.", "#."]), Err(Error::NotTight(_))));
        assert!(matches!(GridSet::from_rows(Cell::new(0, 0), &["..", "##"]), Err(Error::NotTight(_))));
        assert_eq!(GridSet::from_rows(Cell::new(0, 0), &["..", ".."]), Err(Error::EmptyGrid));
    }

    #[test]
    fn from_cells_fits_tight_box() {
        let g = GridSet::from_cells([Cell::new(5, 5), Cell::new(7, 4)]).unwrap();
        assert_eq!((g.width(), g.height()), (3, 2));
        assert_eq!(g.origin(), Cell::new(5, 4));
        assert_eq!(g.to_rows(), vec!["#..", "..#"]);
        assert_eq!(GridSet::from_cells(std::iter::empty()), Err(Error::EmptyGrid));
    }

    #[test]
    fn wide_rows_span_several_words() {
        let row: String = (0..130).map(|i| if i % 3 == 0 || i == 129 { '#' } else { '.' }).collect();
        let g = GridSet::from_rows(Cell::new(0, 0), std::slice::from_ref(&row)).unwrap();
        assert_eq!(g.to_rows(), vec![row]);
        assert!(g.contains(Cell::new(129, 0)));
        assert!(!g.contains(Cell::new(128, 0)));
    }
}
