use std::collections::VecDeque;

use super::{Cell, GridSet};
use crate::{Direction, Error};

impl GridSet {
    /// All cells form a single 4-connected component.
    pub fn is_orthogonally_connected(&self) -> bool {
        let Some(start) = self.cells().next() else { return false };
        let mut seen = vec![false; self.width() * self.height()];
        let mut queue = VecDeque::from([start]);
        seen[self.index_of(start)] = true;
        let mut count = 1;
        while let Some(c) = queue.pop_front() {
            for d in Direction::ALL {
                let n = c.step(d);
                if self.contains(n) && !seen[self.index_of(n)] {
                    seen[self.index_of(n)] = true;
                    count += 1;
                    queue.push_back(n);
                }
            }
        }
        count == self.len()
    }

    /// Every row and every column holds at most one contiguous run.
    pub fn is_orthogonally_convex(&self) -> bool {
        self.convexity_gap().is_none()
    }

    /// Two cells on a common row (searched first) or column with an absent
    /// cell between them: the end of the first run and the start of the next.
    pub fn convexity_gap(&self) -> Option<(Cell, Cell)> {
        let gap = |line: &mut dyn Iterator<Item = Cell>| {
            let mut last: Option<Cell> = None;
            let mut prev = false;
            for c in line {
                let here = self.contains(c);
                if here && !prev {
                    if let Some(end) = last {
                        return Some((end, c));
                    }
                }
                if here {
                    last = Some(c);
                }
                prev = here;
            }
            None
        };
        (self.min_row()..=self.max_row())
            .find_map(|r| gap(&mut (self.min_col()..=self.max_col()).map(|c| Cell::new(c, r))))
            .or_else(|| {
                (self.min_col()..=self.max_col())
                    .find_map(|c| gap(&mut (self.min_row()..=self.max_row()).map(|r| Cell::new(c, r))))
            })
    }

    pub fn is_staircase_connected(&self) -> bool {
        self.is_orthogonally_connected() && self.is_orthogonally_convex()
    }

    /// Whether a path from `a` to `b` exists that only steps toward `b` on
    /// each axis.
    pub fn monotone_path_exists(&self, a: Cell, b: Cell) -> Result<bool, Error> {
        self.require(a)?;
        self.require(b)?;
        let reach = self.monotone_reach(a, (b.col - a.col).signum(), (b.row - a.row).signum());
        Ok(reach[self.index_of(b)])
    }

    /// Cells reachable from `a` by steps of `(sx, 0)` and `(0, sy)` only
    /// (a zero sign forbids movement on that axis).
    pub fn monotone_reach(&self, a: Cell, sx: i64, sy: i64) -> Vec<bool> {
        let mut reach = vec![false; self.width() * self.height()];
        let cols: Vec<i64> = if sx == 0 {
            vec![a.col]
        } else {
            let end = if sx > 0 { self.max_col() } else { self.min_col() };
            walk(a.col, end, sx)
        };
        let rows: Vec<i64> = if sy == 0 {
            vec![a.row]
        } else {
            let end = if sy > 0 { self.max_row() } else { self.min_row() };
            walk(a.row, end, sy)
        };
        for &r in &rows {
            for &c in &cols {
                let cell = Cell::new(c, r);
                if !self.contains(cell) {
                    continue;
                }
                let ok = cell == a
                    || (c != a.col && reach_at(self, &reach, Cell::new(c - sx, r)))
                    || (r != a.row && reach_at(self, &reach, Cell::new(c, r - sy)));
                if ok {
                    let i = self.index_of(cell);
                    reach[i] = true;
                }
            }
        }
        reach
    }

    /// Brute-force check that every ordered pair of cells is joined by a
    /// monotone path.
    pub fn all_pairs_monotone(&self) -> bool {
        self.monotone_counterexample().is_none()
    }

    /// First ordered pair of cells (in cell order) with no monotone path.
    pub fn monotone_counterexample(&self) -> Option<(Cell, Cell)> {
        let cells: Vec<Cell> = self.cells().collect();
        for &a in &cells {
            for (sx, sy) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let reach = self.monotone_reach(a, sx, sy);
                let miss = cells.iter().find(|&&b| {
                    let in_quadrant = (b.col - a.col) * sx >= 0 && (b.row - a.row) * sy >= 0;
                    in_quadrant && !reach[self.index_of(b)]
                });
                if let Some(&b) = miss {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Length in cells of the horizontal run through `c`.
    pub fn hw(&self, c: Cell) -> Result<usize, Error> {
        self.require(c)?;
        Ok(self.run_length(c, Direction::East) + self.run_length(c, Direction::West) - 1)
    }

    /// Length in cells of the vertical run through `c`.
    pub fn vw(&self, c: Cell) -> Result<usize, Error> {
        self.require(c)?;
        Ok(self.run_length(c, Direction::North) + self.run_length(c, Direction::South) - 1)
    }

    fn run_length(&self, c: Cell, d: Direction) -> usize {
        let mut n = 0;
        let mut cur = c;
        while self.contains(cur) {
            n += 1;
            cur = cur.step(d);
        }
        n
    }

    /// Number of 4-connected components of absent cells, inside the bounding
    /// box grown by `frame_margin`, that do not reach the grown frame.
    pub fn bounded_complement_components(&self, frame_margin: usize) -> usize {
        let m = frame_margin.max(1) as i64;
        let (c0, c1) = (self.min_col() - m, self.max_col() + m);
        let (r0, r1) = (self.min_row() - m, self.max_row() + m);
        let w = (c1 - c0 + 1) as usize;
        let h = (r1 - r0 + 1) as usize;
        let idx = |c: Cell| (c.row - r0) as usize * w + (c.col - c0) as usize;
        let inside = |c: Cell| c.col >= c0 && c.col <= c1 && c.row >= r0 && c.row <= r1;
        let mut label = vec![usize::MAX; w * h];
        let mut bounded = 0;
        let mut next_label = 0;
        for r in r0..=r1 {
            for c in c0..=c1 {
                let start = Cell::new(c, r);
                if self.contains(start) || label[idx(start)] != usize::MAX {
                    continue;
                }
                let mut touches_frame = false;
                let mut queue = VecDeque::from([start]);
                label[idx(start)] = next_label;
                while let Some(cur) = queue.pop_front() {
                    if cur.col == c0 || cur.col == c1 || cur.row == r0 || cur.row == r1 {
                        touches_frame = true;
                    }
                    for d in Direction::ALL {
                        let n = cur.step(d);
                        if inside(n) && !self.contains(n) && label[idx(n)] == usize::MAX {
                            label[idx(n)] = next_label;
                            queue.push_back(n);
                        }
                    }
                }
                if !touches_frame {
                    bounded += 1;
                }
                next_label += 1;
            }
        }
        bounded
    }
}

fn walk(from: i64, to: i64, step: i64) -> Vec<i64> {
    let mut out = vec![];
    let mut v = from;
    loop {
        out.push(v);
        if v == to {
            break;
        }
        v += step;
    }
    out
}

fn reach_at(grid: &GridSet, reach: &[bool], c: Cell) -> bool {
    grid.contains(c) && reach[grid.index_of(c)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(rows: &[&str]) -> GridSet {
        GridSet::from_rows(Cell::new(0, 0), rows).unwrap()
    }

    const U: &[&str] = &["#.#", "###"];
    const PLUS: &[&str] = &[".#.", "###", ".#."];

    #[test]
    fn connectivity_examples() {
        assert!(grid(&["###", "###", "###"]).is_orthogonally_connected());
        assert!(!grid(&["#.", ".#"]).is_orthogonally_connected());
        assert!(grid(U).is_orthogonally_connected());
    }

    #[test]
    fn convexity_examples() {
        assert!(grid(&["####", "####"]).is_orthogonally_convex());
        assert!(!grid(U).is_orthogonally_convex());
        assert!(grid(&["##.", ".##"]).is_orthogonally_convex());
        assert_eq!(grid(U).convexity_gap(), Some((Cell::new(0, 1), Cell::new(2, 1))));
        assert_eq!(grid(&["##", "#.", "##"]).convexity_gap(), Some((Cell::new(1, 0), Cell::new(1, 2))));
    }

    #[test]
    fn staircase_examples() {
        assert!(grid(&["###", "###"]).is_staircase_connected());
        assert!(!grid(U).is_staircase_connected());
        assert!(grid(PLUS).is_staircase_connected());
    }

    #[test]
    fn monotone_oracle_examples() {
        let u = grid(U);
        assert!(u.monotone_path_exists(Cell::new(1, 0), Cell::new(1, 0)).unwrap());
        assert!(!u.monotone_path_exists(Cell::new(0, 1), Cell::new(2, 1)).unwrap());
        assert!(u.monotone_path_exists(Cell::new(0, 1), Cell::new(2, 0)).unwrap());
        let full = grid(&["###", "###"]);
        assert!(full.monotone_path_exists(Cell::new(0, 0), Cell::new(2, 1)).unwrap());
        assert!(full.monotone_path_exists(Cell::new(2, 1), Cell::new(0, 0)).unwrap());
        assert!(u.monotone_path_exists(Cell::new(1, 1), Cell::new(0, 0)).is_err());
        assert!(!u.all_pairs_monotone());
        assert!(grid(PLUS).all_pairs_monotone());
        let (a, b) = u.monotone_counterexample().unwrap();
        assert!(!u.monotone_path_exists(a, b).unwrap());
    }

    #[test]
    fn width_examples() {
        let row = grid(&["#####"]);
        assert_eq!(row.hw(Cell::new(2, 0)), Ok(5));
        assert_eq!(row.vw(Cell::new(2, 0)), Ok(1));
        let plus = grid(PLUS);
        assert_eq!(plus.hw(Cell::new(1, 1)), Ok(3));
        assert_eq!(plus.vw(Cell::new(1, 1)), Ok(3));
        assert_eq!(plus.hw(Cell::new(1, 2)), Ok(1));
        assert_eq!(plus.vw(Cell::new(1, 2)), Ok(3));
        assert!(plus.hw(Cell::new(0, 0)).is_err());
    }

    #[test]
    fn bounded_complement_examples() {
        assert_eq!(grid(&["###", "###"]).bounded_complement_components(1), 0);
        assert_eq!(grid(&["####", "#..#", "####"]).bounded_complement_components(1), 1);
        assert_eq!(grid(PLUS).bounded_complement_components(1), 0);
        assert_eq!(grid(&["#####", "#.#.#", "#####"]).bounded_complement_components(2), 2);
    }
}
