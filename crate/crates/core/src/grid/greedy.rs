use super::{Cell, GridSet};
use crate::{Axis, Direction, Error, OrthoPath};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GreedyOutcome {
    Reached(OrthoPath<i64>),
    /// Neither axis lets the walk get closer to the target. `gap` is the
    /// absent cell in the preferred direction next to `stuck_at`.
    Blocked { partial: OrthoPath<i64>, stuck_at: Cell, gap: Cell },
}

impl GreedyOutcome {
    pub fn is_reached(&self) -> bool {
        matches!(self, GreedyOutcome::Reached(_))
    }
}

impl GridSet {
    /// Walk from `a` toward `b`, each leg advancing along one axis as far as
    /// the set allows without passing `b`'s coordinate. The leg axis is the
    /// one with the larger remaining displacement (ties go horizontal); when
    /// it cannot advance, the other axis is tried.
    pub fn greedy_staircase(&self, a: Cell, b: Cell) -> Result<GreedyOutcome, Error> {
        self.require(a)?;
        self.require(b)?;
        let (h, v) = Direction::toward(&a.as_point(), &b.as_point());
        let mut cur = a;
        let mut corners = vec![a.as_point()];
        while cur != b {
            let dx = (b.col - cur.col).abs();
            let dy = (b.row - cur.row).abs();
            let preferred = if dx >= dy { Axis::Horizontal } else { Axis::Vertical };
            let mut order = [preferred, preferred.other()]
                .into_iter()
                .filter(|axis| match axis {
                    Axis::Horizontal => dx > 0,
                    Axis::Vertical => dy > 0,
                })
                .map(|axis| match axis {
                    Axis::Horizontal => h.expect("horizontal displacement remains"),
                    Axis::Vertical => v.expect("vertical displacement remains"),
                })
                .peekable();
            let first_dir = *order.peek().expect("cur != b");
            let mut moved = false;
            for dir in order {
                let limit = match dir.axis() {
                    Axis::Horizontal => dx,
                    Axis::Vertical => dy,
                };
                let mut steps = 0;
                while steps < limit && self.contains(cur.step(dir)) {
                    cur = cur.step(dir);
                    steps += 1;
                }
                if steps > 0 {
                    corners.push(cur.as_point());
                    moved = true;
                    break;
                }
            }
            if !moved {
                let partial = OrthoPath::new(corners).expect("legs are axis-parallel");
                return Ok(GreedyOutcome::Blocked { partial, stuck_at: cur, gap: cur.step(first_dir) });
            }
        }
        Ok(GreedyOutcome::Reached(OrthoPath::new(corners).expect("legs are axis-parallel")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Point2;

    fn grid(rows: &[&str]) -> GridSet {
        GridSet::from_rows(Cell::new(0, 0), rows).unwrap()
    }

    #[test]
    fn greedy_examples() {
        let full = grid(&["###", "###", "###"]);
        match full.greedy_staircase(Cell::new(0, 0), Cell::new(2, 2)).unwrap() {
            GreedyOutcome::Reached(p) => {
                assert_eq!(p.link_count(), 2);
                assert_eq!(p.vertices(), &[Point2::new(0, 0), Point2::new(2, 0), Point2::new(2, 2)]);
            }
            other => panic!("unexpected {other:?}"),
        }

        let plus = grid(&[".#.", "###", ".#."]);
        match plus.greedy_staircase(Cell::new(0, 1), Cell::new(1, 2)).unwrap() {
            GreedyOutcome::Reached(p) => {
                assert_eq!(p.vertices(), &[Point2::new(0, 1), Point2::new(1, 1), Point2::new(1, 2)]);
                assert!(p.is_staircase());
            }
            other => panic!("unexpected {other:?}"),
        }

        let u = grid(&["#.#", "###"]);
        match u.greedy_staircase(Cell::new(0, 1), Cell::new(2, 1)).unwrap() {
            GreedyOutcome::Blocked { stuck_at, gap, partial } => {
                assert_eq!(stuck_at, Cell::new(0, 1));
                assert_eq!(gap, Cell::new(1, 1));
                assert_eq!(partial.link_count(), 0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn greedy_rejects_foreign_cells() {
        let u = grid(&["#.#", "###"]);
        assert!(u.greedy_staircase(Cell::new(1, 1), Cell::new(0, 0)).is_err());
    }
}
