use std::ops::{Add, Mul, Neg, Sub};

use crate::Scalar;

/// A point (or, where the context says so, a displacement vector) in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T> Point2<T> {
    pub const fn new(x: T, y: T) -> Self {
        Point2 { x, y }
    }
}

impl<T: Scalar> Point2<T> {
    pub fn from_i64(x: i64, y: i64) -> Self {
        Point2::new(T::from_i64(x), T::from_i64(y))
    }

    pub fn zero() -> Self {
        Point2::new(T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    /// z-component of the 3D cross product.
    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn norm_squared(&self) -> T {
        self.dot(self)
    }

    /// Counter-clockwise perpendicular.
    pub fn perp(&self) -> Self {
        Point2::new(-self.y.clone(), self.x.clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Point2::new(self.x.clone() * factor.clone(), self.y.clone() * factor.clone())
    }

    pub fn coord(&self, axis: Axis) -> &T {
        match axis {
            Axis::Horizontal => &self.x,
            Axis::Vertical => &self.y,
        }
    }

    /// Whether `self` and `other` share an x or a y coordinate.
    pub fn axis_aligned_with(&self, other: &Self) -> bool {
        self.x == other.x || self.y == other.y
    }

    /// Point reached by moving `dist` along `dir`.
    pub fn step(&self, dir: Direction, dist: &T) -> Self {
        self + &dir.unit::<T>().scale(dist)
    }
}

impl<T: Scalar> Add for &Point2<T> {
    type Output = Point2<T>;
    fn add(self, rhs: Self) -> Point2<T> {
        Point2::new(self.x.clone() + rhs.x.clone(), self.y.clone() + rhs.y.clone())
    }
}

impl<T: Scalar> Sub for &Point2<T> {
    type Output = Point2<T>;
    fn sub(self, rhs: Self) -> Point2<T> {
        Point2::new(self.x.clone() - rhs.x.clone(), self.y.clone() - rhs.y.clone())
    }
}

impl<T: Scalar> Add for Point2<T> {
    type Output = Point2<T>;
    fn add(self, rhs: Self) -> Point2<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Point2<T> {
    type Output = Point2<T>;
    fn sub(self, rhs: Self) -> Point2<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for Point2<T> {
    type Output = Point2<T>;
    fn neg(self) -> Point2<T> {
        Point2::new(-self.x, -self.y)
    }
}

impl<T: Scalar> Mul<&T> for &Point2<T> {
    type Output = Point2<T>;
    fn mul(self, rhs: &T) -> Point2<T> {
        self.scale(rhs)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    Horizontal,
    Vertical,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::Horizontal => Axis::Vertical,
            Axis::Vertical => Axis::Horizontal,
        }
    }
}

/// The four axis directions. The declaration order E < N < W < S is the
/// tie-breaking order used for deterministic path witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    East,
    North,
    West,
    South,
}

impl Direction {
    pub const ALL: [Direction; 4] = [
        Direction::East,
        Direction::North,
        Direction::West,
        Direction::South,
    ];

    pub fn axis(self) -> Axis {
        match self {
            Direction::East | Direction::West => Axis::Horizontal,
            Direction::North | Direction::South => Axis::Vertical,
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::East => Direction::West,
            Direction::North => Direction::South,
            Direction::West => Direction::East,
            Direction::South => Direction::North,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn delta(self) -> (i64, i64) {
        match self {
            Direction::East => (1, 0),
            Direction::North => (0, 1),
            Direction::West => (-1, 0),
            Direction::South => (0, -1),
        }
    }

    pub fn unit<T: Scalar>(self) -> Point2<T> {
        let (dx, dy) = self.delta();
        Point2::from_i64(dx, dy)
    }

    /// Direction of travel from `from` to `to`, if they differ along exactly one axis.
    pub fn between<T: Scalar>(from: &Point2<T>, to: &Point2<T>) -> Option<Direction> {
        match (from.x == to.x, from.y == to.y) {
            (true, false) if to.y > from.y => Some(Direction::North),
            (true, false) => Some(Direction::South),
            (false, true) if to.x > from.x => Some(Direction::East),
            (false, true) => Some(Direction::West),
            _ => None,
        }
    }

    /// Single-letter label used in reports.
    pub fn letter(self) -> char {
        match self {
            Direction::East => 'E',
            Direction::North => 'N',
            Direction::West => 'W',
            Direction::South => 'S',
        }
    }

    /// The horizontal and vertical directions pointing from `from` toward `to`
    /// (`None` on an axis where the coordinates agree).
    pub fn toward<T: Scalar>(from: &Point2<T>, to: &Point2<T>) -> (Option<Direction>, Option<Direction>) {
        let h = if to.x > from.x {
            Some(Direction::East)
        } else if to.x < from.x {
            Some(Direction::West)
        } else {
            None
        };
        let v = if to.y > from.y {
            Some(Direction::North)
        } else if to.y < from.y {
            Some(Direction::South)
        } else {
            None
        };
        (h, v)
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn direction_axes_and_opposites() {
        for d in Direction::ALL {
            assert_eq!(d.opposite().opposite(), d);
            assert_eq!(d.opposite().axis(), d.axis());
        }
        assert_eq!(Direction::East.axis(), Axis::Horizontal);
        assert_eq!(Direction::South.axis(), Axis::Vertical);
    }

    #[test]
    fn between_points() {
        let a: Point2<Rational> = Point2::from_i64(0, 0);
        assert_eq!(Direction::between(&a, &Point2::from_i64(0, 3)), Some(Direction::North));
        assert_eq!(Direction::between(&a, &Point2::from_i64(-2, 0)), Some(Direction::West));
        assert_eq!(Direction::between(&a, &Point2::from_i64(1, 1)), None);
        assert_eq!(Direction::between(&a, &a), None);
    }
}
