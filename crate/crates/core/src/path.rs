use crate::{Axis, Direction, Point2, Scalar};

/// A polyline whose edges are all axis-parallel. Consecutive vertices are
/// distinct and no two consecutive edges point the same way.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthoPath<T> {
    vertices: Vec<Point2<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    Empty,
    NotAxisParallel(usize),
}

impl<T: Scalar> OrthoPath<T> {
    /// Build a path, dropping repeated vertices and merging collinear
    /// same-direction edges. Fails on an empty list or a diagonal edge.
    pub fn new(points: Vec<Point2<T>>) -> Result<Self, PathError> {
        if points.is_empty() {
            return Err(PathError::Empty);
        }
        let mut vertices: Vec<Point2<T>> = Vec::with_capacity(points.len());
        for (i, p) in points.into_iter().enumerate() {
            if let Some(last) = vertices.last() {
                if *last == p {
                    continue;
                }
                if !last.axis_aligned_with(&p) {
                    return Err(PathError::NotAxisParallel(i));
                }
                if vertices.len() >= 2 {
                    let before = &vertices[vertices.len() - 2];
                    if Direction::between(before, last) == Direction::between(last, &p) {
                        vertices.pop();
                    }
                }
            }
            vertices.push(p);
        }
        Ok(OrthoPath { vertices })
    }

    pub fn single(p: Point2<T>) -> Self {
        OrthoPath { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    pub fn start(&self) -> &Point2<T> {
        &self.vertices[0]
    }

    pub fn end(&self) -> &Point2<T> {
        self.vertices.last().expect("non-empty path")
    }

    pub fn link_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point2<T>, &Point2<T>)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.edges()
            .map(|(a, b)| Direction::between(a, b).expect("axis-parallel edge"))
            .collect()
    }

    /// All horizontal edges point the same way and all vertical edges point the same way.
    pub fn is_staircase(&self) -> bool {
        let dirs = self.directions();
        [Axis::Horizontal, Axis::Vertical].into_iter().all(|axis| {
            let mut along = dirs.iter().filter(|d| d.axis() == axis);
            match along.next() {
                None => true,
                Some(first) => along.all(|d| d == first),
            }
        })
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        OrthoPath { vertices }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&Point2<T>) -> Point2<U>) -> OrthoPath<U> {
        OrthoPath::new(self.vertices.iter().map(f).collect()).expect("map preserves axis alignment")
    }
}
