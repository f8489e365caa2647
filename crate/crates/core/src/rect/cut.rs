use super::{Rect, RectComplex};
use crate::{Error, Point2, Scalar};

/// A point whose removal disconnects the complex, with the closures of the
/// components of the punctured set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutStructure<T> {
    pub point: Point2<T>,
    pub pieces: Vec<RectComplex<T>>,
}

impl<T> CutStructure<T> {
    pub fn piece_count(&self) -> usize {
        self.pieces.len()
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Rectangles split at `p` so that each part minus `p` stays connected.
/// The point rectangle `{p}` itself contributes nothing.
fn split_at<T: Scalar>(rects: &[Rect<T>], p: &Point2<T>) -> Vec<Rect<T>> {
    let mut parts = vec![];
    for r in rects {
        if !r.contains(p) {
            parts.push(r.clone());
        } else if r.is_point() {
        } else if r.ymin == r.ymax && r.xmin < p.x && p.x < r.xmax {
            parts.push(Rect { xmax: p.x.clone(), ..r.clone() });
            parts.push(Rect { xmin: p.x.clone(), ..r.clone() });
        } else if r.xmin == r.xmax && r.ymin < p.y && p.y < r.ymax {
            parts.push(Rect { ymax: p.y.clone(), ..r.clone() });
            parts.push(Rect { ymin: p.y.clone(), ..r.clone() });
        } else {
            parts.push(r.clone());
        }
    }
    parts
}

/// Parts meeting `p` are all segments along one axis: `p` sits inside a
/// zero-thickness corridor.
fn inside_corridor<T: Scalar>(parts: &[Rect<T>], p: &Point2<T>) -> bool {
    let touching: Vec<&Rect<T>> = parts.iter().filter(|r| r.contains(p)).collect();
    touching.iter().all(|r| r.ymin == r.ymax && r.xmin != r.xmax)
        || touching.iter().all(|r| r.xmin == r.xmax && r.ymin != r.ymax)
}

impl<T: Scalar> RectComplex<T> {
    /// Components of the complex with `p` removed, as closed pieces.
    pub fn pieces_at(&self, p: &Point2<T>) -> Vec<RectComplex<T>> {
        let parts = split_at(&self.rects, p);
        let pinch = Rect::point(p);
        let mut parent: Vec<usize> = (0..parts.len()).collect();
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if let Some(common) = parts[i].intersection(&parts[j]) {
                    if common != pinch {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<(usize, Vec<Rect<T>>)> = vec![];
        for (i, part) in parts.into_iter().enumerate() {
            let root = find(&mut parent, i);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, g)) => g.push(part),
                None => groups.push((root, vec![part])),
            }
        }
        groups
            .into_iter()
            .map(|(_, rects)| RectComplex::new(rects).expect("parts are valid"))
            .collect()
    }

    /// Cut points at arrangement vertices, excluding points interior to a
    /// zero-thickness corridor, each with its pieces.
    pub fn cut_structures(&self) -> Result<Vec<CutStructure<T>>, Error> {
        if !self.is_connected() {
            return Err(Error::ComplexDisconnected);
        }
        let mut out = vec![];
        for p in self.arrangement_vertices() {
            let pieces = self.pieces_at(&p);
            if pieces.len() < 2 {
                continue;
            }
            if inside_corridor(&split_at(&self.rects, &p), &p) {
                continue;
            }
            out.push(CutStructure { point: p, pieces });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn complex(rects: &[(i64, i64, i64, i64)]) -> RectComplex<Rational> {
        RectComplex::new(rects.iter().map(|&(a, b, c, d)| Rect::from_i64(a, b, c, d).unwrap()).collect()).unwrap()
    }

    #[test]
    fn cut_examples() {
        assert!(complex(&[(0, 0, 2, 1)]).cut_structures().unwrap().is_empty());

        let corner = complex(&[(0, 0, 1, 1), (1, 1, 2, 2)]);
        let cuts = corner.cut_structures().unwrap();
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].point, Point2::from_i64(1, 1));
        assert_eq!(cuts[0].piece_count(), 2);

        let quadrants = complex(&[(0, 0, 1, 1), (-1, 0, 0, 1), (-1, -1, 0, 0), (0, -1, 1, 0)]);
        assert!(quadrants.cut_structures().unwrap().is_empty());

        let cuts = plus().cut_structures().unwrap();
        let hub: Vec<_> = cuts.iter().filter(|c| c.point == Point2::from_i64(0, 0)).collect();
        assert_eq!(hub.len(), 1);
        assert_eq!(hub[0].piece_count(), 4);
    }

    fn plus() -> RectComplex<Rational> {
        complex(&[
            (-2, 0, 2, 0),
            (0, -2, 0, 2),
            (2, -1, 4, 1),
            (-4, -1, -2, 1),
            (-1, 2, 1, 4),
            (-1, -4, 1, -2),
        ])
    }

    #[test]
    fn pieces_meet_only_at_the_cut() {
        for cut in plus().cut_structures().unwrap() {
            let pinch = Rect::point(&cut.point);
            for (i, a) in cut.pieces.iter().enumerate() {
                assert!(a.contains(&cut.point));
                for b in &cut.pieces[i + 1..] {
                    for ra in a.rects() {
                        for rb in b.rects() {
                            if let Some(c) = ra.intersection(rb) {
                                assert_eq!(c, pinch);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corridor_reports_its_ends() {
        let corridor = complex(&[(0, 0, 1, 1), (1, 1, 3, 1), (3, 1, 4, 2)]);
        let points: Vec<_> = corridor.cut_structures().unwrap().into_iter().map(|c| c.point).collect();
        assert_eq!(points, vec![Point2::from_i64(1, 1), Point2::from_i64(3, 1)]);

        let overlapping_segments = complex(&[(0, 0, 2, 0), (1, 0, 3, 0)]);
        assert!(overlapping_segments.cut_structures().unwrap().is_empty());
    }

    #[test]
    fn disconnected_rejected() {
        let apart = complex(&[(0, 0, 1, 1), (2, 2, 3, 3)]);
        assert_eq!(apart.cut_structures(), Err(Error::ComplexDisconnected));
    }
}
