//! Seeded random instances for the property suites.
//!
//! Every generator draws only from the supplied RNG, so a fixed seed
//! reproduces the instance exactly.

use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::convex::is_obtuse_body;
use crate::grid::{random_staircase_grid, Cell, GridSet};
use crate::rect::{Rect, RectComplex};
use crate::{convex_hull, ratio, Complex, Error, Point, Polygon, Rational};

const ATTEMPTS: usize = 1000;

/// `n / d` with `d` in `1..=4`, inside `[lo, hi]`.
pub fn random_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let d = rng.gen_range(1..=4);
    ratio(rng.gen_range(lo * d..=hi * d), d)
}

pub fn random_point<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Point {
    Point::new(random_rational(rng, lo, hi), random_rational(rng, lo, hi))
}

/// Hull of up to `max_vertices` random points in `[-range, range]^2`.
pub fn random_convex_polygon<R: Rng>(rng: &mut R, max_vertices: usize, range: i64) -> Result<Polygon, Error> {
    for _ in 0..ATTEMPTS {
        let n = rng.gen_range(3..=max_vertices.max(3));
        let points: Vec<Point> = (0..n).map(|_| random_point(rng, -range, range)).collect();
        if let Ok(p) = convex_hull(&points) {
            return Ok(p);
        }
    }
    Err(Error::GeneratorExhausted(ATTEMPTS))
}

/// Rational point on the unit circle at roughly angle `theta`.
fn circle_point(theta: f64) -> Point {
    let t = ratio(((theta / 2.0).tan() * 256.0).round() as i64, 256);
    let one = ratio(1, 1);
    let denom = one.clone() + t.clone() * t.clone();
    Point::new((one - t.clone() * t.clone()) / denom.clone(), ratio(2, 1) * t / denom)
}

/// Obtuse polygons: rectangles, rotated rectangles, and polygons inscribed
/// in a circle with evenly jittered vertices.
pub fn random_obtuse_polygon<R: Rng>(rng: &mut R) -> Result<Polygon, Error> {
    let shift = random_point(rng, -50, 50);
    for _ in 0..ATTEMPTS {
        let candidate = match rng.gen_range(0..10) {
            0 => {
                let (w, h) = (random_rational(rng, 1, 20), random_rational(rng, 1, 20));
                Polygon::rectangle(ratio(0, 1), ratio(0, 1), w, h)
            }
            1 => {
                let d = Point::from_i64(rng.gen_range(1..=6), rng.gen_range(-6..=6));
                let (s, t) = (ratio(rng.gen_range(1..=5), 1), ratio(rng.gen_range(1..=5), 1));
                let a = Point::from_i64(0, 0);
                let b = d.scale(&s);
                let c = &b + &d.perp().scale(&t);
                let e = d.perp().scale(&t);
                Polygon::new(vec![a, b, c, e])
            }
            _ => {
                let n = rng.gen_range(7..=12);
                let base = rng.gen_range(-PI..PI);
                let gap = 2.0 * PI / n as f64;
                let mut angles: Vec<f64> = (0..n)
                    .map(|i| {
                        let a = base + gap * i as f64 + rng.gen_range(-0.3..0.3) * gap;
                        (a + PI).rem_euclid(2.0 * PI) - PI
                    })
                    .filter(|a| a.abs() < PI - 0.05)
                    .collect();
                angles.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
                let radius = ratio(rng.gen_range(1..=40), 1);
                let points: Vec<Point> = angles.into_iter().map(|a| circle_point(a).scale(&radius)).collect();
                convex_hull(&points)
            }
        };
        if let Ok(p) = candidate {
            if is_obtuse_body(&p) {
                return Ok(p.translate(&shift));
            }
        }
    }
    Err(Error::GeneratorExhausted(ATTEMPTS))
}

/// A point outside the interior of `poly`, within `margin` of its bounding
/// box. Roughly one draw in ten is a vertex or an edge midpoint.
pub fn random_exterior_point<R: Rng>(rng: &mut R, poly: &Polygon, margin: i64) -> Result<Point, Error> {
    if rng.gen_range(0..10) == 0 {
        let i = rng.gen_range(0..poly.len());
        return Ok(if rng.gen_bool(0.5) {
            poly.vertex(i).clone()
        } else {
            (poly.vertex(i) + poly.next(i)).scale(&ratio(1, 2))
        });
    }
    let (lo, hi) = poly.bbox();
    let m = ratio(margin, 1);
    for _ in 0..ATTEMPTS {
        let fx = ratio(rng.gen_range(0..=64), 64);
        let fy = ratio(rng.gen_range(0..=64), 64);
        let x = lo.x.clone() - m.clone() + (hi.x.clone() - lo.x.clone() + m.clone() * ratio(2, 1)) * fx;
        let y = lo.y.clone() - m.clone() + (hi.y.clone() - lo.y.clone() + m.clone() * ratio(2, 1)) * fy;
        let p = Point::new(x, y);
        if !poly.contains_interior(&p) {
            return Ok(p);
        }
    }
    Err(Error::GeneratorExhausted(ATTEMPTS))
}

fn rect(x0: i64, y0: i64, x1: i64, y1: i64) -> Rect<Rational> {
    Rect::from_i64(x0, y0, x1, y1).expect("ordered fixture")
}

/// Small hand-made complexes: corner touches, corridors, a hub of arms, U, stairs.
pub fn complex_fixtures() -> Vec<Complex> {
    let lists = vec![
        vec![rect(0, 0, 1, 1), rect(1, 1, 2, 2)],
        vec![rect(0, 0, 1, 1), rect(1, 1, 3, 1), rect(3, 1, 4, 2)],
        vec![rect(0, 0, 1, 1), rect(1, 0, 3, 0), rect(3, 0, 4, 1)],
        vec![rect(-2, 0, 2, 0), rect(0, -2, 0, 2), rect(2, -1, 4, 1), rect(-4, -1, -2, 1), rect(-1, 2, 1, 4)],
        vec![rect(0, 0, 3, 1), rect(0, 1, 1, 3), rect(2, 1, 3, 3)],
        vec![rect(0, 0, 2, 2), rect(1, 1, 3, 3), rect(2, 2, 4, 4)],
        vec![rect(0, 0, 2, 0), rect(2, 0, 2, 2), rect(2, 2, 4, 2)],
        vec![rect(1, 1, 1, 1)],
        vec![rect(0, 0, 2, 2), rect(2, 1, 2, 1)],
    ];
    lists.into_iter().map(|l| RectComplex::new(l).expect("fixture")).collect()
}

fn random_rect<R: Rng>(rng: &mut R, span: i64) -> Rect<Rational> {
    let x0 = rng.gen_range(0..=span);
    let y0 = rng.gen_range(0..=span);
    let (mut w, mut h) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    match rng.gen_range(0..10) {
        0 | 1 => h = 0,
        2 | 3 => w = 0,
        4 => (w, h) = (0, 0),
        _ => {}
    }
    rect(x0, y0, x0 + w, y0 + h)
}

/// Connected complex of at most `max_rects` rectangles on small integer
/// coordinates, degenerate ones included. Roughly one draw in six is a
/// fixture instead.
pub fn random_complex<R: Rng>(rng: &mut R, max_rects: usize) -> Result<Complex, Error> {
    if rng.gen_range(0..6) == 0 {
        return Ok(complex_fixtures().choose(rng).expect("fixtures exist").clone());
    }
    let n = rng.gen_range(1..=max_rects.max(1));
    let mut rects = vec![random_rect(rng, 5)];
    let mut attempts = 0;
    while rects.len() < n {
        attempts += 1;
        if attempts > ATTEMPTS {
            return Err(Error::GeneratorExhausted(ATTEMPTS));
        }
        let r = random_rect(rng, 5);
        if rects.iter().any(|s| s.intersects(&r)) {
            rects.push(r);
        }
    }
    RectComplex::new(rects)
}

/// Normal, vertically convex complex: adjacent columns whose vertical spans
/// overlap, with horizontal segment tips at both ends.
pub fn random_normal_complex<R: Rng>(rng: &mut R) -> Result<Complex, Error> {
    let cols = rng.gen_range(1..=6);
    let mut rects = vec![];
    let mut x = 0;
    let (mut lo, mut hi) = (0i64, rng.gen_range(1..=4));
    let mut first_span = (lo, hi);
    for i in 0..cols {
        if i > 0 {
            let new_lo = rng.gen_range(lo - 2..=hi - 1);
            let new_hi = rng.gen_range((new_lo + 1).max(lo)..=hi + 2);
            (lo, hi) = (new_lo, new_hi);
        } else {
            first_span = (lo, hi);
        }
        let w = rng.gen_range(1..=3);
        rects.push(rect(x, lo, x + w, hi));
        x += w;
    }
    let left_y = rng.gen_range(first_span.0..=first_span.1);
    let right_y = rng.gen_range(lo..=hi);
    rects.push(rect(-rng.gen_range(1..=2), left_y, 0, left_y));
    rects.push(rect(x, right_y, x + rng.gen_range(1..=2), right_y));
    RectComplex::new(rects)
}

/// Up to `max_obstacles` convex polygons, each confined to its own slot of
/// a 3-column layout so they are pairwise disjoint.
pub fn random_obstacles<R: Rng>(rng: &mut R, max_obstacles: usize) -> Result<Vec<Polygon>, Error> {
    let n = rng.gen_range(1..=max_obstacles.max(1));
    let mut slots: Vec<usize> = (0..9).collect();
    slots.shuffle(rng);
    let mut out = vec![];
    for &slot in slots.iter().take(n) {
        let shape = random_convex_polygon(rng, 8, 10)?;
        let offset = Point::from_i64(30 * (slot % 3) as i64, 30 * (slot / 3) as i64);
        out.push(shape.translate(&offset));
    }
    Ok(out)
}

/// A 4-connected grid holding a solid block, and a convex polygon placed so
/// that its raster sits at least one cell inside the block.
pub fn random_carve_instance<R: Rng>(rng: &mut R) -> Result<(GridSet, Polygon), Error> {
    let side = rng.gen_range(8..=16);
    let cells: Vec<Cell> = (0..side).flat_map(|r| (0..side).map(move |c| Cell::new(c, r))).collect();
    let extra = random_staircase_grid(rng.gen(), 12, 12)?;
    let (dc, dr) = (rng.gen_range(-4..side), rng.gen_range(-4..side));
    let attached: Vec<Cell> = extra.cells().map(|c| c.offset(dc - extra.min_col(), dr - extra.min_row())).collect();
    let c_grid = GridSet::from_cells(cells.iter().copied().chain(attached.iter().copied()))?;
    let grid = if c_grid.is_orthogonally_connected() {
        c_grid
    } else {
        GridSet::from_cells(cells)?
    };
    for _ in 0..ATTEMPTS {
        let shape = random_convex_polygon(rng, 10, 100)?;
        let (lo, hi) = shape.bbox();
        let extent = if hi.x.clone() - lo.x.clone() > hi.y.clone() - lo.y.clone() {
            hi.x.clone() - lo.x.clone()
        } else {
            hi.y.clone() - lo.y.clone()
        };
        let fit = ratio(side - 4, 1) * ratio(rng.gen_range(1..=4), 4);
        let scale = fit / extent;
        let anchor = Point::from_i64(2, 2);
        let placed = shape.map_vertices(|v| (v - &lo).scale(&scale) + anchor.clone())?;
        if crate::grid::rasterize_convex(&placed, &ratio(1, 1)).is_ok() {
            return Ok((grid, placed));
        }
    }
    Err(Error::GeneratorExhausted(ATTEMPTS))
}
