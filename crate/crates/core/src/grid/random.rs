use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cell, GridSet};
use crate::Error;

const MAX_ATTEMPTS: usize = 64;

/// Each cell of a `w x h` box is present independently with probability
/// `fill_prob`. Empty draws are retried; the result box is tight.
pub fn random_grid(seed: u64, w: usize, h: usize, fill_prob: f64) -> Result<GridSet, Error> {
    if w == 0 || h == 0 {
        return Err(Error::GeneratorParams("width and height must be positive"));
    }
    if !(fill_prob > 0.0 && fill_prob < 1.0) {
        return Err(Error::GeneratorParams("fill probability must lie in (0, 1)"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let cells: Vec<Cell> = (0..h as i64)
            .flat_map(|r| (0..w as i64).map(move |c| Cell::new(c, r)))
            .filter(|_| rng.gen_bool(fill_prob))
            .collect();
        if let Ok(g) = GridSet::from_cells(cells) {
            return Ok(g);
        }
    }
    Err(Error::GeneratorExhausted(MAX_ATTEMPTS))
}

/// A staircase-connected set inside a `w x h` box, built from one contiguous
/// run per row. Left ends fall then rise and right ends rise then fall, so
/// every column is a single run; consecutive rows overlap.
pub fn random_staircase_grid(seed: u64, w: usize, h: usize) -> Result<GridSet, Error> {
    if w == 0 || h == 0 {
        return Err(Error::GeneratorParams("width and height must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = w as i64;
    for _ in 0..MAX_ATTEMPTS {
        let rows = rng.gen_range(1..=h);
        let left = valley(&mut rng, rows, w);
        let right: Vec<i64> = valley(&mut rng, rows, w).into_iter().map(|x| w - 1 - x).collect();
        let spans_ok = (0..rows).all(|i| left[i] <= right[i]);
        let overlaps = (1..rows).all(|i| left[i].max(left[i - 1]) <= right[i].min(right[i - 1]));
        if !spans_ok || !overlaps {
            continue;
        }
        let cells = (0..rows).flat_map(|i| (left[i]..=right[i]).map(move |c| Cell::new(c, i as i64)));
        let grid = GridSet::from_cells(cells)?;
        if grid.is_staircase_connected() {
            return Ok(grid);
        }
    }
    Err(Error::GeneratorExhausted(MAX_ATTEMPTS))
}

/// A sequence in `[0, w)` that is non-increasing up to a random turning
/// index and non-decreasing after it.
fn valley(rng: &mut ChaCha8Rng, len: usize, w: i64) -> Vec<i64> {
    let turn = rng.gen_range(0..len);
    let bottom = rng.gen_range(0..((w + 1) / 2).max(1));
    let mut out = vec![bottom; len];
    for i in (0..turn).rev() {
        out[i] = (out[i + 1] + rng.gen_range(0..=2)).min(w - 1);
    }
    for i in turn + 1..len {
        out[i] = (out[i - 1] + rng.gen_range(0..=2)).min(w - 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_box() {
        let g = random_grid(1, 1, 1, 0.5).unwrap();
        assert_eq!(g.len(), 1);
        let s = random_staircase_grid(1, 1, 1).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn deterministic_for_seed() {
        for seed in 0..20 {
            assert_eq!(random_grid(seed, 13, 9, 0.55), random_grid(seed, 13, 9, 0.55));
            assert_eq!(random_staircase_grid(seed, 13, 9), random_staircase_grid(seed, 13, 9));
        }
        assert_ne!(random_grid(1, 20, 20, 0.5), random_grid(2, 20, 20, 0.5));
    }

    #[test]
    fn staircase_generator_holds_invariant() {
        for seed in 0..300 {
            let g = random_staircase_grid(seed, 20, 20).unwrap();
            assert!(g.is_staircase_connected());
            assert!(g.width() <= 20 && g.height() <= 20);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(random_grid(0, 0, 3, 0.5).is_err());
        assert!(random_grid(0, 3, 3, 1.0).is_err());
        assert!(random_grid(0, 3, 3, 0.0).is_err());
        assert!(random_staircase_grid(0, 3, 0).is_err());
    }
}
