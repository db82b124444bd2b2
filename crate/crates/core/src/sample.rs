//! Reproducible random point sets in general position.
//!
//! The generator is SplitMix64 (state advanced by `0x9E3779B97F4A7C15`, output mixed
//! with multipliers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`), seeded directly
//! with the user seed. Coordinates are drawn uniformly from `0..=GRID`; a drawn point
//! is redrawn if it duplicates an earlier point or is collinear with two of them.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::geom::{orient_det, Point, PointSet};

pub const GRID: i64 = 1000;

pub fn rng_from_seed(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

pub fn random_point_set(n: usize, rng: &mut impl Rng) -> PointSet {
    let mut points: Vec<Point> = Vec::with_capacity(n);
    while points.len() < n {
        let p = Point::new(rng.random_range(0..=GRID), rng.random_range(0..=GRID));
        let clash = points.iter().enumerate().any(|(i, &a)| {
            a == p || points[i + 1..].iter().any(|&b| orient_det(a, b, p) == 0)
        });
        if !clash {
            points.push(p);
        }
    }
    PointSet::new(points).expect("sampler keeps general position")
}
