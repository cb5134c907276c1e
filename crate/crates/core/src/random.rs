//! Seeded sampling of small rationals, used by property suites and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{frac, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ 3`.
pub fn rational(rng: &mut SeededRng, bound: i64) -> Rational {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

/// Nonzero variant of [`rational`].
pub fn nonzero_rational(rng: &mut SeededRng, bound: i64) -> Rational {
    loop {
        let q = rational(rng, bound.max(1));
        if q != frac(0, 1) {
            return q;
        }
    }
}

/// Dense vector where each coordinate is nonzero with probability `density`.
pub fn vector(rng: &mut SeededRng, dim: usize, bound: i64, density: f64) -> Vec<Rational> {
    (0..dim)
        .map(|_| {
            if rng.gen_bool(density) {
                rational(rng, bound)
            } else {
                frac(0, 1)
            }
        })
        .collect()
}
