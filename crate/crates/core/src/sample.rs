//! Seeded sampling of rational test points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rat, Rational};
use crate::embedding::PointM;

/// Deterministic generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `p/q` with `|p| ≤ 30` and `1 ≤ q ≤ 7`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-30..=30), rng.gen_range(1..=7))
}

/// A random point of the moduli space (the discriminant is nonzero).
pub fn random_point(rng: &mut impl Rng) -> PointM {
    loop {
        let x = std::array::from_fn(|_| small_rational(rng));
        if let Ok(p) = PointM::new(x) {
            return p;
        }
    }
}
