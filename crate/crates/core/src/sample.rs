//! Deterministic pseudo-random parameter draws for the spot-check suites.
//!
//! Each (check, order, iteration) triple gets its own stream, derived from
//! the user seed by an FNV-1a mix. Adding or reordering checks therefore
//! never shifts the draws of the others, and two runs with the same seed are
//! byte-identical.

use num::traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{rat, Rat};

/// FNV-1a mix of the user seed, a check label, the order, and an iteration
/// counter into one stream seed.
pub fn subseed(seed: u64, label: &str, n: u64, iter: u64) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET;
    let eat = |h: &mut u64, b: u8| {
        *h ^= u64::from(b);
        *h = h.wrapping_mul(PRIME);
    };
    for b in seed.to_le_bytes() {
        eat(&mut h, b);
    }
    for b in label.bytes() {
        eat(&mut h, b);
    }
    for b in n.to_le_bytes() {
        eat(&mut h, b);
    }
    for b in iter.to_le_bytes() {
        eat(&mut h, b);
    }
    h
}

/// Fresh deterministic generator for one (check, order, iteration) cell.
pub fn rng_for(seed: u64, label: &str, n: u64, iter: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(subseed(seed, label, n, iter))
}

/// Rational with numerator in `-50..=50` and denominator in `1..=50`.
pub fn draw_rat(rng: &mut impl Rng) -> Rat {
    rat(rng.gen_range(-50..=50), rng.gen_range(1..=50))
}

/// Nonzero rational, by rejection on [`draw_rat`].
pub fn draw_nonzero_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = draw_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}
