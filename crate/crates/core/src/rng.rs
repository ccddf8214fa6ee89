//! Reproducible pseudorandom streams.
//!
//! Every random choice in this crate is driven by SplitMix64 (Steele, Lea and
//! Flood 2014): the state advances by the constant `0x9e3779b97f4a7c15` and each
//! output is the state passed through the `mix64` finalizer. A stream seeded
//! with `s` starts from state `s`. With seed 0 the first three outputs are
//! `0xe220a8397b1dcdaf`, `0x6e789e6aa1b965f4`, `0x06c45d188009454f`.
//!
//! Derived values:
//! - a 53-bit draw is `next_u64() >> 11`;
//! - a Bernoulli(p) trial succeeds iff the 53-bit draw is below `floor(p * 2^53)`;
//! - sub-stream `i` of seed `s` is seeded with the `(i + 1)`-th output of the
//!   stream seeded with `s`.

use rand_core::{RngCore, SeedableRng};
pub use rand_xoshiro::SplitMix64;

pub fn stream(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

/// Seed for sub-stream `index` of `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut rng = stream(seed);
    let mut out = 0;
    for _ in 0..=index {
        out = rng.next_u64();
    }
    out
}

#[inline]
pub fn draw53(rng: &mut SplitMix64) -> u64 {
    rng.next_u64() >> 11
}

/// Integer threshold such that `draw53 < threshold` has probability `p`.
pub fn bernoulli_threshold(p: f64) -> u64 {
    let scaled = p.clamp(0.0, 1.0) * (1u64 << 53) as f64;
    scaled.floor() as u64
}
