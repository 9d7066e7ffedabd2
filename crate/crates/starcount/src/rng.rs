//! Seedable, splittable randomness.
//!
//! Every stochastic operation in this crate takes an explicit RNG handle so
//! that runs are reproducible from a single `u64` seed. Independent trials
//! (for example the parallel median trials) each receive a stream derived
//! from the parent handle; derivation order is deterministic, so results do
//! not depend on scheduling.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The PRNG used throughout the crate.
pub type StarRng = ChaCha8Rng;

/// Creates the root RNG for a run.
pub fn rng_from_seed(seed: u64) -> StarRng {
    StarRng::seed_from_u64(seed)
}

/// Derives an independent child stream from `parent`.
pub fn derive_rng(parent: &mut StarRng) -> StarRng {
    let mut seed = [0u8; 32];
    parent.fill_bytes(&mut seed);
    StarRng::from_seed(seed)
}
