//! Seeded, platform-independent randomness for sweeps.
//!
//! Everything is driven by the ChaCha8 keystream, so a `(seed, slot)` pair
//! always yields the same bits regardless of the order slots are visited in.

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};

/// Generator for `seed`. The `i`-th 32-bit output is keystream word `i`.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a seed with a path of tags into a new seed.
///
/// Used to give every `(configuration, trial)` its own independent stream.
pub fn derive_seed(seed: u64, tags: &[u64]) -> u64 {
    let mut state = seed;
    for &tag in tags {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&state.to_le_bytes());
        key[8..16].copy_from_slice(&tag.to_le_bytes());
        key[16..24].copy_from_slice(b"orchard\0");
        state = ChaCha8Rng::from_seed(key).next_u64();
    }
    state
}

/// Uniform draw from `[0, bound)` by rejection, `bound > 0`.
pub fn below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    assert!(bound > 0, "empty range");
    let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return x % bound;
        }
    }
}
