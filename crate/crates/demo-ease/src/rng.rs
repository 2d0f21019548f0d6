//! Seed derivation and stream construction.
//!
//! Every independent unit of work (demo episode, evaluation trial, repeat
//! run) gets its own ChaCha stream derived from the master seed and the unit
//! index. Workers can then execute in any order — or in parallel — and still
//! produce the same bytes as a sequential run.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

/// The RNG used throughout; ChaCha has a stable, portable output stream.
pub type Stream = ChaCha12Rng;

pub fn stream(seed: u64) -> Stream {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Derive a child seed from a parent seed and a unit index (splitmix64 mix).
pub fn derive(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
