//! Seeded random number streams.
//!
//! All randomness in this crate flows through ChaCha8 generators derived
//! from a caller-supplied `u64` seed, so every operation is reproducible
//! bit for bit. Monte-Carlo trials use one substream per trial: stream id
//! `trial + 1` on the master seed (stream 0 is the general-purpose
//! stream), which keeps trials independent and order-insensitive.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn trial_stream(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial + 1);
    rng
}
