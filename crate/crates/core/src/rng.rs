//! Seed derivation and the per-decision random stream.
//!
//! Every random choice is keyed by its position rather than drawn from a
//! shared sequential stream: trial `t` of an experiment gets
//! `derive_seed(seed, &[t])`, and rewiring decision `(i, d)` of a graph reads
//! its own ChaCha8 stream. Results therefore do not depend on how work is
//! scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Mixes a base seed with a path of indices into a child seed.
pub fn derive_seed(seed: u64, path: &[u64]) -> u64 {
    path.iter()
        .fold(splitmix64(seed.wrapping_add(GOLDEN)), |acc, &part| {
            splitmix64(acc ^ splitmix64(part.wrapping_add(GOLDEN)))
        })
}

/// Source of the per-decision streams of one graph.
#[derive(Clone)]
pub struct DecisionStreams {
    base: ChaCha8Rng,
}

impl DecisionStreams {
    pub fn new(seed: u64) -> Self {
        DecisionStreams {
            base: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Stream for decision number `index` (`i * k/2 + (d - 1)` in rewiring order).
    pub fn stream(&mut self, index: u64) -> &mut ChaCha8Rng {
        self.base.set_stream(index);
        self.base.set_word_pos(0);
        &mut self.base
    }
}
