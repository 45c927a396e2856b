//! Reproducible pseudo-randomness.
//!
//! Every random choice in this crate goes through [`SplitMix64`], so runs are
//! bit-for-bit reproducible from a seed and easy to re-implement elsewhere:
//!
//! ```text
//! next():   state += 0x9E3779B97F4A7C15; return finalize(state)
//! finalize(z):
//!     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!     return z ^ (z >> 31)                      (all arithmetic mod 2^64)
//! below(k): (next() as u128 * k as u128) >> 64   (uniform index in 0..k)
//! mix(a, b): finalize(a ^ finalize(b + 0x9E3779B97F4A7C15))
//! shuffle(xs): for i in (1..len).rev() { swap(xs[i], xs[below(i + 1)]) }
//! ```
//!
//! Derived seeds (trial `t` of a run seeded with `s`) are always `mix(s, t)`.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Combines a base seed with a stream index into an independent seed.
pub fn mix(base: u64, index: u64) -> u64 {
    finalize(base ^ finalize(index.wrapping_add(GOLDEN)))
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        finalize(self.state)
    }

    /// Uniform index in `0..bound`. `bound` must be nonzero.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0, "below(0)");
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Uniform value in `lo..=hi`.
    pub fn between(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}
