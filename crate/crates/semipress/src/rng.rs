//! Counter-based deterministic random numbers.
//!
//! Every random draw in the crate is a pure function of `(seed, counter)`, so
//! runs are reproducible across platforms and independent of thread count or
//! work partitioning. The mixer is SplitMix64.

/// Finalizer of SplitMix64; a bijective mixer on `u64`.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// A counter-based stream: `value(i) = mix(seed, i)`.
#[derive(Debug, Clone, Copy)]
pub struct CounterRng {
    seed: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        CounterRng { seed }
    }

    /// Derive an independent stream, e.g. one per word or sample block.
    pub fn substream(&self, index: u64) -> CounterRng {
        CounterRng {
            seed: mix64(self.seed ^ mix64(index ^ 0x5851_f42d_4c95_7f2d)),
        }
    }

    #[inline]
    pub fn u64_at(&self, counter: u64) -> u64 {
        mix64(self.seed.wrapping_add(counter.wrapping_mul(0x632b_e593_86d1_a5f7)))
    }

    /// Uniform in `[0, 1)` from counter `i`.
    #[inline]
    pub fn f64_at(&self, counter: u64) -> f64 {
        // 53 random bits over 2^53.
        (self.u64_at(counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `[0, bound)` by widening multiply.
    ///
    /// The modulo bias is below 2^-64 * bound, negligible for the small
    /// alphabets used here, and the result is a pure function of the counter.
    #[inline]
    pub fn below_at(&self, counter: u64, bound: u64) -> u64 {
        (((self.u64_at(counter) as u128) * (bound as u128)) >> 64) as u64
    }
}
