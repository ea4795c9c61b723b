//! Deterministic pseudo-random numbers for reproducible sampling.
//!
//! Splitmix64 is enough here: the streams only feed test fixtures and the
//! self-check sampler, and byte-identical output across runs and platforms
//! matters more than statistical quality.

use crate::scalar::{rat, Scalar};

#[derive(Clone, Debug)]
pub struct DetRng {
    state: u64,
}

impl DetRng {
    pub fn new(seed: u64) -> Self {
        DetRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        self.next_u64() % bound
    }

    /// Uniform integer in lo..=hi.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }

    /// Small rational with numerator in -3..=3 and denominator in 1..=3.
    pub fn small_rat(&mut self) -> Scalar {
        let p = self.int_in(-3, 3);
        let q = self.int_in(1, 3);
        rat(p, q)
    }

    /// Small nonzero rational.
    pub fn small_rat_nonzero(&mut self) -> Scalar {
        loop {
            let r = self.small_rat();
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }
}
