//! Tiny deterministic pseudorandom generator for reproducible randomized
//! checks.  Not cryptographic.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [lo, hi] (inclusive), lo <= hi.
    pub fn i64_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn u64_below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Nonzero value in [-bound, bound].
    pub fn nonzero_i64(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.i64_in(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }
}
