//! Shared input generation for the benchmarks: deterministic pseudo-random
//! words so runs are comparable across machines.

use num_bigint::BigInt;
use tanglekit_core::{GenWord, Letter};

/// Splitmix-style generator; good enough to scatter letters and exponents.
pub struct Mix(u64);

impl Mix {
    pub fn new(seed: u64) -> Self {
        Mix(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// A word of `len` raw letters drawn from `A, A^-1, B, B^-1`.
pub fn random_word(mix: &mut Mix, len: usize) -> GenWord {
    GenWord::from_syllables((0..len).map(|_| {
        let roll = mix.next_u64();
        let letter = if roll & 1 == 0 { Letter::A } else { Letter::B };
        let sign = if roll & 2 == 0 { 1 } else { -1 };
        (letter, BigInt::from(sign))
    }))
}

/// A batch of words with lengths cycling up to `max_len`.
pub fn word_batch(seed: u64, count: usize, max_len: usize) -> Vec<GenWord> {
    let mut mix = Mix::new(seed);
    (0..count)
        .map(|i| {
            let len = (i % max_len) + 1;
            random_word(&mut mix, len)
        })
        .collect()
}
