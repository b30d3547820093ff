//! Three-strand braid words and their correspondence with the move group.
//!
//! The twist calculus embeds into the braid group `B3` modulo the full twist
//! `s1 s2 s1 s2 s1 s2 = 1`: the generator `A` corresponds to `s1`, `B` to
//! `s2^-1`, and the syllable order reverses because braid words read top to
//! bottom. Equality in the quotient is decided through the matrix image, so
//! no braid rewriting machinery is needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::psl2z::{GenWord, Letter};
use crate::runs::merge_runs;

/// One of the two Artin generators of `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidGen {
    Sigma1,
    Sigma2,
}

impl fmt::Display for BraidGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidGen::Sigma1 => write!(f, "s1"),
            BraidGen::Sigma2 => write!(f, "s2"),
        }
    }
}

/// A maximal run `generator^exponent`; the exponent is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidSyllable {
    pub generator: BraidGen,
    pub exponent: BigInt,
}

impl fmt::Display for BraidSyllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_one() {
            write!(f, "{}", self.generator)
        } else {
            write!(f, "{}^{}", self.generator, self.exponent)
        }
    }
}

/// A run-length-encoded word in `s1`, `s2`, read left to right as top to
/// bottom in the braid; the empty word displays as `E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    syllables: Vec<BraidSyllable>,
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    pub fn from_syllables<E>(syllables: impl IntoIterator<Item = (BraidGen, E)>) -> Self
    where
        E: Into<BigInt>,
    {
        let merged = merge_runs(syllables.into_iter().map(|(g, e)| (g, e.into())));
        BraidWord {
            syllables: merged
                .into_iter()
                .map(|(generator, exponent)| BraidSyllable {
                    generator,
                    exponent,
                })
                .collect(),
        }
    }

    pub fn syllables(&self) -> &[BraidSyllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Concatenation followed by run merging.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord::from_syllables(
            self.syllables
                .iter()
                .chain(other.syllables.iter())
                .map(|s| (s.generator, s.exponent.clone())),
        )
    }

    /// Translates back to a generator word: reverse the syllables, then send
    /// `s1^e` to `A^e` and `s2^e` to `B^-e`.
    pub fn to_gen_word(&self) -> GenWord {
        GenWord::from_syllables(self.syllables.iter().rev().map(|s| match s.generator {
            BraidGen::Sigma1 => (Letter::A, s.exponent.clone()),
            BraidGen::Sigma2 => (Letter::B, -s.exponent.clone()),
        }))
    }

    /// Equality in `B3` modulo the full twist, decided through the matrix
    /// image of the translated words.
    pub fn equivalent(&self, other: &BraidWord) -> bool {
        self.to_gen_word().to_matrix() == other.to_gen_word().to_matrix()
    }
}

impl GenWord {
    /// Translates to a braid word: send `A^e` to `s1^e` and `B^e` to
    /// `s2^-e`, then reverse the syllable order.
    pub fn to_braid(&self) -> BraidWord {
        BraidWord::from_syllables(self.syllables().iter().rev().map(|s| match s.letter {
            Letter::A => (BraidGen::Sigma1, s.exponent.clone()),
            Letter::B => (BraidGen::Sigma2, -s.exponent.clone()),
        }))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "E");
        }
        for (i, syl) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{syl}")?;
        }
        Ok(())
    }
}
