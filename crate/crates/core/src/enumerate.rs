//! Exhaustive enumeration of short generator words, with a census that
//! cross-checks the classification at desk scale.
//!
//! Words are enumerated over the raw letters `A, A^-1, B, B^-1` (not over
//! syllables) so that relation-induced collisions such as `(A B^-1)^3 = E`
//! actually occur. The census groups every word by its matrix and by the
//! fraction it sends `0` to, and records a violation whenever two words
//! share a fraction without differing by a right `B` power, share a matrix
//! but disagree on the fraction, or fail a normal-form round trip.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use std::collections::HashMap;
use std::fmt;

use crate::psl2z::{GenWord, Letter, Psl2Elem};
use crate::qext::ProjRat;

/// Default cap on `4^max_len`, the size of the longest enumerated layer.
pub const DEFAULT_WORD_BUDGET: u64 = 1 << 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("4^{max_len} words exceed the budget of {budget}")]
    LimitTooLarge { max_len: u32, budget: u64 },
}

/// The raw alphabet in enumeration order.
const ALPHABET: [(Letter, i8); 4] = [
    (Letter::A, 1),
    (Letter::A, -1),
    (Letter::B, 1),
    (Letter::B, -1),
];

/// Yields every word over `A, A^-1, B, B^-1` of letter-length at most
/// `max_len`, exactly once per raw letter sequence, ordered by length and
/// then lexicographically with `A < A^-1 < B < B^-1`.
pub struct WordEnumerator {
    max_len: u32,
    current_len: u32,
    indices: Vec<u8>,
    exhausted: bool,
}

impl WordEnumerator {
    fn new(max_len: u32) -> Self {
        WordEnumerator {
            max_len,
            current_len: 0,
            indices: Vec::new(),
            exhausted: false,
        }
    }

    fn emit(&self) -> GenWord {
        GenWord::from_syllables(self.indices.iter().map(|&i| {
            let (letter, sign) = ALPHABET[i as usize];
            (letter, BigInt::from(sign))
        }))
    }

    fn advance(&mut self) {
        for slot in self.indices.iter_mut().rev() {
            if *slot < 3 {
                *slot += 1;
                return;
            }
            *slot = 0;
        }
        // Carried past the last sequence of this length.
        if self.current_len == self.max_len {
            self.exhausted = true;
        } else {
            self.current_len += 1;
            self.indices = vec![0; self.current_len as usize];
        }
    }
}

impl Iterator for WordEnumerator {
    type Item = GenWord;

    fn next(&mut self) -> Option<GenWord> {
        if self.exhausted {
            return None;
        }
        let word = self.emit();
        self.advance();
        Some(word)
    }
}

/// Enumerates with the default budget.
pub fn enumerate_words(max_len: u32) -> Result<WordEnumerator, EnumerateError> {
    enumerate_words_with_budget(max_len, DEFAULT_WORD_BUDGET)
}

/// Enumerates raw words of length up to `max_len`, refusing when the longest
/// layer `4^max_len` would exceed `budget`.
pub fn enumerate_words_with_budget(
    max_len: u32,
    budget: u64,
) -> Result<WordEnumerator, EnumerateError> {
    let layer = (max_len < 32).then(|| 1u64 << (2 * max_len));
    match layer {
        Some(layer) if layer <= budget => Ok(WordEnumerator::new(max_len)),
        _ => Err(EnumerateError::LimitTooLarge { max_len, budget }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Two words share a fraction but do not differ by a right `B` power.
    FractionWithoutBPower,
    /// Two words share a matrix but disagree on the fraction.
    MatrixFractionMismatch,
    /// The VT factorization failed to reassemble or was not
    /// sign-homogeneous.
    VtRoundTrip,
    /// The canonical word of a matrix did not evaluate back to it.
    WordRoundTrip,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ViolationKind::FractionWithoutBPower => "fraction_without_b_power",
            ViolationKind::MatrixFractionMismatch => "matrix_fraction_mismatch",
            ViolationKind::VtRoundTrip => "vt_round_trip",
            ViolationKind::WordRoundTrip => "word_round_trip",
        };
        write!(f, "{name}")
    }
}

/// A counterexample pair of words (display forms).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub left: String,
    pub right: String,
}

/// Aggregate result of one census run; `violations` must stay empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub max_len: u32,
    pub word_count: u64,
    pub matrix_classes: u64,
    pub fraction_classes: u64,
    pub violations: Vec<Violation>,
}

/// Runs the census with the default budget.
pub fn run_census(max_len: u32) -> Result<CensusReport, EnumerateError> {
    run_census_with_budget(max_len, DEFAULT_WORD_BUDGET)
}

/// Scans every word of length up to `max_len` and cross-checks the
/// classification and both normal forms against each word's matrix.
pub fn run_census_with_budget(
    max_len: u32,
    budget: u64,
) -> Result<CensusReport, EnumerateError> {
    let words = enumerate_words_with_budget(max_len, budget)?;
    let zero = ProjRat::zero();

    let mut word_count: u64 = 0;
    let mut violations = Vec::new();
    // First word seen per matrix, with its fraction.
    let mut by_matrix: HashMap<Psl2Elem, (GenWord, ProjRat)> = HashMap::new();
    // First word seen per fraction, with its matrix.
    let mut by_fraction: HashMap<ProjRat, (GenWord, Psl2Elem)> = HashMap::new();

    for word in words {
        word_count += 1;
        let matrix = word.to_matrix();
        let fraction = matrix.act(&zero);

        let vt = matrix.vt_normal_form();
        if vt.to_matrix() != matrix || !vt.t().is_sign_homogeneous() {
            violations.push(Violation {
                kind: ViolationKind::VtRoundTrip,
                left: word.to_string(),
                right: vt.t().to_string(),
            });
        }
        let canonical = matrix.to_word();
        if canonical.to_matrix() != matrix {
            violations.push(Violation {
                kind: ViolationKind::WordRoundTrip,
                left: word.to_string(),
                right: canonical.to_string(),
            });
        }

        if let Some((first_word, first_fraction)) = by_matrix.get(&matrix) {
            if *first_fraction != fraction {
                violations.push(Violation {
                    kind: ViolationKind::MatrixFractionMismatch,
                    left: first_word.to_string(),
                    right: word.to_string(),
                });
            }
        } else {
            by_matrix.insert(matrix.clone(), (word.clone(), fraction.clone()));
        }

        if let Some((first_word, first_matrix)) = by_fraction.get(&fraction) {
            // Right B powers form a subgroup, so checking against the class
            // representative covers every pair in the class.
            let residue = first_matrix.inverse().compose(&matrix);
            if residue.as_b_power().is_none() {
                violations.push(Violation {
                    kind: ViolationKind::FractionWithoutBPower,
                    left: first_word.to_string(),
                    right: word.to_string(),
                });
            }
        } else {
            by_fraction.insert(fraction, (word, matrix));
        }
    }

    Ok(CensusReport {
        max_len,
        word_count,
        matrix_classes: by_matrix.len() as u64,
        fraction_classes: by_fraction.len() as u64,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_words(0).unwrap().count(), 1);
        assert_eq!(enumerate_words(1).unwrap().count(), 5);
        assert_eq!(enumerate_words(2).unwrap().count(), 21);
    }

    #[test]
    fn length_one_layer_in_order() {
        let words: Vec<String> = enumerate_words(1)
            .unwrap()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(words, ["E", "A", "A^-1", "B", "B^-1"]);
    }

    #[test]
    fn budget_guard_rejects_oversized_runs() {
        assert_eq!(
            enumerate_words_with_budget(10, 1 << 10).err(),
            Some(EnumerateError::LimitTooLarge {
                max_len: 10,
                budget: 1 << 10
            })
        );
        assert!(enumerate_words_with_budget(5, 1 << 10).is_ok());
    }

    #[test]
    fn census_of_the_empty_layer() {
        let report = run_census(0).unwrap();
        assert_eq!(report.word_count, 1);
        assert_eq!(report.matrix_classes, 1);
        assert_eq!(report.fraction_classes, 1);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn census_of_single_letters() {
        let report = run_census(1).unwrap();
        assert_eq!(report.word_count, 5);
        // E, A, A^-1, B, B^-1 are five distinct matrices, but B and B^-1
        // share the fraction 0 with E, leaving {0, 1, -1}.
        assert_eq!(report.matrix_classes, 5);
        assert_eq!(report.fraction_classes, 3);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn b_and_its_inverse_differ_by_a_b_power() {
        let b = Psl2Elem::gen_b();
        let residue = b.inverse().compose(&b.inverse());
        assert_eq!(residue.as_b_power(), Some(BigInt::from(-2)));
    }

    #[test]
    fn census_runs_are_deterministic() {
        let first = run_census(3).unwrap();
        let second = run_census(3).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn fraction_classes_never_exceed_matrix_classes() {
        for max_len in 0..=4 {
            let report = run_census(max_len).unwrap();
            assert!(report.fraction_classes <= report.matrix_classes);
            assert!(report.violations.is_empty());
        }
    }
}
