//! Golden values for the exhaustive word census. The class counts were
//! recorded from the first verified run and pin the enumeration order, the
//! run merging, and the classification logic all at once.

use tanglekit_core::{run_census, run_census_with_budget, EnumerateError};

#[test]
fn golden_counts_through_length_six() {
    // (max_len, words, matrix classes, fraction classes)
    let golden = [
        (0, 1, 1, 1),
        (1, 5, 5, 3),
        (2, 21, 17, 8),
        (3, 85, 42, 16),
        (4, 341, 90, 32),
        (5, 1365, 186, 64),
        (6, 5461, 378, 128),
    ];
    for (max_len, words, matrices, fractions) in golden {
        let report = run_census(max_len).unwrap();
        assert_eq!(report.word_count, words, "word count at {max_len}");
        assert_eq!(report.matrix_classes, matrices, "matrix classes at {max_len}");
        assert_eq!(
            report.fraction_classes, fractions,
            "fraction classes at {max_len}"
        );
        assert!(report.violations.is_empty(), "violations at {max_len}");
    }
}

#[test]
fn no_violations_through_length_ten() {
    // Subsumes every shorter run; about 1.4 million raw words.
    let report = run_census(10).unwrap();
    assert_eq!(report.word_count, ((1u64 << 22) - 1) / 3);
    assert!(report.violations.is_empty());
    assert!(report.fraction_classes <= report.matrix_classes);
}

#[test]
fn budget_is_enforced_before_scanning() {
    assert_eq!(
        run_census_with_budget(13, 1 << 24).err(),
        Some(EnumerateError::LimitTooLarge {
            max_len: 13,
            budget: 1 << 24
        })
    );
}
