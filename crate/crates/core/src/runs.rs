use num_bigint::BigInt;
use num_traits::Zero;

/// Merges adjacent runs of equal letters, dropping runs whose exponents sum
/// to zero. Cancellation cascades: `[A, B, B^-1, A]` collapses to `[A^2]`.
pub(crate) fn merge_runs<L: PartialEq>(
    items: impl IntoIterator<Item = (L, BigInt)>,
) -> Vec<(L, BigInt)> {
    let mut merged: Vec<(L, BigInt)> = Vec::new();
    for (letter, exponent) in items {
        if exponent.is_zero() {
            continue;
        }
        match merged.last_mut() {
            Some((top, sum)) if *top == letter => {
                *sum += exponent;
                if sum.is_zero() {
                    merged.pop();
                }
            }
            _ => merged.push((letter, exponent)),
        }
    }
    merged
}
