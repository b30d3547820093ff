//! Exact-arithmetic calculus of rational tangles via the modular group.
//!
//! A rational tangle is built from one of two trivial two-strand tangles by
//! twisting pairs of adjacent endpoints. Up to isotopy, the twist moves form a
//! group isomorphic to `PSL(2,Z)`, and each tangle class is classified by a
//! single projective rational (its fraction). This crate implements that
//! calculus with arbitrary-precision integers throughout:
//!
//! * [`psl2z`] — `PSL(2,Z)` matrices, run-length generator words, the
//!   projective action, and normal forms,
//! * [`qext`] — projective rationals (including the point at infinity) and
//!   odd continued fractions,
//! * [`tangle`] — twist-move expressions, the classifying fraction,
//!   equivalence, and canonical alternating forms,
//! * [`braid`] — translation to and from three-strand braid words modulo the
//!   full twist,
//! * [`enumerate`] — an exhaustive small-word census that cross-checks the
//!   classification at desk scale.
//!
//! ```
//! use tanglekit_core::{ProjRat, TangleExpr};
//!
//! // 7/3 names a unique tangle class, realized by an alternating twist word.
//! let class = ProjRat::new(7, 3).unwrap();
//! let canonical = TangleExpr::from_fraction(&class);
//! assert_eq!(canonical.fraction(), class);
//! ```

pub mod braid;
pub mod enumerate;
pub mod psl2z;
pub mod qext;
pub mod tangle;

mod runs;

pub use braid::{BraidGen, BraidSyllable, BraidWord};
pub use enumerate::{
    enumerate_words, enumerate_words_with_budget, run_census, run_census_with_budget,
    CensusReport, EnumerateError, Violation, ViolationKind, WordEnumerator, DEFAULT_WORD_BUDGET,
};
pub use psl2z::{GenWord, Letter, Psl2Elem, Psl2zError, Syllable, VPart, VtForm};
pub use qext::{OddCf, ProjRat, QextError};
pub use tangle::{Base, Move, TangleClass, TangleError, TangleExpr, TwistSign, XMove};
