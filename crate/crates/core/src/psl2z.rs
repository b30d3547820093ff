//! Exact arithmetic in `PSL(2,Z)`.
//!
//! Elements are 2x2 integer matrices of determinant one, identified with
//! their negatives. The group is generated by
//!
//! ```text
//! A = (1 1)      B = (1 0)
//!     (0 1)          (1 1)
//! ```
//!
//! together with the involution `S = A B^-1 A = (0 1; -1 0)`. Group elements
//! also show up as [`GenWord`]s, run-length-encoded words in `A` and `B`;
//! [`GenWord::to_matrix`] is the evaluation homomorphism and
//! [`Psl2Elem::to_word`] a canonical section of it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::qext::ProjRat;
use crate::runs::merge_runs;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Psl2zError {
    /// The four entries do not form a determinant-one matrix.
    #[error("matrix {0} does not have determinant 1")]
    NotUnimodular(String),
}

/// One of the two twist generators of the move group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::A => write!(f, "A"),
            Letter::B => write!(f, "B"),
        }
    }
}

/// A maximal run `letter^exponent` inside a [`GenWord`]; the exponent is
/// never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub letter: Letter,
    pub exponent: BigInt,
}

impl Syllable {
    /// Matrix of the full run: `A^e = (1 e; 0 1)`, `B^e = (1 0; e 1)`.
    fn matrix(&self) -> Psl2Elem {
        let e = self.exponent.clone();
        match self.letter {
            Letter::A => Psl2Elem::new(1, e, 0, 1).expect("unit shear"),
            Letter::B => Psl2Elem::new(1, 0, e, 1).expect("unit shear"),
        }
    }
}

impl fmt::Display for Syllable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent.is_one() {
            write!(f, "{}", self.letter)
        } else {
            write!(f, "{}^{}", self.letter, self.exponent)
        }
    }
}

/// A run-length-encoded word in the generators `A`, `B` and their inverses.
///
/// Adjacent syllables always carry distinct letters and no syllable has a
/// zero exponent; constructors merge runs and drop cancelled ones (free
/// reduction at the syllable level — no modular-group relations are applied
/// implicitly). The empty word is the identity and displays as `E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GenWord {
    syllables: Vec<Syllable>,
}

impl GenWord {
    /// The empty word.
    pub fn identity() -> Self {
        GenWord::default()
    }

    /// Builds a word from `(letter, exponent)` pairs, merging runs and
    /// dropping zero exponents.
    pub fn from_syllables<E>(syllables: impl IntoIterator<Item = (Letter, E)>) -> Self
    where
        E: Into<BigInt>,
    {
        let merged = merge_runs(syllables.into_iter().map(|(l, e)| (l, e.into())));
        GenWord {
            syllables: merged
                .into_iter()
                .map(|(letter, exponent)| Syllable { letter, exponent })
                .collect(),
        }
    }

    /// The single-syllable word `letter^exponent` (identity if the exponent
    /// is zero).
    pub fn syllable(letter: Letter, exponent: impl Into<BigInt>) -> Self {
        GenWord::from_syllables([(letter, exponent.into())])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// True when every exponent is positive or every exponent is negative
    /// (the empty word counts as homogeneous).
    pub fn is_sign_homogeneous(&self) -> bool {
        self.syllables.iter().all(|s| s.exponent.is_positive())
            || self.syllables.iter().all(|s| s.exponent.is_negative())
    }

    /// Concatenation followed by run merging.
    pub fn concat(&self, other: &GenWord) -> GenWord {
        GenWord::from_syllables(
            self.syllables
                .iter()
                .chain(other.syllables.iter())
                .map(|s| (s.letter, s.exponent.clone())),
        )
    }

    /// The group inverse: syllables reversed with negated exponents.
    pub fn inverse(&self) -> GenWord {
        GenWord::from_syllables(
            self.syllables
                .iter()
                .rev()
                .map(|s| (s.letter, -s.exponent.clone())),
        )
    }

    /// Evaluates the word to its matrix, left to right; the empty word maps
    /// to the identity.
    pub fn to_matrix(&self) -> Psl2Elem {
        self.syllables
            .iter()
            .fold(Psl2Elem::identity(), |acc, syl| acc.compose(&syl.matrix()))
    }
}

impl fmt::Display for GenWord {
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

/// An element of `PSL(2,Z)`: a determinant-one integer matrix up to global
/// sign.
///
/// The stored representative is canonical — the first nonzero entry in the
/// order `(a, b, c, d)` is positive — so derived equality and hashing decide
/// equality in the group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Psl2Elem {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Psl2Elem {
    /// Canonicalizes the representative `(a b; c d)`; fails unless the
    /// determinant is one.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self, Psl2zError> {
        let (a, b, c, d) = (a.into(), b.into(), c.into(), d.into());
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Psl2zError::NotUnimodular(format!("({a} {b}; {c} {d})")));
        }
        Ok(Psl2Elem { a, b, c, d }.canonicalized())
    }

    fn canonicalized(self) -> Self {
        let Psl2Elem { a, b, c, d } = self;
        let leading_negative = [&a, &b, &c, &d]
            .into_iter()
            .find(|v| !v.is_zero())
            .map(|v| v.is_negative())
            .unwrap_or(false);
        if leading_negative {
            Psl2Elem {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            Psl2Elem { a, b, c, d }
        }
    }

    /// The identity `E`.
    pub fn identity() -> Self {
        Psl2Elem::new(1, 0, 0, 1).expect("identity")
    }

    /// The generator `A = (1 1; 0 1)`.
    pub fn gen_a() -> Self {
        Psl2Elem::new(1, 1, 0, 1).expect("generator A")
    }

    /// The generator `B = (1 0; 1 1)`.
    pub fn gen_b() -> Self {
        Psl2Elem::new(1, 0, 1, 1).expect("generator B")
    }

    /// The involution `S = A B^-1 A = (0 1; -1 0)`; `S^2 = E` and
    /// `S^-1 = S`.
    pub fn s() -> Self {
        Psl2Elem::new(0, 1, -1, 0).expect("involution S")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == Psl2Elem::identity()
    }

    /// Matrix product `self * other`, canonicalized.
    pub fn compose(&self, other: &Psl2Elem) -> Psl2Elem {
        Psl2Elem {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
        .canonicalized()
    }

    /// The group inverse, via the adjugate `(d -b; -c a)`.
    pub fn inverse(&self) -> Psl2Elem {
        Psl2Elem {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
        .canonicalized()
    }

    /// The projective action on `(p : q)`, including the point at infinity;
    /// total, no division involved.
    pub fn act(&self, v: &ProjRat) -> ProjRat {
        let p = v.numer();
        let q = v.denom();
        ProjRat::new(&self.a * p + &self.b * q, &self.c * p + &self.d * q)
            .expect("unimodular action never annihilates a projective point")
    }

    /// Returns `Some(k)` when the element is `B^k` (the stabilizer of the
    /// projective point `0`), including `k = 0` for the identity.
    pub fn as_b_power(&self) -> Option<BigInt> {
        if self.a.is_one() && self.b.is_zero() && self.d.is_one() {
            Some(self.c.clone())
        } else {
            None
        }
    }

    fn is_nonnegative(&self) -> bool {
        !self.a.is_negative()
            && !self.b.is_negative()
            && !self.c.is_negative()
            && !self.d.is_negative()
    }

    /// Sign pattern of the inverse of a nonnegative matrix: `(+ -; - +)`
    /// with zeros allowed.
    fn is_antidiagonal_nonpositive(&self) -> bool {
        !self.a.is_negative()
            && !self.b.is_positive()
            && !self.c.is_positive()
            && !self.d.is_negative()
    }

    /// Splits the element as `V * T` with `V` the identity or `S` and `T`
    /// sign-homogeneous.
    ///
    /// Exactly one of the four cases below applies: the element or its
    /// product with `S` is either entrywise nonnegative (then `T` is a
    /// positive word, peeled off by the Euclidean algorithm on rows and
    /// columns) or carries the sign pattern of an inverted nonnegative
    /// matrix (then `T` is a negative word).
    pub fn vt_normal_form(&self) -> VtForm {
        let candidates = [
            (VPart::E, self.clone()),
            // S is its own inverse, so S * self is the T-part candidate.
            (VPart::S, Psl2Elem::s().compose(self)),
        ];
        for (v, rest) in candidates {
            if rest.is_nonnegative() {
                return VtForm {
                    v,
                    t: decompose_nonnegative(rest),
                };
            }
            if rest.is_antidiagonal_nonpositive() {
                return VtForm {
                    v,
                    t: decompose_nonnegative(rest.inverse()).inverse(),
                };
            }
        }
        unreachable!("every PSL(2,Z) element admits a VT factorization: {self}");
    }

    /// The canonical word evaluating to this element, shaped as
    /// `W * B^k` where `W` realizes the second column as a continued
    /// fraction and `k` matches the first column.
    pub fn to_word(&self) -> GenWord {
        let head = if self.d.is_zero() {
            // Second column is the point at infinity.
            GenWord::from_syllables([(Letter::B, BigInt::from(-1)), (Letter::A, BigInt::one())])
        } else {
            let column = ProjRat::new(self.b.clone(), self.d.clone())
                .expect("second column of a unimodular matrix is nonzero");
            column
                .odd_cf()
                .expect("finite fraction has a continued fraction")
                .to_word()
        };
        let residue = head.to_matrix().inverse().compose(self);
        let k = residue
            .as_b_power()
            .expect("word for the second column matches up to a right B power");
        head.concat(&GenWord::syllable(Letter::B, k))
    }
}

impl fmt::Display for Psl2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// Peels a nonnegative determinant-one matrix into its unique positive word:
/// while the top row dominates, divide out `A`-runs; while the bottom row
/// dominates, divide out `B`-runs.
fn decompose_nonnegative(mut m: Psl2Elem) -> GenWord {
    let mut syllables: Vec<(Letter, BigInt)> = Vec::new();
    while !m.is_identity() {
        let top_dominates = m.a >= m.c && m.b >= m.d;
        if top_dominates {
            let k = run_length(&m.a, &m.c, &m.b, &m.d);
            m = Psl2Elem {
                a: &m.a - &k * &m.c,
                b: &m.b - &k * &m.d,
                c: m.c,
                d: m.d,
            };
            syllables.push((Letter::A, k));
        } else {
            let k = run_length(&m.c, &m.a, &m.d, &m.b);
            debug_assert!(m.c >= m.a && m.d >= m.b);
            m = Psl2Elem {
                c: &m.c - &k * &m.a,
                d: &m.d - &k * &m.b,
                a: m.a,
                b: m.b,
            };
            syllables.push((Letter::B, k));
        }
    }
    GenWord::from_syllables(syllables)
}

/// Largest `k` with `x1 - k*y1 >= 0` and `x2 - k*y2 >= 0`, for a dominated
/// pair with at least one positive divisor.
fn run_length(x1: &BigInt, y1: &BigInt, x2: &BigInt, y2: &BigInt) -> BigInt {
    let q1 = (y1.is_positive()).then(|| x1 / y1);
    let q2 = (y2.is_positive()).then(|| x2 / y2);
    match (q1, q2) {
        (Some(q1), Some(q2)) => q1.min(q2),
        (Some(q), None) | (None, Some(q)) => q,
        (None, None) => unreachable!("dominated row of a non-identity matrix is nonzero"),
    }
}

/// The head factor of a [`VtForm`]: identity or the involution `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VPart {
    E,
    S,
}

impl VPart {
    pub fn matrix(&self) -> Psl2Elem {
        match self {
            VPart::E => Psl2Elem::identity(),
            VPart::S => Psl2Elem::s(),
        }
    }
}

/// Factorization `V * T` of a group element with `V` in `{E, S}` and `T`
/// sign-homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VtForm {
    v: VPart,
    t: GenWord,
}

impl VtForm {
    pub fn v(&self) -> VPart {
        self.v
    }

    pub fn t(&self) -> &GenWord {
        &self.t
    }

    /// Reassembles the factored element.
    pub fn to_matrix(&self) -> Psl2Elem {
        self.v.matrix().compose(&self.t.to_matrix())
    }
}
