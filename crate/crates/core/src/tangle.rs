//! Rational-tangle expressions and their classification.
//!
//! A [`TangleExpr`] is a base tangle (the horizontal `G=` or the vertical
//! `G||`) with a sequence of moves written leftmost-applied-last: endpoint
//! twists `X1..X4` with a sign, powers of the two class-changing twists `A`
//! and `B`, and the half-turn `R` about the diagonal through endpoints 1
//! and 3. Every expression reduces to a word in `A`, `B` acting on the
//! horizontal base, and its class is completely determined by one projective
//! rational — the fraction obtained by letting that word act on `0`.
//! Equivalence of expressions is decided through the fraction alone, never
//! by diagram rewriting.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::psl2z::{GenWord, Letter};
use crate::qext::ProjRat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TangleError {
    /// Twist indices run from 1 to 4 around the boundary circle.
    #[error("twist index {0} is out of range 1..=4")]
    InvalidTwistIndex(u8),
    /// `A` and `B` power moves must have nonzero exponents.
    #[error("zero exponent in an A/B power move")]
    ZeroExponent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistSign {
    Positive,
    Negative,
}

impl TwistSign {
    fn unit(self) -> i64 {
        match self {
            TwistSign::Positive => 1,
            TwistSign::Negative => -1,
        }
    }
}

/// A single twist of two adjacent endpoints, `X1..X4` with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XMove {
    index: u8,
    sign: TwistSign,
}

impl XMove {
    pub fn new(index: u8, sign: TwistSign) -> Result<Self, TangleError> {
        if !(1..=4).contains(&index) {
            return Err(TangleError::InvalidTwistIndex(index));
        }
        Ok(XMove { index, sign })
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn sign(&self) -> TwistSign {
        self.sign
    }

    /// Twists at opposite boundary positions are isotopic, so 1 and 3 both
    /// land on `A`, while 2 and 4 land on `B`.
    fn syllable(&self) -> (Letter, BigInt) {
        let letter = match self.index {
            1 | 3 => Letter::A,
            2 | 4 => Letter::B,
            _ => unreachable!("validated on construction"),
        };
        (letter, BigInt::from(self.sign.unit()))
    }
}

impl fmt::Display for XMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            TwistSign::Positive => '+',
            TwistSign::Negative => '-',
        };
        write!(f, "X{}{}", self.index, sign)
    }
}

/// The two trivial tangles, named by their fractions: `Zero` is the
/// horizontal-strand base (`G=`), `Infinity` the vertical one (`G||`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    Zero,
    Infinity,
}

impl Base {
    pub fn token(&self) -> &'static str {
        match self {
            Base::Zero => "G=",
            Base::Infinity => "G||",
        }
    }
}

/// One move in a tangle expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Twist(XMove),
    APower(BigInt),
    BPower(BigInt),
    /// Half-turn about the diagonal fixing endpoints 1 and 3; swaps the two
    /// bases and squares to the identity on classes.
    HalfTurn,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn power(f: &mut fmt::Formatter<'_>, letter: char, e: &BigInt) -> fmt::Result {
            if e.is_one() {
                write!(f, "{letter}")
            } else {
                write!(f, "{letter}^{e}")
            }
        }
        match self {
            Move::Twist(x) => write!(f, "{x}"),
            Move::APower(e) => power(f, 'A', e),
            Move::BPower(e) => power(f, 'B', e),
            Move::HalfTurn => write!(f, "R"),
        }
    }
}

/// A base tangle plus a move sequence, stored in writing order: the first
/// move in the list is applied last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleExpr {
    base: Base,
    moves: Vec<Move>,
}

impl TangleExpr {
    pub fn new(base: Base, moves: impl IntoIterator<Item = Move>) -> Result<Self, TangleError> {
        let moves: Vec<Move> = moves.into_iter().collect();
        for mv in &moves {
            if let Move::APower(e) | Move::BPower(e) = mv {
                if e.is_zero() {
                    return Err(TangleError::ZeroExponent);
                }
            }
        }
        Ok(TangleExpr { base, moves })
    }

    /// The bare base tangle.
    pub fn base_only(base: Base) -> Self {
        TangleExpr {
            base,
            moves: Vec::new(),
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// The same expression with extra moves applied after this one (written
    /// to its left).
    pub fn prefixed(&self, moves: impl IntoIterator<Item = Move>) -> Result<Self, TangleError> {
        TangleExpr::new(
            self.base,
            moves.into_iter().chain(self.moves.iter().cloned()),
        )
    }

    /// Reduces the move sequence to a word `w` with the same class as
    /// `w * G=`: twists map onto `A`/`B` powers, the half-turn expands to
    /// `A B^-1 A`, and a vertical base contributes a trailing `B^-1 A`.
    pub fn to_word(&self) -> GenWord {
        let mut syllables: Vec<(Letter, BigInt)> = Vec::new();
        for mv in &self.moves {
            match mv {
                Move::Twist(x) => syllables.push(x.syllable()),
                Move::APower(e) => syllables.push((Letter::A, e.clone())),
                Move::BPower(e) => syllables.push((Letter::B, e.clone())),
                Move::HalfTurn => {
                    syllables.push((Letter::A, BigInt::one()));
                    syllables.push((Letter::B, -BigInt::one()));
                    syllables.push((Letter::A, BigInt::one()));
                }
            }
        }
        if self.base == Base::Infinity {
            syllables.push((Letter::B, -BigInt::one()));
            syllables.push((Letter::A, BigInt::one()));
        }
        GenWord::from_syllables(syllables)
    }

    /// The classifying fraction: the reduced word acting on `0`.
    pub fn fraction(&self) -> ProjRat {
        self.to_word().to_matrix().act(&ProjRat::zero())
    }

    pub fn class(&self) -> TangleClass {
        TangleClass {
            fraction: self.fraction(),
        }
    }

    /// Two expressions are isotopy equivalent exactly when their fractions
    /// agree.
    pub fn equivalent(&self, other: &TangleExpr) -> bool {
        self.fraction() == other.fraction()
    }

    /// The canonical alternating representative of a fraction: for finite
    /// values, the odd-continued-fraction word on the horizontal base (all
    /// twists share one sign); for infinity, the bare vertical base.
    pub fn from_fraction(v: &ProjRat) -> TangleExpr {
        if v.is_infinity() {
            return TangleExpr::base_only(Base::Infinity);
        }
        let word = v
            .odd_cf()
            .expect("finite fraction has a continued fraction")
            .to_word();
        let moves = word.syllables().iter().map(|syl| match syl.letter {
            Letter::A => Move::APower(syl.exponent.clone()),
            Letter::B => Move::BPower(syl.exponent.clone()),
        });
        TangleExpr::new(Base::Zero, moves).expect("syllable exponents are nonzero")
    }

    /// Whether the word fixes this expression's class, i.e. its matrix fixes
    /// the fraction projectively.
    pub fn is_stabilized_by(&self, w: &GenWord) -> bool {
        let fraction = self.fraction();
        w.to_matrix().act(&fraction) == fraction
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for mv in &self.moves {
            write!(f, "{mv} ")?;
        }
        write!(f, "{}", self.base.token())
    }
}

/// An isotopy class of rational tangles, carried by its fraction; this is a
/// complete invariant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TangleClass {
    fraction: ProjRat,
}

impl TangleClass {
    pub fn fraction(&self) -> &ProjRat {
        &self.fraction
    }
}

impl fmt::Display for TangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fraction)
    }
}
