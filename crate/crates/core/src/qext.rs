//! Projective rationals and odd continued fractions.
//!
//! [`ProjRat`] is the projective line over the rationals: pairs `(p : q)` of
//! integers, not both zero, up to scaling. It carries the value `p/q` when
//! `q != 0` and the point at infinity `(1 : 0)` otherwise. [`OddCf`] is the
//! bridge from finite values to sign-homogeneous generator words: every
//! rational has a unique continued fraction of odd length whose elements all
//! share one sign (the leading element may be zero).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::psl2z::{GenWord, Letter};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QextError {
    /// `(0, 0)` does not name a projective point.
    #[error("(0, 0) is not a projective rational")]
    BothZero,
    /// The point at infinity has no continued fraction expansion.
    #[error("the point at infinity has no continued fraction")]
    InfinityHasNoCf,
    /// The element list violates the odd-continued-fraction shape.
    #[error("invalid odd continued fraction: {0}")]
    InvalidOddCf(String),
}

/// A projective rational `(p : q)`, reduced and sign-canonical: `q > 0`, or
/// `q = 0` and `p = 1` (the point at infinity).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjRat {
    p: BigInt,
    q: BigInt,
}

impl ProjRat {
    /// Reduces `(p, q)` to the canonical representative.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self, QextError> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(QextError::BothZero);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            p = -p;
            q = -q;
        }
        Ok(ProjRat { p, q })
    }

    /// `0 = (0 : 1)`, the fraction of the horizontal base tangle.
    pub fn zero() -> Self {
        ProjRat {
            p: BigInt::zero(),
            q: BigInt::one(),
        }
    }

    /// `(1 : 0)`, the fraction of the vertical base tangle.
    pub fn infinity() -> Self {
        ProjRat {
            p: BigInt::one(),
            q: BigInt::zero(),
        }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ProjRat {
            p: n.into(),
            q: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinity(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero()
    }

    /// The unique odd continued fraction of a finite value; negative values
    /// get the elementwise negation of their absolute expansion.
    pub fn odd_cf(&self) -> Result<OddCf, QextError> {
        if self.is_infinity() {
            return Err(QextError::InfinityHasNoCf);
        }
        if self.p.is_zero() {
            return Ok(OddCf {
                elements: vec![BigInt::zero()],
            });
        }
        let negative = self.p.is_negative();
        let mut elements = Vec::new();
        let mut num = self.p.abs();
        let mut den = self.q.clone();
        while !den.is_zero() {
            let (quot, rem) = num.div_rem(&den);
            elements.push(quot);
            num = den;
            den = rem;
        }
        if elements.len().is_multiple_of(2) {
            // The plain expansion ends with an element >= 2, so splitting a
            // trailing 1 off keeps every element positive.
            let last = elements.last_mut().expect("even length is nonzero");
            *last -= 1;
            elements.push(BigInt::one());
        }
        if negative {
            for e in &mut elements {
                *e = -&*e;
            }
        }
        Ok(OddCf { elements })
    }
}

impl fmt::Display for ProjRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "inf")
        } else if self.q.is_one() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// A continued fraction `[a1; a2, ..., an]` of odd length whose tail
/// elements all share one strict sign; the head may be zero (and `[0]`
/// denotes zero itself).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCf {
    elements: Vec<BigInt>,
}

impl OddCf {
    /// Validates the odd-length and sign-homogeneity invariants.
    pub fn from_elements<E>(elements: impl IntoIterator<Item = E>) -> Result<Self, QextError>
    where
        E: Into<BigInt>,
    {
        let elements: Vec<BigInt> = elements.into_iter().map(Into::into).collect();
        if elements.is_empty() {
            return Err(QextError::InvalidOddCf("empty element list".into()));
        }
        if elements.len().is_multiple_of(2) {
            return Err(QextError::InvalidOddCf(format!(
                "length {} is even",
                elements.len()
            )));
        }
        let tail = &elements[1..];
        let tail_positive = tail.iter().all(|e| e.is_positive());
        let tail_negative = tail.iter().all(|e| e.is_negative());
        if !(tail_positive || tail_negative) {
            return Err(QextError::InvalidOddCf(
                "tail elements must all be strictly positive or all strictly negative".into(),
            ));
        }
        let head = &elements[0];
        let head_ok = head.is_zero()
            || (tail.is_empty())
            || (tail_positive && head.is_positive())
            || (tail_negative && head.is_negative());
        if !head_ok {
            return Err(QextError::InvalidOddCf(
                "head element must share the tail sign or be zero".into(),
            ));
        }
        Ok(OddCf { elements })
    }

    pub fn elements(&self) -> &[BigInt] {
        &self.elements
    }

    /// The alternating word `A^{a1} B^{a2} A^{a3} ... A^{an}`; a zero head
    /// drops its syllable.
    pub fn to_word(&self) -> GenWord {
        GenWord::from_syllables(self.elements.iter().enumerate().map(|(i, e)| {
            let letter = if i % 2 == 0 { Letter::A } else { Letter::B };
            (letter, e.clone())
        }))
    }

    /// Exact evaluation back to a projective rational, through the matrix of
    /// the alternating word acting on `0`.
    pub fn eval(&self) -> ProjRat {
        self.to_word().to_matrix().act(&ProjRat::zero())
    }
}

impl fmt::Display for OddCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}
