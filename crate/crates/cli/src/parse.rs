//! Parsers for the command-line surface syntax.
//!
//! Tangle expressions are whitespace-separated move tokens written leftmost
//! applied last — `X1+ .. X4-`, `A`, `B`, `R`, with optional caret exponents
//! on `A`/`B` — followed by an optional base token `G=` or `G||` (default
//! `G=`). Braid words use `s1`, `s2` with optional caret exponents, or the
//! sole token `E` for the identity. Fractions are `p/q`, a plain integer,
//! or `inf`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use tanglekit_core::{Base, BraidGen, BraidWord, Move, ProjRat, TangleExpr, TwistSign, XMove};

/// Why a token was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseReason {
    EmptyInput,
    UnknownToken,
    ZeroExponent,
    BadExponent,
    MisplacedBase,
    InvalidFraction,
}

impl fmt::Display for ParseReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ParseReason::EmptyInput => "empty input",
            ParseReason::UnknownToken => "unknown token",
            ParseReason::ZeroExponent => "zero exponent",
            ParseReason::BadExponent => "malformed exponent",
            ParseReason::MisplacedBase => "base token must come last",
            ParseReason::InvalidFraction => "expected p/q, an integer, or inf",
        };
        write!(f, "{text}")
    }
}

/// A rejected token, with its 1-based position in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("token {index} `{token}`: {reason}")]
pub struct ParseError {
    pub index: usize,
    pub token: String,
    pub reason: ParseReason,
}

impl ParseError {
    fn new(index: usize, token: &str, reason: ParseReason) -> Self {
        ParseError {
            index,
            token: token.to_string(),
            reason,
        }
    }

    fn empty() -> Self {
        ParseError {
            index: 1,
            token: String::new(),
            reason: ParseReason::EmptyInput,
        }
    }
}

/// Splits `A^-2`-style tokens into the bare head and its exponent.
fn split_exponent(index: usize, token: &str) -> Result<(&str, BigInt), ParseError> {
    match token.split_once('^') {
        None => Ok((token, BigInt::from(1))),
        Some((head, exp)) => {
            let exponent: BigInt = exp
                .parse()
                .map_err(|_| ParseError::new(index, token, ParseReason::BadExponent))?;
            if exponent.is_zero() {
                return Err(ParseError::new(index, token, ParseReason::ZeroExponent));
            }
            Ok((head, exponent))
        }
    }
}

fn parse_twist(token: &str) -> Option<XMove> {
    let rest = token.strip_prefix('X')?;
    let mut chars = rest.chars();
    let index = chars.next()?.to_digit(10)? as u8;
    let sign = match chars.next()? {
        '+' => TwistSign::Positive,
        '-' => TwistSign::Negative,
        _ => return None,
    };
    if chars.next().is_some() {
        return None;
    }
    XMove::new(index, sign).ok()
}

/// Parses a tangle expression.
pub fn parse_tangle(input: &str) -> Result<TangleExpr, ParseError> {
    let tokens: Vec<&str> = input.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(ParseError::empty());
    }
    let mut base = Base::Zero;
    let mut moves = Vec::new();
    let last = tokens.len() - 1;
    for (i, token) in tokens.iter().enumerate() {
        let index = i + 1;
        match *token {
            "G=" | "G||" => {
                if i != last {
                    return Err(ParseError::new(index, token, ParseReason::MisplacedBase));
                }
                base = if *token == "G=" {
                    Base::Zero
                } else {
                    Base::Infinity
                };
            }
            "R" => moves.push(Move::HalfTurn),
            _ => {
                if let Some(twist) = parse_twist(token) {
                    moves.push(Move::Twist(twist));
                    continue;
                }
                let (head, exponent) = split_exponent(index, token)?;
                match head {
                    "A" => moves.push(Move::APower(exponent)),
                    "B" => moves.push(Move::BPower(exponent)),
                    _ => {
                        return Err(ParseError::new(index, token, ParseReason::UnknownToken));
                    }
                }
            }
        }
    }
    Ok(TangleExpr::new(base, moves).expect("token exponents are validated nonzero"))
}

/// Parses a braid word over `s1`, `s2`; the sole token `E` is the identity.
pub fn parse_braid(input: &str) -> Result<BraidWord, ParseError> {
    let tokens: Vec<&str> = input.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(ParseError::empty());
    }
    if tokens == ["E"] {
        return Ok(BraidWord::identity());
    }
    let mut syllables = Vec::new();
    for (i, token) in tokens.iter().enumerate() {
        let index = i + 1;
        let (head, exponent) = split_exponent(index, token)?;
        let generator = match head {
            "s1" => BraidGen::Sigma1,
            "s2" => BraidGen::Sigma2,
            _ => return Err(ParseError::new(index, token, ParseReason::UnknownToken)),
        };
        syllables.push((generator, exponent));
    }
    Ok(BraidWord::from_syllables(syllables))
}

/// Parses `p/q`, a plain integer, or `inf`.
pub fn parse_fraction(input: &str) -> Result<ProjRat, ParseError> {
    let token = input.trim();
    if token.is_empty() {
        return Err(ParseError::empty());
    }
    let invalid = || ParseError::new(1, token, ParseReason::InvalidFraction);
    if token == "inf" {
        return Ok(ProjRat::infinity());
    }
    match token.split_once('/') {
        Some((num, den)) => {
            let p: BigInt = num.parse().map_err(|_| invalid())?;
            let q: BigInt = den.parse().map_err(|_| invalid())?;
            ProjRat::new(p, q).map_err(|_| invalid())
        }
        None => {
            let n: BigInt = token.parse().map_err(|_| invalid())?;
            Ok(ProjRat::from_integer(n))
        }
    }
}
