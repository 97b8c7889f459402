//! Arbitrary-precision rational values and their `num/den` wire format.
//!
//! Every quantity the engine produces is a [`Rational`]; values are kept in
//! lowest terms with a positive denominator by construction, and integers are
//! rendered without a `/1` suffix.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number. All arithmetic keeps values reduced.
pub type Rational = num::BigRational;

/// Render as `num/den`, or just `num` when the value is an integer.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parse `num/den` or a bare integer. The result is reduced and its
/// denominator made positive, so non-canonical inputs like `2/4` are accepted.
pub fn parse_rational(input: &str) -> Result<Rational, Error> {
    let malformed = |reason: &str| Error::MalformedRational {
        input: input.to_owned(),
        reason: reason.to_owned(),
    };
    let mut pieces = input.trim().split('/');
    let numer = pieces
        .next()
        .filter(|s| !s.is_empty())
        .ok_or_else(|| malformed("empty"))?
        .parse::<BigInt>()
        .map_err(|e| malformed(&format!("bad numerator: {e}")))?;
    let denom = match pieces.next() {
        None => BigInt::one(),
        Some(d) => d
            .parse::<BigInt>()
            .map_err(|e| malformed(&format!("bad denominator: {e}")))?,
    };
    if pieces.next().is_some() {
        return Err(malformed("more than one '/'"));
    }
    if denom.is_zero() {
        return Err(malformed("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

pub fn is_integral(value: &Rational) -> bool {
    value.denom().is_one()
}

/// Bits needed for the larger of numerator and denominator magnitudes.
pub fn bit_length(value: &Rational) -> u64 {
    value.numer().abs().bits().max(value.denom().bits())
}

/// `base^exp` by repeated multiplication; exponents here are tiny
/// (partition multiplicities), so no fast exponentiation is needed.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}
