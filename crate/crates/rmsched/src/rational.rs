//! Exact rational arithmetic helpers.
//!
//! All times, objectives and ratios in this crate are exact rationals so that
//! approximation-ratio assertions are never confounded by floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::Error;

/// Exact rational number used for times, objectives and ratios.
pub type Rat = BigRational;

/// The rational value of an unsigned integer.
pub fn rint(x: u64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// The rational `num / den`. Panics if `den == 0`.
pub fn rfrac(num: u64, den: u64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Whether `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// `r` as `u64` if it is an integer in range.
pub fn to_u64(r: &Rat) -> Option<u64> {
    if is_integer(r) {
        r.numer().to_u64()
    } else {
        None
    }
}

/// `base^exp` for a possibly negative exponent. Panics if `base == 0` and `exp < 0`.
pub fn rpow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        let mut acc = Rat::one();
        for _ in 0..exp {
            acc *= base;
        }
        acc
    } else {
        let mut acc = Rat::one();
        let inv = base.recip();
        for _ in 0..(-exp) {
            acc *= &inv;
        }
        acc
    }
}

/// Smallest integer `>= r`.
pub fn ceil_to_u64(r: &Rat) -> Option<u64> {
    r.ceil().numer().to_u64()
}

/// Parses `"3"` or `"1/4"` as an exact non-negative rational.
pub fn parse_fraction(s: &str) -> Result<Rat, Error> {
    let parse_part = |p: &str| -> Result<u64, Error> {
        p.trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {p:?}")))
    };
    match s.split_once('/') {
        None => Ok(rint(parse_part(s)?)),
        Some((num, den)) => {
            let den = parse_part(den)?;
            if den == 0 {
                return Err(Error::Parse(format!("zero denominator in fraction {s:?}")));
            }
            Ok(rfrac(parse_part(num)?, den))
        }
    }
}

/// Renders a non-negative rational as a decimal with exactly six fractional
/// digits, rounding half away from zero. Used by the CSV report.
pub fn decimal6(r: &Rat) -> String {
    assert!(!r.is_negative(), "decimal6 expects a non-negative rational");
    let scaled = r * Rat::from_integer(BigInt::from(1_000_000u64));
    // round(x) = floor((2x + 1) / 2) for x >= 0
    let rounded = ((scaled * BigInt::from(2)) + Rat::from_integer(BigInt::one())) / BigInt::from(2);
    let q = rounded.floor().numer().clone();
    let int_part = &q / BigInt::from(1_000_000u64);
    let frac_part = &q % BigInt::from(1_000_000u64);
    format!("{int_part}.{frac_part:06}")
}

/// True iff `a / b <= c / d` for non-negative integers with positive `b`, `d`.
pub fn ratio_le(a: u64, b: u64, c: u64, d: u64) -> bool {
    debug_assert!(b > 0 && d > 0);
    (a as u128) * (d as u128) <= (c as u128) * (b as u128)
}
