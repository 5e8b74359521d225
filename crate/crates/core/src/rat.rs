//! Exact rational scalars and their text form.
//!
//! Every coordinate, volume, support value and width in this crate is a
//! [`Rat`]: an arbitrary-precision rational kept in lowest terms with a
//! positive denominator. Floating point is never used.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(Int::from(n), Int::from(d))
}

/// Renders a rational as `"p"` for integers and `"p/q"` otherwise.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRatError(pub String);

/// Parses `"p"` or `"p/q"`. The result is normalized; `q` must be nonzero.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let bad = || ParseRatError(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num: Int = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(d) => {
            let den: Int = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                Err(bad())
            } else {
                Ok(Rat::new(num, den))
            }
        }
    }
}

/// Largest integer `n` with `n <= r`.
pub fn rat_floor(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Smallest integer `n` with `n >= r`.
pub fn rat_ceil(r: &Rat) -> Int {
    r.ceil().to_integer()
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True when `r` is a multiple of 1/2.
pub fn is_half_integer(r: &Rat) -> bool {
    (r * rat(2)).denom().is_one()
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
