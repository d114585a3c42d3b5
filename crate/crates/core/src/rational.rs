//! Exact rationals and their `"num/den"` wire format.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// Always `num/den`, even when the denominator is 1.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `num/den` or a bare integer.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::Malformed(format!("invalid rational `{s}`"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn from_ratio(num: &BigUint, den: &BigUint) -> Rational {
    Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

pub fn from_u64(num: u64, den: u64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
