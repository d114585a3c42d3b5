use crate::error::{Error, Result};
use crate::math::factorial;
use crate::profile::Profile;
use crate::rational::{self, Rational};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::exact::rsd_exact_memo;

/// Whether `a`'s RSD probability is at least `q`, for `0 < q < 1`. Answered by
/// exact computation.
pub fn probability_at_least(profile: &Profile, a: usize, q: &Rational) -> Result<bool> {
    if *q <= Rational::zero() || *q >= Rational::one() {
        return Err(Error::ThresholdOutOfRange(rational::format(q)));
    }
    profile.check_alternative(a)?;
    Ok(rsd_exact_memo(profile).probability(a) >= q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSearch {
    pub value: Rational,
    pub queries: usize,
}

/// `ceil(log2(n! + 1))`, the query budget for [`binary_search_probability`].
pub fn max_queries(n: usize) -> usize {
    factorial(n).bits() as usize
}

/// Recovers a probability known to be `c/n!` for an integer `0 <= c <= n!`
/// from a threshold oracle answering "is it at least `q`?".
///
/// Candidate `c` is tested with the threshold `(2c - 1) / (2 n!)`, which
/// lies strictly inside `(0,1)` and separates `c - 1` from `c`.
pub fn binary_search_probability<F>(n: usize, mut oracle: F) -> Result<ThresholdSearch>
where
    F: FnMut(&Rational) -> Result<bool>,
{
    let total = factorial(n);
    let mut lo = BigUint::zero();
    let mut hi = total.clone();
    let mut queries = 0;
    let two = BigUint::from(2u32);
    while lo < hi {
        let mid = (&lo + &hi + 1u32) / &two;
        let q = Rational::new(
            BigInt::from(&two * &mid - 1u32),
            BigInt::from(&two * &total),
        );
        queries += 1;
        if oracle(&q)? {
            lo = mid;
        } else {
            hi = mid - 1u32;
        }
    }
    Ok(ThresholdSearch {
        value: rational::from_ratio(&lo, &total),
        queries,
    })
}
