use num_bigint::BigUint;
use num_traits::One;

pub(crate) fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `0!, 1!, ..., n!`
pub(crate) fn factorials(n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigUint::one();
    out.push(acc.clone());
    for k in 1..=n {
        acc *= k;
        out.push(acc.clone());
    }
    out
}
