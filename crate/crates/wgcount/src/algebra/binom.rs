use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// Generalized binomial coefficient `C(n, k) = n(n-1)...(n-k+1) / k!`,
/// defined for any integer `n` so that quasi-polynomials built from binomials
/// evaluate correctly at negative arguments. `C(n, k) = 0` for `0 <= n < k`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if k < 0 {
        return Err(Error::InvalidArgument(format!(
            "binomial lower index must be nonnegative, got {k}"
        )));
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
    }
    Ok(num / factorial(k as u64))
}

pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}
