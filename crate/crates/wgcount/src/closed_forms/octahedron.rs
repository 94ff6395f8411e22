use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binomial, IntMatrix};

/// The `(n+1) x (n+1)` 0/1 matrix `B(n, m)` with entry 0 iff
/// `max(i + j, max(i, j) + m) > n`, else 1. `B(n, 0)` is the plain transfer
/// matrix.
pub fn octa_matrix(n: u32, m: u32) -> IntMatrix {
    let (n, m) = (n as usize, m as usize);
    IntMatrix::from_fn(n + 1, |i, j| {
        if (i + j).max(i.max(j) + m) > n {
            BigInt::zero()
        } else {
            BigInt::one()
        }
    })
}

/// `WOH(n) = Σ_{m=0}^n (2m+1) trace(B(n,m)^4)`: assignments on the
/// octahedral graph, summed over the max of the two apex weights.
pub fn octa_count(n: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for m in 0..=n {
        acc += BigInt::from(2 * m + 1) * octa_matrix(n, m).pow(4).trace();
    }
    acc
}

/// Closed form for `trace((D(r-1) - S(r-1,m))^4)` where `D` is all-ones and
/// `S(n,m)` marks `i + j > 2n - m`.
pub fn p_trace(r: u32, m: u32) -> BigInt {
    assert!(r >= 1);
    let (r, m) = (r as i64, m as i64);
    let c = |n: i64, k: i64| binomial(n, k).expect("nonnegative lower index");
    BigInt::from(r).pow(4) - BigInt::from(4) * c(m + 1, 2) * BigInt::from(r * r)
        + BigInt::from(4) * (c(m + 1, 3) + c(m + 2, 3)) * BigInt::from(r)
        - BigInt::from(4) * c(m + 2, 4)
        - c(m + 1, 2)
}

/// All-ones minus the anti-corner mask: the matrix whose fourth-power trace
/// `p_trace` computes. Exposed for the cross-check oracle.
pub fn d_minus_s(n: u32, m: u32) -> IntMatrix {
    let (n, m) = (n as i64, m as i64);
    IntMatrix::from_fn(n as usize + 1, |i, j| {
        if (i + j) as i64 > 2 * n - m {
            BigInt::zero()
        } else {
            BigInt::one()
        }
    })
}

/// `WOH(2k)` closed form.
pub fn woh_even(k: u64) -> BigInt {
    let k = BigInt::from(k);
    (&k + 1u32)
        * (BigInt::from(2) * &k * &k + BigInt::from(2) * &k + 1u32)
        * (BigInt::from(12) * &k * &k * &k
            + BigInt::from(30) * &k * &k
            + BigInt::from(27) * &k
            + 10u32)
        / BigInt::from(10)
}

/// `WOH(2k+1)` closed form.
pub fn woh_odd(k: u64) -> BigInt {
    let k = BigInt::from(k);
    (&k + 1u32)
        * (BigInt::from(2) * &k * &k + BigInt::from(6) * &k + 5u32)
        * (BigInt::from(12) * &k * &k * &k
            + BigInt::from(42) * &k * &k
            + BigInt::from(51) * &k
            + 20u32)
        / BigInt::from(10)
}
