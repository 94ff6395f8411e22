use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{binomial, IntMatrix, PolyFraction, PolyMatrix, Polynomial};
use crate::Result;

/// The `(n+1) x (n+1)` 0/1 transfer matrix with entry 1 iff `i + j <= n`.
/// Symmetric and anti-triangular; its powers count path and cycle
/// assignments.
pub fn transfer_matrix(n: u32) -> IntMatrix {
    let n = n as usize;
    IntMatrix::from_fn(n + 1, |i, j| {
        if i + j <= n {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// `WL_k(n)`: weight assignments on the path with `k` vertices, via
/// `J^t B(n)^{k-1} J` as iterated matrix-vector products.
pub fn path_count(k: usize, n: u32) -> BigInt {
    assert!(k >= 1, "path needs at least one vertex");
    let b = transfer_matrix(n);
    let mut v = vec![BigInt::one(); n as usize + 1];
    for _ in 0..k - 1 {
        v = b.apply_to_vec(&v);
    }
    v.iter().sum()
}

/// `WC_k(n)`: weight assignments on the cycle with `k` vertices;
/// `trace(B(n)^k)` for `k >= 2`, and `n + 1` for the one-vertex cycle.
pub fn cycle_count(k: usize, n: u32) -> BigInt {
    assert!(k >= 1, "cycle needs at least one vertex");
    if k == 1 {
        return BigInt::from(n + 1);
    }
    transfer_matrix(n).pow(k).trace()
}

/// `Q_n(x) = det(I - x B(n))` for `n >= 0`, with the boundary convention
/// `Q_{-1} = Q_{-2} = 1` that makes the numerator formula for `F(n,x)` work
/// at `n = 0` and `n = 1`.
pub fn q_poly(n: i64) -> Polynomial {
    assert!(n >= -2, "q_poly defined for n >= -2");
    if n < 0 {
        return Polynomial::one();
    }
    PolyMatrix::char_like(&transfer_matrix(n as u32)).det()
}

/// The binomial-sum expression for `Q_n(x)`, summed up to `k = n + 1` so the
/// degree matches the determinant. Kept as the cross-check route against
/// `q_poly`.
pub fn q_poly_binomial_sum(n: u32) -> Polynomial {
    let n = n as i64;
    let coeffs: Vec<BigInt> = (0..=n + 1)
        .map(|k| {
            let c = binomial((n + k + 1).div_euclid(2), k)
                .expect("nonnegative lower index");
            if (k + 1).div_euclid(2) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    Polynomial::from_bigints(&coeffs)
}

/// Generating function of entry sums: for an integer matrix `M`, returns
/// `Σ_n s(M^n) x^n = (Σ_i f_i(x)) / det(I - xM)` where `f_i` is the
/// determinant of `I - xM` with row `i` replaced by ones.
pub fn entry_sum_gf(m: &IntMatrix) -> PolyFraction {
    let base = PolyMatrix::char_like(m);
    let den = base.det();
    let ones = vec![Polynomial::one(); m.dim()];
    let mut num = Polynomial::zero();
    for i in 0..m.dim() {
        let mut replaced = base.clone();
        replaced.set_row(i, ones.clone());
        num = &num + &replaced.det();
    }
    PolyFraction::new(num, den)
}

/// `F(n,x) = Σ_k WL_{k+1}(n) x^k` as an exact rational function in the
/// path-length variable. Computed by the entry-sum determinant formula on
/// `B(n)`; the numerator is then asserted equal to
/// `(Q_{n-2} - (1+x) Q_n) / x^2` by exact division, so a mismatch surfaces
/// as an error rather than a wrong value.
pub fn path_gf(n: u32) -> Result<PolyFraction> {
    let gf = entry_sum_gf(&transfer_matrix(n));
    let qn = q_poly(n as i64);
    let qn2 = q_poly(n as i64 - 2);
    let one_plus_x = Polynomial::from_integers(&[1, 1]);
    let expected_num = (&qn2 - &(&one_plus_x * &qn))
        .exact_div(&Polynomial::from_integers(&[0, 0, 1]))?;
    if gf.den != qn || gf.num != expected_num {
        return Err(crate::Error::Verification(format!(
            "path GF numerator identity failed at n={n}: got {}, expected {}",
            gf.num, expected_num
        )));
    }
    Ok(gf)
}

/// `CF(n,x) = Σ_{k>=1} WC_k(n) x^k`, with the one-vertex cycle counted as
/// `n + 1`: `floor((n+1)/2) x - x Q_n'(x) / Q_n(x)`.
pub fn cycle_gf(n: u32) -> PolyFraction {
    let qn = q_poly(n as i64);
    let correction = Polynomial::monomial(
        BigRational::from_integer(BigInt::from((n + 1) / 2)),
        1,
    );
    let num = &(&correction * &qn) - &(&Polynomial::x() * &qn.derivative());
    PolyFraction::new(num, qn)
}
