use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Polynomial;

/// Memoized table of Eulerian numbers `A(t, k)`, the number of
/// t-permutations with `k - 1` descents. Rows are extended on demand;
/// instantiate per thread when sharing.
#[derive(Clone, Debug, Default)]
pub struct EulerianTable {
    /// `rows[t - 1][k - 1] = A(t, k)` for `1 <= k <= t`.
    rows: Vec<Vec<BigInt>>,
}

impl EulerianTable {
    pub fn new() -> Self {
        EulerianTable::default()
    }

    fn ensure(&mut self, t: usize) {
        while self.rows.len() < t {
            let prev_t = self.rows.len();
            let t_new = prev_t + 1;
            let row = if t_new == 1 {
                vec![BigInt::one()]
            } else {
                let prev = &self.rows[prev_t - 1];
                // A(t,k) = k*A(t-1,k) + (t-k+1)*A(t-1,k-1)
                (1..=t_new)
                    .map(|k| {
                        let mut v = BigInt::zero();
                        if k <= prev.len() {
                            v += BigInt::from(k) * &prev[k - 1];
                        }
                        if k >= 2 {
                            v += BigInt::from(t_new - k + 1) * &prev[k - 2];
                        }
                        v
                    })
                    .collect()
            };
            self.rows.push(row);
        }
    }

    /// `A(t, k)`; zero outside `1 <= k <= t`. Requires `t >= 1`.
    pub fn number(&mut self, t: usize, k: i64) -> BigInt {
        assert!(t >= 1, "Eulerian numbers need t >= 1");
        if k < 1 || k > t as i64 {
            return BigInt::zero();
        }
        self.ensure(t);
        self.rows[t - 1][k as usize - 1].clone()
    }

    /// Row `A(t, 1..=t)`.
    pub fn row(&mut self, t: usize) -> &[BigInt] {
        assert!(t >= 1);
        self.ensure(t);
        &self.rows[t - 1]
    }
}

/// `A(t, k)` computed through a fresh table; fine for the small `t` used
/// everywhere in the crate.
pub fn eulerian_number(t: usize, k: i64) -> BigInt {
    EulerianTable::new().number(t, k)
}

/// The Eulerian polynomial `A_t(x) = Σ_{k=1}^t A(t,k) x^k` (with `A_0 = 1`),
/// or its shifted form `Ā_t(x) = A_t(x)/x` of degree `t - 1` with constant
/// term 1 (`Ā_0 = 1`).
pub fn eulerian_poly(t: usize, shifted: bool) -> Polynomial {
    if t == 0 {
        return Polynomial::one();
    }
    let mut table = EulerianTable::new();
    let row = table.row(t).to_vec();
    if shifted {
        Polynomial::from_bigints(&row)
    } else {
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(row);
        Polynomial::from_bigints(&coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, factorial, int, Polynomial};

    #[test]
    fn small_values() {
        assert_eq!(eulerian_number(3, 2), int(4));
        assert_eq!(eulerian_number(4, 2), int(11));
        for t in 1..=6 {
            assert_eq!(eulerian_number(t, 1), int(1));
        }
        assert_eq!(eulerian_number(3, 0), int(0));
        assert_eq!(eulerian_number(3, 4), int(0));
    }

    #[test]
    fn polynomials() {
        assert_eq!(eulerian_poly(3, true), Polynomial::from_integers(&[1, 4, 1]));
        assert_eq!(eulerian_poly(1, false), Polynomial::x());
        assert_eq!(
            eulerian_poly(4, true),
            Polynomial::from_integers(&[1, 11, 11, 1])
        );
        assert_eq!(eulerian_poly(0, false), Polynomial::one());
    }

    #[test]
    fn symmetry_and_row_sums() {
        let mut table = EulerianTable::new();
        for t in 1..=10 {
            let row = table.row(t).to_vec();
            let sum: num_bigint::BigInt = row.iter().sum();
            assert_eq!(sum, factorial(t as u64));
            for k in 1..=t {
                assert_eq!(row[k - 1], row[t - k], "A({t},{k}) != A({t},{})", t + 1 - k);
            }
        }
    }

    #[test]
    fn worpitzky_identity() {
        // (n+1)^t = Σ_k A(t,k) C(n+k, t)
        let mut table = EulerianTable::new();
        for t in 1..=10i64 {
            let row = table.row(t as usize).to_vec();
            for n in 0..=10i64 {
                let sum: BigInt = (1..=t)
                    .map(|k| &row[k as usize - 1] * binomial(n + k, t).unwrap())
                    .sum();
                assert_eq!(sum, int(n + 1).pow(t as u32), "t={t}, n={n}");
            }
        }
    }

    #[test]
    fn derivative_recurrence() {
        // A_t(x) = t x A_{t-1}(x) + x(1-x) A_{t-1}'(x)
        for t in 1..=10usize {
            let prev = eulerian_poly(t - 1, false);
            let rhs = &(&Polynomial::x() * &prev).scale(&crate::algebra::rat(t as i64))
                + &(&(&Polynomial::x() * &Polynomial::from_integers(&[1, -1]))
                    * &prev.derivative());
            assert_eq!(eulerian_poly(t, false), rhs, "recurrence fails at t={t}");
        }
    }

    #[test]
    fn stirling_expansion() {
        // A_t(x) = Σ_{k=1}^t k! S(t,k) x^k (1-x)^{t-k}
        // (Stirling numbers of the second kind by their recurrence)
        let mut stirling = vec![vec![int(1)]];
        for t in 1..=10usize {
            let prev = &stirling[t - 1];
            let row: Vec<BigInt> = (0..=t)
                .map(|k| {
                    let mut v = int(0);
                    if k >= 1 {
                        v += &prev[k - 1];
                        if k < t {
                            v += int(k as i64) * &prev[k];
                        }
                    }
                    v
                })
                .collect();
            stirling.push(row);
        }
        for t in 1..=10usize {
            let mut rhs = Polynomial::zero();
            for k in 1..=t {
                let coeff = factorial(k as u64) * &stirling[t][k];
                let term = &Polynomial::monomial(num_rational::BigRational::from_integer(coeff), k)
                    * &Polynomial::from_integers(&[1, -1]).pow(t - k);
                rhs = &rhs + &term;
            }
            assert_eq!(eulerian_poly(t, false), rhs, "expansion fails at t={t}");
        }
    }

    #[test]
    fn explicit_sum_matches_recurrence() {
        // A(t,k) = Σ_{i=0}^k (-1)^i C(t+1,i) (k-i)^t
        let mut table = EulerianTable::new();
        for t in 1..=10i64 {
            for k in 1..=t {
                let mut acc = int(0);
                for i in 0..=k {
                    let term = binomial(t + 1, i).unwrap() * int(k - i).pow(t as u32);
                    if i % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                assert_eq!(acc, table.number(t as usize, k));
            }
        }
    }
}
