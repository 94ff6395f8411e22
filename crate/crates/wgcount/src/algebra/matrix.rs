use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Polynomial;

/// Square matrix of polynomials; holds the characteristic-style matrices
/// `I - xM` whose determinants drive the generating-function machinery.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        assert!(dim >= 1, "PolyMatrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { dim, entries }
    }

    pub fn identity(dim: usize) -> Self {
        PolyMatrix::from_fn(dim, |i, j| {
            if i == j {
                Polynomial::one()
            } else {
                Polynomial::zero()
            }
        })
    }

    /// `I - x*M` for an integer matrix `M`.
    pub fn char_like(m: &IntMatrix) -> Self {
        PolyMatrix::from_fn(m.dim(), |i, j| {
            let mut p = Polynomial::monomial(
                -num_rational::BigRational::from_integer(m.entry(i, j).clone()),
                1,
            );
            if i == j {
                p = &p + &Polynomial::one();
            }
            p
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn set_row(&mut self, i: usize, row: Vec<Polynomial>) {
        assert_eq!(row.len(), self.dim);
        for (j, p) in row.into_iter().enumerate() {
            self.entries[i * self.dim + j] = p;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Every
    /// division along the way is by a previous pivot and is exact, so
    /// integral inputs keep integral intermediates.
    pub fn det(&self) -> Polynomial {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut sign = false;
        let mut prev = Polynomial::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                // pivot search below row k
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = !sign;
                    }
                    None => return Polynomial::zero(),
                }
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&pivot * &a[i * n + j]) - &(&a[i * n + k] * &a[k * n + j]);
                    a[i * n + j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact by construction");
                }
                a[i * n + k] = Polynomial::zero();
            }
            prev = pivot;
        }
        let det = a[(n - 1) * n + (n - 1)].clone();
        if sign {
            -&det
        } else {
            det
        }
    }

    /// Cofactor-expansion determinant; exponential, kept as an independent
    /// oracle for small dimensions.
    pub fn det_cofactor(&self) -> Polynomial {
        if self.dim == 1 {
            return self.entry(0, 0).clone();
        }
        let mut acc = Polynomial::zero();
        for j in 0..self.dim {
            if self.entry(0, j).is_zero() {
                continue;
            }
            let minor = PolyMatrix::from_fn(self.dim - 1, |r, c| {
                let cc = if c < j { c } else { c + 1 };
                self.entry(r + 1, cc).clone()
            });
            let term = &self.entry(0, j).clone() * &minor.det_cofactor();
            if j % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }
}

/// Square matrix of big integers; transfer matrices and their powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        assert!(dim >= 1);
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        IntMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        IntMatrix::from_fn(n, |i, j| {
            let mut acc = BigInt::zero();
            for k in 0..n {
                let a = self.entry(i, k);
                if !a.is_zero() {
                    acc += a * rhs.entry(k, j);
                }
            }
            acc
        })
    }

    /// Repeated multiplication; exponents stay small throughout the crate.
    pub fn pow(&self, e: usize) -> IntMatrix {
        let mut acc = IntMatrix::from_fn(self.dim, |i, j| {
            if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    /// Row vector of ones times the matrix, as a column-indexed vector.
    pub fn apply_to_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.dim {
                    let a = self.entry(i, j);
                    if !a.is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn sum_entries(&self) -> BigInt {
        self.entries.iter().sum()
    }
}
