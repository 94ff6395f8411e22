use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{rat, render_poly, Polynomial};
use crate::{Error, Result};

use super::RationalGf;

/// A quasi-polynomial of period `N`: one exact rational coefficient vector
/// per residue class, `coeffs[r][i]` multiplying `n^i` when `n ≡ r (mod N)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: usize,
    coeffs: Vec<Vec<BigRational>>,
}

impl QuasiPolynomial {
    pub fn period(&self) -> usize {
        self.period
    }

    /// Largest exponent with a nonzero coefficient in any residue class.
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .flat_map(|c| {
                c.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, _)| i)
            })
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `n^i` in residue class `r`.
    pub fn coeff(&self, r: usize, i: usize) -> BigRational {
        self.coeffs[r].get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn residue_coeffs(&self, r: usize) -> &[BigRational] {
        &self.coeffs[r]
    }

    pub fn render(&self) -> Vec<String> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(r, c)| {
                let poly = render_poly(&Polynomial::from_coeffs(c.clone()), "n");
                if self.period == 1 {
                    poly
                } else {
                    format!("n = {r} (mod {}): {poly}", self.period)
                }
            })
            .collect()
    }
}

/// Exact evaluation at any integer, negative arguments included; the residue
/// class is taken in `{0..N-1}`.
pub fn eval_quasi(qp: &QuasiPolynomial, n: i64) -> BigRational {
    let r = n.rem_euclid(qp.period as i64) as usize;
    let x = rat(n);
    let mut acc = BigRational::zero();
    for c in qp.coeffs[r].iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Extracts the quasi-polynomial of a canonical GF: period 2 exactly when
/// `(1+x)` divides the denominator, degree `exp_one - 1`, coefficients by
/// exact Newton interpolation per residue class, verified on three extra
/// series values each.
pub fn quasi_from_gf(gf: &RationalGf) -> Result<QuasiPolynomial> {
    let period = if gf.exp_minus() > 0 { 2 } else { 1 };
    let degree = gf
        .exp_one()
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidArgument("GF has no pole at x = 1".into()))?;
    let needed = period * (degree + 4);
    let series: Vec<BigRational> = gf
        .series(needed)
        .into_iter()
        .map(BigRational::from_integer)
        .collect();

    let mut coeffs = Vec::with_capacity(period);
    for r in 0..period {
        let points: Vec<(BigRational, BigRational)> = (0..=degree)
            .map(|j| (rat((r + j * period) as i64), series[r + j * period].clone()))
            .collect();
        let poly = newton_interpolate(&points);
        // verification on the next three values in this residue class
        for j in degree + 1..=degree + 3 {
            let n = r + j * period;
            if poly.eval_int(n as i64) != series[n] {
                return Err(Error::Verification(format!(
                    "quasi-polynomial interpolation mismatch at n={n}"
                )));
            }
        }
        let mut c = poly.coeffs().to_vec();
        c.resize(degree + 1, BigRational::zero());
        coeffs.push(c);
    }
    Ok(QuasiPolynomial { period, coeffs })
}

/// Newton divided differences over exact rationals, expanded to monomial
/// coefficients.
fn newton_interpolate(points: &[(BigRational, BigRational)]) -> Polynomial {
    let n = points.len();
    let mut diffs: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut table = vec![diffs.clone()];
    for level in 1..n {
        let prev = &table[level - 1];
        let mut next = Vec::with_capacity(n - level);
        for i in 0..n - level {
            let dx = &points[i + level].0 - &points[i].0;
            next.push((&prev[i + 1] - &prev[i]) / dx);
        }
        table.push(next);
    }
    diffs = (0..n).map(|l| table[l][0].clone()).collect();

    let mut poly = Polynomial::zero();
    let mut basis = Polynomial::one();
    for (i, d) in diffs.iter().enumerate() {
        poly = &poly + &basis.scale(d);
        if i + 1 < n {
            let root = Polynomial::from_coeffs(vec![-points[i].0.clone(), rat(1)]);
            basis = &basis * &root;
        }
    }
    poly
}
