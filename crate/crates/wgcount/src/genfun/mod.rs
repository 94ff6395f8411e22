//! Series-to-rational-function reconstruction, canonical generating-function
//! form, quasi-polynomial extraction, and the structural-theorem verifier.

mod quasi;
mod verify;

pub use quasi::{eval_quasi, quasi_from_gf, QuasiPolynomial};
pub use verify::{h_vector, verify_graph, Check, HVector, VerifyReport};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{render_poly, PolyFraction, Polynomial};
use crate::counting;
use crate::graph::Graph;
use crate::{Error, Result};

/// A counting generating function in canonical form:
/// `numerator / ((1-x)^exp_one (1+x)^exp_minus)` with integer numerator
/// coefficients, `numerator(0) = 1`, `numerator(1) != 0`, and
/// `numerator(-1) != 0` whenever `exp_minus > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGf {
    numerator: Polynomial,
    exp_one: usize,
    exp_minus: usize,
}

impl RationalGf {
    /// Builds the canonical form, cancelling `(1-x)` and `(1+x)` factors out
    /// of the numerator while the matching exponent is positive.
    pub fn new(mut numerator: Polynomial, mut exp_one: usize, mut exp_minus: usize) -> Result<Self> {
        let one_minus_x = Polynomial::from_integers(&[1, -1]);
        let one_plus_x = Polynomial::from_integers(&[1, 1]);
        let at = |p: &Polynomial, x: i64| p.eval_int(x);
        while exp_one > 0 && at(&numerator, 1).is_zero() && !numerator.is_zero() {
            numerator = numerator.exact_div(&one_minus_x)?;
            exp_one -= 1;
        }
        while exp_minus > 0 && at(&numerator, -1).is_zero() && !numerator.is_zero() {
            numerator = numerator.exact_div(&one_plus_x)?;
            exp_minus -= 1;
        }
        if numerator.integer_coeffs().is_none() {
            return Err(Error::Verification(format!(
                "canonical numerator has non-integer coefficients: {numerator}"
            )));
        }
        Ok(RationalGf {
            numerator,
            exp_one,
            exp_minus,
        })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn exp_one(&self) -> usize {
        self.exp_one
    }

    pub fn exp_minus(&self) -> usize {
        self.exp_minus
    }

    /// `(1-x)^a (1+x)^b` expanded.
    pub fn denominator_poly(&self) -> Polynomial {
        let a = Polynomial::from_integers(&[1, -1]).pow(self.exp_one);
        let b = Polynomial::from_integers(&[1, 1]).pow(self.exp_minus);
        &a * &b
    }

    pub fn as_fraction(&self) -> PolyFraction {
        PolyFraction::new(self.numerator.clone(), self.denominator_poly())
    }

    /// Power-series coefficients; integral for every counting GF.
    pub fn series(&self, len: usize) -> Vec<BigInt> {
        self.as_fraction()
            .series(len)
            .into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }

    /// Canonical rendering, e.g. `(1 + 2*x + x^2)/((1 - x)^5)`.
    pub fn render_canonical(&self) -> String {
        format!(
            "{}/({})",
            wrap_numerator(&self.numerator),
            render_denominator(&[("1 - x", self.exp_one), ("1 + x", self.exp_minus)])
        )
    }

    /// Paper-style rendering over `(1-x)^{a-b} (1-x^2)^b`, e.g.
    /// `(1 + 7*x + ... + x^6)/((1 - x)^3*(1 - x^2)^3)`.
    pub fn render_paper(&self) -> String {
        assert!(
            self.exp_one >= self.exp_minus,
            "pole order at 1 below the (1+x) multiplicity"
        );
        format!(
            "{}/({})",
            wrap_numerator(&self.numerator),
            render_denominator(&[
                ("1 - x", self.exp_one - self.exp_minus),
                ("1 - x^2", self.exp_minus),
            ])
        )
    }
}

fn wrap_numerator(p: &Polynomial) -> String {
    let s = render_poly(p, "x");
    if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 || s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

fn render_denominator(factors: &[(&str, usize)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|&&(_, e)| e > 0)
        .map(|&(f, e)| {
            if e == 1 {
                format!("({f})")
            } else {
                format!("({f})^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_canonical())
    }
}

/// Recovers the numerator of `Σ series_n x^n` against a hypothesized
/// denominator: multiplies the truncated series by the denominator and
/// demands that every coefficient beyond `max_num_degree` vanish. The extra
/// trailing coefficients are the guard that certifies the hypothesis.
pub fn reconstruct(
    series: &[BigInt],
    denominator: &Polynomial,
    max_num_degree: usize,
) -> Result<Polynomial> {
    if series.len() < max_num_degree + 3 {
        return Err(Error::InvalidArgument(format!(
            "need at least {} series terms for numerator degree {}, got {}",
            max_num_degree + 3,
            max_num_degree,
            series.len()
        )));
    }
    let den_deg = denominator.degree().unwrap_or(0);
    let mut product = Vec::with_capacity(series.len());
    for k in 0..series.len() {
        let mut acc = BigRational::zero();
        for j in 0..=den_deg.min(k) {
            let c = denominator.coeff(j);
            if !c.is_zero() {
                acc += c * BigRational::from_integer(series[k - j].clone());
            }
        }
        product.push(acc);
    }
    for (idx, c) in product.iter().enumerate().skip(max_num_degree + 1) {
        if !c.is_zero() {
            return Err(Error::Reconstruction(format!(
                "guard coefficient at x^{idx} is {c}, not zero: insufficient terms \
                 or wrong denominator hypothesis"
            )));
        }
    }
    product.truncate(max_num_degree + 1);
    Ok(Polynomial::from_coeffs(product))
}

/// Reconstructs the canonical GF of a count series for a graph on `m`
/// vertices, using the universal denominator hypothesis `(1-x^2)^{m+1}`
/// (numerator degree at most `2m+1`), then cancels down to canonical form.
/// The series must have at least `2m+4` terms.
pub fn canonical_from_series(series: &[BigInt], m: usize) -> Result<RationalGf> {
    let hypothesis = Polynomial::from_integers(&[1, 0, -1]).pow(m + 1);
    let num = reconstruct(series, &hypothesis, 2 * m + 1)?;
    let gf = RationalGf::new(num, m + 1, m + 1)?;
    if gf.exp_one() != m + 1 {
        return Err(Error::Verification(format!(
            "pole order at x=1 is {}, expected m+1 = {}",
            gf.exp_one(),
            m + 1
        )));
    }
    Ok(gf)
}

/// `ρ(G) = Σ_n WG(n) x^n` in canonical form, via a count series of length
/// `2m+4` from the counting engines.
pub fn rho(g: &Graph) -> Result<RationalGf> {
    rho_with(g, counting::Method::Auto, counting::EngineLimits::default())
}

/// `rho` with an explicit engine choice and cost ceilings.
pub fn rho_with(
    g: &Graph,
    method: counting::Method,
    limits: counting::EngineLimits,
) -> Result<RationalGf> {
    let m = g.vertex_count();
    let series = counting::series_with(g, 2 * m + 4, method, limits)?;
    canonical_from_series(&series, m)
}
