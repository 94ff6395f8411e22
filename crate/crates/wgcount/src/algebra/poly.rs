use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Dense univariate polynomial over exact rationals, coefficients stored in
/// ascending order with no trailing zeros. The zero polynomial has an empty
/// coefficient list and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Polynomial::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Polynomial::from_coeffs(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&super::rat(x))
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `x -> -x`.
    pub fn substitute_neg(&self) -> Polynomial {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    pub fn pow(&self, mut e: usize) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder with respect to a nonzero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let q = rem[k].clone() / lead.clone();
            if !q.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] = rem[idx].clone() - &q * dc;
                }
                quot[k - dd] = q;
            }
            rem.pop();
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Exact division; a nonzero remainder is reported as an error so that
    /// callers can treat it as a violated structural identity rather than a
    /// crash.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::ExactDivision(format!(
                "({}) does not divide ({})",
                divisor, self
            )))
        }
    }

    /// True if the coefficient list reads the same forwards and backwards.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Integer coefficient list, or `None` if any coefficient is non-integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical rendering: ascending powers, explicit `*`, unit coefficients
/// elided, e.g. `1 + 8*x + 8*x^2 + x^3`.
pub(crate) fn render_poly(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                out.push('-');
            }
            first = false;
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let power = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{}*{}", fmt_rational(&mag), power));
        }
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self, "x"))
    }
}

/// A quotient of two polynomials. No implicit reduction is performed;
/// equality is tested by cross multiplication.
#[derive(Clone, Debug)]
pub struct PolyFraction {
    pub num: Polynomial,
    pub den: Polynomial,
}

impl PolyFraction {
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        PolyFraction { num, den }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        PolyFraction::new(p, Polynomial::one())
    }

    /// First `len` power-series coefficients. Requires a denominator with
    /// nonzero constant term.
    pub fn series(&self, len: usize) -> Vec<BigRational> {
        let d0 = self.den.coeff(0);
        assert!(!d0.is_zero(), "denominator has zero constant term");
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                acc -= self.den.coeff(j) * &out[k - j];
            }
            out.push(acc / &d0);
        }
        out
    }

    /// Series coefficient of `x^k`.
    pub fn series_coeff(&self, k: usize) -> BigRational {
        self.series(k + 1).pop().unwrap()
    }

    pub fn substitute_neg(&self) -> PolyFraction {
        PolyFraction::new(self.num.substitute_neg(), self.den.substitute_neg())
    }

    pub fn add_scalar(&self, c: &BigRational) -> PolyFraction {
        let num = &self.num + &self.den.scale(c);
        PolyFraction::new(num, self.den.clone())
    }
}

impl Add for &PolyFraction {
    type Output = PolyFraction;
    fn add(self, rhs: &PolyFraction) -> PolyFraction {
        PolyFraction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &PolyFraction {
    type Output = PolyFraction;
    fn mul(self, rhs: &PolyFraction) -> PolyFraction {
        PolyFraction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl PartialEq for PolyFraction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl fmt::Display for PolyFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn mul_and_exact_div() {
        let one_plus_x = Polynomial::from_integers(&[1, 1]);
        let sq = &one_plus_x * &one_plus_x;
        assert_eq!(sq, Polynomial::from_integers(&[1, 2, 1]));

        let diff = Polynomial::from_integers(&[1, 0, -1]); // 1 - x^2
        let q = diff
            .exact_div(&Polynomial::from_integers(&[1, -1]))
            .unwrap();
        assert_eq!(q, one_plus_x);
    }

    #[test]
    fn exact_div_from_shifted_eulerian() {
        // (x + 4x^2 + x^3) / x = 1 + 4x + x^2
        let p = Polynomial::from_integers(&[0, 1, 4, 1]);
        let q = p.exact_div(&Polynomial::x()).unwrap();
        assert_eq!(q, Polynomial::from_integers(&[1, 4, 1]));
    }

    #[test]
    fn exact_div_nonzero_remainder_errors() {
        let p = Polynomial::from_integers(&[1, 1, 1]);
        assert!(p.exact_div(&Polynomial::from_integers(&[1, -1])).is_err());
    }

    #[test]
    fn zero_polynomial_degree() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::from_integers(&[0, 0]).degree(), None);
        assert_eq!(Polynomial::one().degree(), Some(0));
    }

    #[test]
    fn display_canonical() {
        let p = Polynomial::from_integers(&[1, 8, 8, 1]);
        assert_eq!(p.to_string(), "1 + 8*x + 8*x^2 + x^3");
        let q = Polynomial::from_integers(&[1, -1, -1]);
        assert_eq!(q.to_string(), "1 - x - x^2");
        let r = Polynomial::from_integers(&[0, 1]);
        assert_eq!(r.to_string(), "x");
    }

    #[test]
    fn series_of_geometric() {
        let f = PolyFraction::new(Polynomial::one(), Polynomial::from_integers(&[1, -1]));
        assert_eq!(f.series(4), vec![rat(1), rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn palindromic() {
        assert!(Polynomial::from_integers(&[1, 2, 1]).is_palindromic());
        assert!(!Polynomial::from_integers(&[1, 3, 2]).is_palindromic());
        assert!(Polynomial::zero().is_palindromic());
    }

    #[test]
    fn fraction_equality_cross_multiplied() {
        let a = PolyFraction::new(
            Polynomial::from_integers(&[1, 1]),
            Polynomial::from_integers(&[1, 0, -1]),
        );
        let b = PolyFraction::new(Polynomial::one(), Polynomial::from_integers(&[1, -1]));
        assert_eq!(a, b);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec(-50i64..=50, 0..6)
                .prop_map(|c| Polynomial::from_integers(&c))
        }

        proptest! {
            #[test]
            fn addition_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a + &b, &b + &a);
            }

            #[test]
            fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            }

            #[test]
            fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            }

            #[test]
            fn product_divides_exactly(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
            }

            #[test]
            fn evaluation_is_a_ring_morphism(a in arb_poly(), b in arb_poly(), x in -9i64..=9) {
                prop_assert_eq!((&a * &b).eval_int(x), a.eval_int(x) * b.eval_int(x));
                prop_assert_eq!((&a + &b).eval_int(x), a.eval_int(x) + b.eval_int(x));
            }
        }
    }
}
