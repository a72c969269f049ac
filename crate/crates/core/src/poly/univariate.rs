use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{finish, power, push_term};

/// Polynomial in one variable with exact rational coefficients, lowest degree
/// first. The leading stored coefficient is nonzero (the zero polynomial
/// stores nothing).
#[derive(Clone, PartialEq, Eq)]
pub struct UnivariatePolynomial {
    coeffs: Vec<BigRational>,
}

impl UnivariatePolynomial {
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(d: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(coeffs)
    }

    /// `∏ (t − r)` over the given roots.
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::from_coeffs(vec![-r.clone(), BigRational::one()])
        })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(d, c)| c * BigRational::from_integer(BigInt::from(d)))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&(BigRational::one() / l)),
            None => Self::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let q = &rem[top] / &lead;
            let shift = top - dd;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= &q * c;
            }
            quot[shift] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn render_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                push_term(&mut out, c, &power(var, d));
            }
        }
        finish(out)
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnivariatePolynomial({})", self.render_in("x"))
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_in("x"))
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: Self) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::from_coeffs((0..n).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn sub(self, rhs: Self) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::from_coeffs((0..n).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: Self) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(cs: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn from_roots_expands_product() {
        let q = UnivariatePolynomial::from_roots(&[ratio(1, 2), int(3)]);
        assert_eq!(q.render_in("ρ"), "3/2 - (7/2)ρ + ρ^2");
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2)
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let (q, r) = a.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, &p(&[-1, 1]) * &p(&[2, 1]));
        assert_eq!(a.gcd(&a.derivative()), p(&[-1, 1]));
        let (_, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(r, p(&[2]));
    }

    #[test]
    fn evaluation() {
        let q = p(&[3, 0, -1]);
        assert_eq!(q.evaluate(&int(2)), int(-1));
        assert!((q.eval_f64(0.5) - 2.75).abs() < 1e-15);
        assert_eq!(q.derivative(), p(&[0, -2]));
    }
}
