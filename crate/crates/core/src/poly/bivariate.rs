use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{finish, is_zero_q, power, push_term, UnivariatePolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Dense bivariate polynomial: `coeff(i, j)` multiplies `x^i y^j`, and every
/// stored cell with `i + j > maxdeg` is zero.
#[derive(Clone)]
pub struct BivariatePolynomial {
    maxdeg: usize,
    // (maxdeg + 1)^2 cells, row-major in i
    cells: Vec<BigRational>,
}

impl BivariatePolynomial {
    pub fn zero(maxdeg: usize) -> Self {
        Self {
            maxdeg,
            cells: vec![BigRational::zero(); (maxdeg + 1) * (maxdeg + 1)],
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Self::zero(0);
        p.cells[0] = c;
        p
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn monomial(i: usize, j: usize, c: BigRational) -> Self {
        let mut p = Self::zero(i + j);
        p.set(i, j, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    /// Builds from `(i, j, coefficient)` triples; repeated cells accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, usize, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero(0);
        for (i, j, c) in terms {
            let cur = p.coeff(i, j);
            p.set(i, j, cur + c);
        }
        p
    }

    /// Integer-count grid (as produced by subset enumeration) to polynomial.
    pub fn from_counts(maxdeg: usize, count: impl Fn(usize, usize) -> u64) -> Self {
        let mut p = Self::zero(maxdeg);
        for i in 0..=maxdeg {
            for j in 0..=maxdeg - i {
                let c = count(i, j);
                if c != 0 {
                    p.cells[i * (maxdeg + 1) + j] = BigRational::from_integer(BigInt::from(c));
                }
            }
        }
        p
    }

    /// `p(x)` viewed as a polynomial in `x` alone.
    pub fn from_univariate_x(p: &UnivariatePolynomial) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(d, c)| (d, 0, c.clone())))
    }

    pub fn maxdeg(&self) -> usize {
        self.maxdeg
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.maxdeg + 1) + j
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        if i + j > self.maxdeg {
            BigRational::zero()
        } else {
            self.cells[self.idx(i, j)].clone()
        }
    }

    pub fn coeff_ref(&self, i: usize, j: usize) -> Option<&BigRational> {
        (i + j <= self.maxdeg).then(|| &self.cells[self.idx(i, j)])
    }

    pub fn set(&mut self, i: usize, j: usize, c: BigRational) {
        if i + j > self.maxdeg {
            if c.is_zero() {
                return;
            }
            self.grow(i + j);
        }
        let k = self.idx(i, j);
        self.cells[k] = c;
    }

    fn grow(&mut self, maxdeg: usize) {
        if maxdeg <= self.maxdeg {
            return;
        }
        let mut out = Self::zero(maxdeg);
        for (i, j, c) in self.nonzero() {
            let k = out.idx(i, j);
            out.cells[k] = c.clone();
        }
        *self = out;
    }

    fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> + '_ {
        let d = self.maxdeg;
        (0..=d).flat_map(move |i| (0..=d - i).map(move |j| (i, j))).filter_map(move |(i, j)| {
            let c = &self.cells[self.idx(i, j)];
            (!c.is_zero()).then_some((i, j, c))
        })
    }

    /// Nonzero terms sorted by `(i + j, i)`.
    pub fn terms(&self) -> Vec<(usize, usize, BigRational)> {
        let mut t: Vec<_> = self.nonzero().map(|(i, j, c)| (i, j, c.clone())).collect();
        t.sort_by_key(|&(i, j, _)| (i + j, i));
        t
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(is_zero_q)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.nonzero().map(|(i, j, _)| i + j).max()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let mut out = self.clone();
        for c in &mut out.cells {
            *c = &*c * s;
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let d = self.maxdeg;
        let mut acc = BigRational::zero();
        for i in (0..=d).rev() {
            let mut row = BigRational::zero();
            for j in (0..=d - i).rev() {
                row = row * y + &self.cells[self.idx(i, j)];
            }
            acc = acc * x + row;
        }
        acc
    }

    pub fn partial(&self, var: Var) -> Self {
        let mut out = Self::zero(self.maxdeg.saturating_sub(1));
        for (i, j, c) in self.nonzero() {
            match var {
                Var::X if i > 0 => out.set(i - 1, j, c * BigRational::from_integer(BigInt::from(i))),
                Var::Y if j > 0 => out.set(i, j - 1, c * BigRational::from_integer(BigInt::from(j))),
                _ => {}
            }
        }
        out
    }

    /// `p(x, x)`.
    pub fn diagonal(&self) -> UnivariatePolynomial {
        let mut coeffs = vec![BigRational::zero(); self.maxdeg + 1];
        for (i, j, c) in self.nonzero() {
            coeffs[i + j] += c;
        }
        UnivariatePolynomial::from_coeffs(coeffs)
    }

    /// `p − 1`.
    pub fn tilde(&self) -> Self {
        let mut out = self.clone();
        out.cells[0] -= BigRational::one();
        out
    }

    /// Floating-point evaluator for the integrators.
    pub fn to_float(&self) -> FloatPoly {
        let d = self.degree().unwrap_or(0);
        let mut rows = vec![Vec::new(); d + 1];
        for (i, j, c) in self.nonzero() {
            let row = &mut rows[i];
            if row.len() <= j {
                row.resize(j + 1, 0.0);
            }
            row[j] = c.to_f64().unwrap_or(f64::NAN);
        }
        FloatPoly { rows }
    }

    /// Human-readable form, lowest total degree first and, within a degree,
    /// highest power of `x` first: `1 + 3x^2y + 3xy^2 + y^3`.
    pub fn render(&self) -> String {
        let mut t = self.terms();
        t.sort_by_key(|&(i, j, _)| (i + j, core::cmp::Reverse(i)));
        let mut out = String::new();
        for (i, j, c) in t {
            let mut mono = power("x", i);
            mono.push_str(&power("y", j));
            push_term(&mut out, &c, &mono);
        }
        finish(out)
    }
}

impl PartialEq for BivariatePolynomial {
    fn eq(&self, other: &Self) -> bool {
        let d = self.maxdeg.max(other.maxdeg);
        (0..=d).all(|i| (0..=d - i).all(|j| self.coeff(i, j) == other.coeff(i, j)))
    }
}

impl Eq for BivariatePolynomial {}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePolynomial({})", self.render())
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        out.grow(rhs.maxdeg);
        for (i, j, c) in rhs.nonzero() {
            let k = out.idx(i, j);
            out.cells[k] += c;
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        out.grow(rhs.maxdeg);
        for (i, j, c) in rhs.nonzero() {
            let k = out.idx(i, j);
            out.cells[k] -= c;
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        let mut out = self.clone();
        for c in &mut out.cells {
            *c = -&*c;
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero(self.maxdeg + rhs.maxdeg);
        let right: Vec<_> = rhs.nonzero().collect();
        for (i, j, a) in self.nonzero() {
            for &(k, l, b) in &right {
                let idx = out.idx(i + k, j + l);
                out.cells[idx] += a * b;
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: Self) -> BivariatePolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Row-wise Horner evaluator in `f64`: `Σ_i x^i Σ_j rows[i][j] y^j`.
#[derive(Debug, Clone)]
pub struct FloatPoly {
    rows: Vec<Vec<f64>>,
}

impl FloatPoly {
    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for row in self.rows.iter().rev() {
            let mut r = 0.0;
            for &c in row.iter().rev() {
                r = r * y + c;
            }
            acc = acc * x + r;
        }
        acc
    }
}
