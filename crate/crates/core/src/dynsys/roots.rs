use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::UnivariatePolynomial;
use crate::rational::{ratio, signum, to_f64};
use crate::{Error, Result};

/// A positive real root with its isolating enclosure.
#[derive(Debug, Clone, PartialEq)]
pub struct PositiveRoot {
    pub value: f64,
    pub multiplicity: usize,
    /// `lo < root ≤ hi`, or `lo = root = hi` when the root is exact.
    pub enclosure: (BigRational, BigRational),
    pub exact: Option<BigRational>,
}

impl PositiveRoot {
    /// For a radius polynomial in `ρ = r²`, the predicted radius.
    pub fn radius(&self) -> f64 {
        num_traits::Float::sqrt(self.value)
    }
}

/// All real roots in `(0, ∞)`, ascending, refined to `1e-12` relative width.
pub fn positive_roots(p: &UnivariatePolynomial) -> Result<Vec<PositiveRoot>> {
    if p.is_zero() {
        return Err(Error::invalid("positive_roots of the zero polynomial"));
    }
    let mut out = Vec::new();
    for (mult, factor) in square_free_factors(&strip_zero_roots(p)) {
        for (lo, hi) in isolate(&factor) {
            out.push(refine(&factor, lo, hi, mult));
        }
    }
    out.sort_by(|a, b| a.enclosure.0.cmp(&b.enclosure.0));
    Ok(out)
}

fn strip_zero_roots(p: &UnivariatePolynomial) -> UnivariatePolynomial {
    let skip = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    UnivariatePolynomial::from_coeffs(p.coeffs()[skip..].to_vec())
}

/// Yun's algorithm: `p = c · ∏ fᵢ^i` with each `fᵢ` square-free.
fn square_free_factors(p: &UnivariatePolynomial) -> Vec<(usize, UnivariatePolynomial)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a = p.gcd(&dp);
    let mut b = p.div_rem(&a).0;
    let c = dp.div_rem(&a).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let f = b.gcd(&d);
        if f.degree().unwrap_or(0) > 0 {
            out.push((i, f.clone()));
        }
        b = b.div_rem(&f).0;
        let c = d.div_rem(&f).0;
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

fn sturm_sequence(p: &UnivariatePolynomial) -> Vec<UnivariatePolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn variations(seq: &[UnivariatePolynomial], t: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in seq {
        let v = signum(&s.evaluate(t));
        if v != 0 {
            if last != 0 && v != last {
                count += 1;
            }
            last = v;
        }
    }
    count
}

fn cauchy_bound(p: &UnivariatePolynomial) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    BigRational::one() + max
}

/// Disjoint intervals `(lo, hi]` each holding exactly one root of the
/// square-free `p`.
fn isolate(p: &UnivariatePolynomial) -> Vec<(BigRational, BigRational)> {
    let seq = sturm_sequence(p);
    let mut out = Vec::new();
    let mut stack = vec![(BigRational::zero(), cauchy_bound(p))];
    while let Some((lo, hi)) = stack.pop() {
        let n = variations(&seq, &lo) - variations(&seq, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / BigRational::from_integer(2.into());
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out
}

fn refine(p: &UnivariatePolynomial, mut lo: BigRational, mut hi: BigRational, mult: usize) -> PositiveRoot {
    let two = BigRational::from_integer(2.into());
    let tol = ratio(1, 10_000_000_000_000);
    if p.evaluate(&hi).is_zero() {
        return exact_root(hi, mult);
    }
    let s_hi = signum(&p.evaluate(&hi));
    while lo.is_zero() || &hi - &lo > &tol * &lo {
        let mid = (&lo + &hi) / &two;
        let s = signum(&p.evaluate(&mid));
        if s == 0 {
            return exact_root(mid, mult);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let candidate = simplest_between(&lo, &hi);
    if p.evaluate(&candidate).is_zero() {
        return exact_root(candidate, mult);
    }
    PositiveRoot {
        value: to_f64(&((&lo + &hi) / &two)),
        multiplicity: mult,
        enclosure: (lo, hi),
        exact: None,
    }
}

fn exact_root(r: BigRational, mult: usize) -> PositiveRoot {
    PositiveRoot {
        value: to_f64(&r),
        multiplicity: mult,
        enclosure: (r.clone(), r.clone()),
        exact: Some(r),
    }
}

/// The rational with the smallest denominator in `[lo, hi]`, `0 ≤ lo ≤ hi`.
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let n = lo.floor();
    let inner = simplest_between(
        &(BigRational::one() / (hi - &n)),
        &(BigRational::one() / (lo - &n)),
    );
    n + BigRational::one() / inner
}
