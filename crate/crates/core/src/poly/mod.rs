//! Exact polynomials over the rationals.

mod bivariate;
mod univariate;

pub use bivariate::{BivariatePolynomial, FloatPoly, Var};
pub use univariate::UnivariatePolynomial;

use alloc::format;
use alloc::string::String;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Appends `coef·monomial` to a rendered sum. `monomial` is empty for the
/// constant term.
pub(crate) fn push_term(out: &mut String, coef: &BigRational, monomial: &str) {
    let neg = coef.is_negative();
    let mag = coef.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if monomial.is_empty() {
        out.push_str(&format!("{mag}"));
    } else if mag.is_one() {
        out.push_str(monomial);
    } else if mag.is_integer() {
        out.push_str(&format!("{mag}{monomial}"));
    } else {
        out.push_str(&format!("({mag}){monomial}"));
    }
}

pub(crate) fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => String::from(var),
        _ => format!("{var}^{e}"),
    }
}

pub(crate) fn finish(out: String) -> String {
    if out.is_empty() {
        String::from("0")
    } else {
        out
    }
}

pub(crate) fn is_zero_q(q: &BigRational) -> bool {
    q.is_zero()
}
