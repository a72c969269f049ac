//! Small helpers around `BigRational`.

use alloc::format;
use alloc::string::String;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Sign as -1, 0 or 1.
pub fn signum(q: &BigRational) -> i8 {
    match q.cmp(&BigRational::zero()) {
        Ordering::Less => -1,
        Ordering::Equal => 0,
        Ordering::Greater => 1,
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn pow2(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// Parses `"a"`, `"a/b"` or an exact decimal such as `"-2.5"` or `"2.5e-4"`.
/// Decimals are converted digit by digit, never through binary floating point.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    let bad = || Error::invalid(format!("not a rational number: '{text}'"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|_| bad())?;
        let den: BigInt = d.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::invalid(format!("zero denominator in '{text}'")));
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: String = format!("{whole}{frac}");
    let mut num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| bad())?
    };
    if neg {
        num = -num;
    }
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    })
}

/// Exact square root when `q` is the square of a rational.
pub fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

/// Rational approximation of `sqrt(q)` with `digits` correct decimal places.
pub fn sqrt_approx(q: &BigRational, digits: u32) -> BigRational {
    // sqrt(n/d) = sqrt(n*d)/d
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let nd = q.numer() * q.denom() * &scale * &scale;
    BigRational::new(nd.sqrt(), q.denom() * scale)
}

/// Decimal rendering with `sig` significant digits (truncated).
pub fn to_decimal_string(q: &BigRational, sig: usize) -> String {
    if q.is_zero() {
        return String::from("0");
    }
    let neg = q.is_negative();
    let a = q.abs();
    // find exponent e with 10^e <= a < 10^(e+1)
    let ten = BigRational::from_integer(BigInt::from(10));
    let mut e: i64 = 0;
    let mut scaled = a.clone();
    while scaled >= ten {
        scaled /= &ten;
        e += 1;
    }
    while scaled < BigRational::one() {
        scaled *= &ten;
        e -= 1;
    }
    let digits = (scaled * BigRational::from_integer(num_traits::pow(BigInt::from(10), sig - 1)))
        .floor()
        .to_integer()
        .to_str_radix(10);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&digits[..1]);
    if sig > 1 {
        out.push('.');
        out.push_str(&digits[1..]);
    }
    if e != 0 {
        out.push_str(&format!("e{e}"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("-211/80").unwrap(), ratio(-211, 80));
        assert_eq!(parse_rational("299/120").unwrap(), ratio(299, 120));
        assert_eq!(parse_rational("0.001").unwrap(), ratio(1, 1000));
        assert_eq!(parse_rational("2.5e-4").unwrap(), ratio(1, 4000));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("1e3").unwrap(), int(1000));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational(".").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(exact_sqrt(&int(2)), None);
        let r = sqrt_approx(&int(2), 30);
        assert!((to_f64(&r) - core::f64::consts::SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal_string(&ratio(15, 2), 4), "7.500");
        assert_eq!(to_decimal_string(&ratio(-1, 3), 3), "-3.33e-1");
    }
}
