use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
#[allow(unused_imports)]
use num_traits::Float;
use num_traits::{One, Zero};

use crate::boundary::boundary_polynomial;
use crate::dynsys::PlanarSystem;
use crate::graph::Graph;
use crate::poly::{BivariatePolynomial, FloatPoly, Var};
use crate::{Error, Result};

/// A numerical integral and an estimate of its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub abs_error_estimate: f64,
}

const QUAD_TOL: f64 = 1e-12;

/// `∫₀^{2π} f(θ) dθ` for smooth periodic `f`, by trapezoid rules doubled
/// until two successive values agree.
pub fn periodic_integral(f: impl Fn(f64) -> f64) -> Quadrature {
    let mut n = 16usize;
    let mut sum: f64 = (0..n).map(|k| f(2.0 * PI * k as f64 / n as f64)).sum();
    let mut prev = 2.0 * PI * sum / n as f64;
    loop {
        let odd: f64 = (0..n).map(|k| f(2.0 * PI * (2 * k + 1) as f64 / (2 * n) as f64)).sum();
        sum += odd;
        n *= 2;
        let cur = 2.0 * PI * sum / n as f64;
        let err = (cur - prev).abs();
        if err <= QUAD_TOL * cur.abs().max(1.0) || n >= 1 << 22 {
            return Quadrature {
                value: cur,
                abs_error_estimate: err,
            };
        }
        prev = cur;
    }
}

/// Integral of the divergence of `s` along `(cos t, sin t)`, `t ∈ [0, 2π]`.
pub fn circle_divergence_integral(s: &PlanarSystem) -> Quadrature {
    let div = s.divergence().to_float();
    periodic_integral(|t| div.eval(t.cos(), t.sin()))
}

fn double_factorial_odd(n: usize) -> BigInt {
    // (n − 1)!! for even n
    (1..n).step_by(2).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact `c` with `∫₀^{2π} p(cos t, sin t) dt = c · π`, using
/// `∫ cosⁱ sinʲ = 2π (i−1)!! (j−1)!! / (i+j)!!` for even `i, j`.
pub fn circle_integral_pi_coefficient(p: &BivariatePolynomial) -> BigRational {
    let mut acc = BigRational::zero();
    for (i, j, c) in p.terms() {
        if i % 2 == 1 || j % 2 == 1 {
            continue;
        }
        let num = double_factorial_odd(i) * double_factorial_odd(j) * BigInt::from(2);
        let den: BigInt = (2..=i + j).step_by(2).fold(BigInt::one(), |a, k| a * BigInt::from(k));
        acc += c * BigRational::new(num, den);
    }
    acc
}

/// Characteristic exponent of the unit circle of the first circle system,
/// with the circle's own time parametrization `θ' = B(cos θ, sin θ)`:
/// `−2 ∫₀^{2π} dθ / B`. `None` when `B` vanishes or changes sign on the
/// circle, where the circle is not a periodic orbit.
pub fn theta_corrected_exponent(g: &Graph) -> Option<Quadrature> {
    let b = boundary_polynomial(g).to_float();
    let scan = scan_float(&b, &derivative_along_circle(&boundary_polynomial(g)), 720);
    if !scan.is_empty() {
        return None;
    }
    let q = periodic_integral(|t| 1.0 / b.eval(t.cos(), t.sin()));
    Some(Quadrature {
        value: -2.0 * q.value,
        abs_error_estimate: 2.0 * q.abs_error_estimate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroKind {
    /// `B` changes sign.
    SignChange,
    /// `B` touches zero without changing sign.
    Tangential,
}

impl ZeroKind {
    pub fn name(self) -> &'static str {
        match self {
            ZeroKind::SignChange => "sign_change",
            ZeroKind::Tangential => "tangential",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleZero {
    /// Angle in `[0, 2π)`.
    pub theta: f64,
    pub kind: ZeroKind,
}

struct AlongCircle {
    bx: FloatPoly,
    by: FloatPoly,
}

fn derivative_along_circle(b: &BivariatePolynomial) -> AlongCircle {
    AlongCircle {
        bx: b.partial(Var::X).to_float(),
        by: b.partial(Var::Y).to_float(),
    }
}

impl AlongCircle {
    fn eval(&self, t: f64) -> f64 {
        let (c, s) = (t.cos(), t.sin());
        -s * self.bx.eval(c, s) + c * self.by.eval(c, s)
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == (fa > 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn wrap(t: f64) -> f64 {
    let w = t - 2.0 * PI * (t / (2.0 * PI)).floor();
    if w >= 2.0 * PI - 1e-13 {
        0.0
    } else {
        w
    }
}

fn scan_float(b: &FloatPoly, db: &AlongCircle, samples: usize) -> Vec<CircleZero> {
    let f = |t: f64| b.eval(t.cos(), t.sin());
    let step = 2.0 * PI / samples as f64;
    let vals: Vec<f64> = (0..samples).map(|k| f(k as f64 * step)).collect();
    let scale = vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let zero_tol = 1e-10 * scale;
    let small = |v: f64| v.abs() <= zero_tol;
    let Some(start) = vals.iter().position(|&v| !small(v)) else {
        return Vec::new();
    };
    // walk once around the circle starting from a sample clear of zero
    let n = samples as isize;
    let idx = |k: isize| (start as isize + k).rem_euclid(n) as usize;
    let angle = |k: isize| (start as isize + k) as f64 * step;
    let mut out: Vec<CircleZero> = Vec::new();
    let mut k = 0isize;
    while k < n {
        let cur = vals[idx(k)];
        let mut r = k + 1;
        while small(vals[idx(r)]) {
            r += 1;
        }
        let next = vals[idx(r)];
        let (a, c) = (angle(k), angle(r));
        if r > k + 1 {
            // a run of near-zero samples between two clear ones
            let theta = if (cur > 0.0) != (next > 0.0) {
                out.push(CircleZero { theta: wrap(bisect(f, a, c)), kind: ZeroKind::SignChange });
                k = r;
                continue;
            } else {
                // centre of the stretch where |B| stays below the noise floor
                let edge = |t: f64| f(t).abs() - zero_tol;
                let left = bisect(edge, a, angle(k + 1));
                let right = bisect(edge, angle(r - 1), c);
                0.5 * (left + right)
            };
            out.push(CircleZero { theta: wrap(theta), kind: ZeroKind::Tangential });
        } else if (cur > 0.0) != (next > 0.0) {
            out.push(CircleZero { theta: wrap(bisect(f, a, c)), kind: ZeroKind::SignChange });
        } else {
            // a dip between samples that touches zero without changing sign
            let prev = vals[idx(k - 1)];
            if !small(prev) && cur.abs() <= prev.abs() && cur.abs() < next.abs() {
                let (a, c) = (angle(k - 1), angle(k + 1));
                if (db.eval(a) > 0.0) != (db.eval(c) > 0.0) {
                    let tm = bisect(|s| db.eval(s), a, c);
                    if small(f(tm)) {
                        out.push(CircleZero { theta: wrap(tm), kind: ZeroKind::Tangential });
                    }
                }
            }
        }
        k = r;
    }
    out.sort_by(|a, b| a.theta.partial_cmp(&b.theta).expect("finite angles"));
    out.dedup_by(|a, b| (a.theta - b.theta).abs() < 1e-9);
    out
}

/// Zeros of `θ ↦ B(g; cos θ, sin θ)`: sign changes refined by bisection and
/// tangential zeros found at local minima of `|B|`. An empty result means
/// the first circle system has no equilibria on the unit circle, up to
/// sampling resolution.
pub fn circle_equilibria_scan(g: &Graph, samples: usize) -> Result<Vec<CircleZero>> {
    if samples < 360 {
        return Err(Error::invalid(format!("at least 360 samples are required, got {samples}")));
    }
    let b = boundary_polynomial(g);
    Ok(scan_float(&b.to_float(), &derivative_along_circle(&b), samples))
}
