//! First Liapunov numbers of the weak-focus systems, kept as exact rational
//! multiples of π.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::system::check_hopf_graph;
use crate::boundary::SubsetCensus;
use crate::graph::Graph;
use crate::rational::{exact_sqrt, signum, sqrt_approx, to_decimal_string};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(q: &BigRational) -> Self {
        match signum(q) {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BifurcationKind {
    /// Negative Liapunov number: a stable cycle is born as α increases.
    Supercritical,
    /// Positive: an unstable cycle is born as α decreases.
    Subcritical,
    /// Zero: the first focal value decides nothing.
    Inconclusive,
}

impl BifurcationKind {
    pub fn from_sign(s: Sign) -> Self {
        match s {
            Sign::Negative => BifurcationKind::Supercritical,
            Sign::Positive => BifurcationKind::Subcritical,
            Sign::Zero => BifurcationKind::Inconclusive,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BifurcationKind::Supercritical => "supercritical",
            BifurcationKind::Subcritical => "subcritical",
            BifurcationKind::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyapunovResult {
    /// The Liapunov number is `pi_coefficient · π`.
    pub pi_coefficient: BigRational,
    pub sign: Sign,
    pub kind: BifurcationKind,
}

impl LyapunovResult {
    pub fn from_pi_coefficient(pi_coefficient: BigRational) -> Self {
        let sign = Sign::of(&pi_coefficient);
        Self {
            pi_coefficient,
            sign,
            kind: BifurcationKind::from_sign(sign),
        }
    }
}

/// The low-order boundary coefficients the Liapunov numbers depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HopfCoefficients {
    pub b11: u64,
    pub b02: u64,
    pub b12: u64,
    pub b21: u64,
    pub b03: u64,
}

impl HopfCoefficients {
    pub fn of(g: &Graph) -> Self {
        Self::from_census(&SubsetCensus::of(g))
    }

    pub fn from_census(c: &SubsetCensus) -> Self {
        Self {
            b11: c.count(1, 1),
            b02: c.count(0, 2),
            b12: c.count(1, 2),
            b21: c.count(2, 1),
            b03: c.count(0, 3),
        }
    }
}

fn z(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `(3/2)(3B03(g2) + B12(g1) + B21(g2) + 2B02(g1)B02(g2) + B11(g1)B02(g1)
/// − B11(g2)B02(g2))`, no graph checks.
pub fn lyapunov_from_coefficients(g1: &HopfCoefficients, g2: &HopfCoefficients) -> LyapunovResult {
    let bracket = 3 * z(g2.b03) + z(g1.b12) + z(g2.b21) + 2 * z(g1.b02) * z(g2.b02)
        + z(g1.b11) * z(g1.b02)
        - z(g2.b11) * z(g2.b02);
    LyapunovResult::from_pi_coefficient(BigRational::new(3 * bracket, BigInt::from(2)))
}

/// Liapunov number at the weak focus of the Hopf system with `α = 0`.
/// Both graphs need order at least 2 and no isolated vertex.
pub fn lyapunov_number(g1: &Graph, g2: &Graph) -> Result<LyapunovResult> {
    check_hopf_graph(g1, "G1")?;
    check_hopf_graph(g2, "G2")?;
    Ok(lyapunov_from_coefficients(
        &HopfCoefficients::of(g1),
        &HopfCoefficients::of(g2),
    ))
}

/// Linear part `[[α1, α2], [α3, α4]]` of the generalized weak-focus system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfSpec {
    alphas: [BigRational; 4],
    sigma: BigRational,
}

impl HopfSpec {
    /// Requires `α1 + α4 = 0`, `σ = α1α4 − α2α3 > 0` and `α2 ≠ 0`.
    pub fn new(a1: BigRational, a2: BigRational, a3: BigRational, a4: BigRational) -> Result<Self> {
        if !(&a1 + &a4).is_zero() {
            return Err(Error::invalid(format!(
                "alpha1 + alpha4 must vanish, got {}",
                &a1 + &a4
            )));
        }
        if a2.is_zero() {
            return Err(Error::invalid("alpha2 must be nonzero"));
        }
        let sigma = &a1 * &a4 - &a2 * &a3;
        if !sigma.is_positive() {
            return Err(Error::invalid(format!(
                "sigma = alpha1*alpha4 - alpha2*alpha3 must be positive, got {sigma}"
            )));
        }
        Ok(Self {
            alphas: [a1, a2, a3, a4],
            sigma,
        })
    }

    pub fn alphas(&self) -> &[BigRational; 4] {
        &self.alphas
    }

    pub fn sigma(&self) -> &BigRational {
        &self.sigma
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralLyapunovResult {
    /// `c` in `σ̃ = c · π / σ^{3/2}`.
    pub scaled_coefficient: BigRational,
    pub sigma: BigRational,
    /// `c / σ^{3/2}` when `√σ` is rational.
    pub pi_coefficient: Option<BigRational>,
    /// `c / σ^{3/2}` to 64 significant digits.
    pub pi_coefficient_decimal: String,
    pub sign: Sign,
    pub kind: BifurcationKind,
}

impl GeneralLyapunovResult {
    pub fn pi_coefficient_f64(&self) -> f64 {
        match &self.pi_coefficient {
            Some(q) => q.to_f64().unwrap_or(f64::NAN),
            None => self.pi_coefficient_decimal.parse().unwrap_or(f64::NAN),
        }
    }

    pub fn as_lyapunov(&self) -> Option<LyapunovResult> {
        self.pi_coefficient.clone().map(LyapunovResult::from_pi_coefficient)
    }
}

/// Generalized Liapunov number for the linear part given by `spec`.
pub fn general_lyapunov_number(g1: &Graph, g2: &Graph, spec: &HopfSpec) -> Result<GeneralLyapunovResult> {
    check_hopf_graph(g1, "G1")?;
    check_hopf_graph(g2, "G2")?;
    Ok(general_from_coefficients(
        &HopfCoefficients::of(g1),
        &HopfCoefficients::of(g2),
        spec,
    ))
}

pub(crate) fn general_from_coefficients(
    c1: &HopfCoefficients,
    c2: &HopfCoefficients,
    spec: &HopfSpec,
) -> GeneralLyapunovResult {
    let q = |v: u64| BigRational::from_integer(BigInt::from(v));
    let [a1, a2, a3, a4] = &spec.alphas;
    let _ = a4;
    let (p11, p02, p12, p21) = (q(c1.b11), q(c1.b02), q(c1.b12), q(c1.b21));
    let (r11, r02, r12, r21, r03) = (q(c2.b11), q(c2.b02), q(c2.b12), q(c2.b21), q(c2.b03));
    let two = q(2);
    let three = q(3);

    let quadratic = a1 * a3 * (&p11 * &p11 + &p11 * &r02 + &p02 * &r11)
        + a1 * a2 * (&r11 * &r11 + &p11 * &r02)
        + a3 * a3 * (&p11 * &p02 + &two * &p02 * &r02)
        - &two * a1 * a3 * &r02 * &r02
        + (a2 * a3 - &two * a1 * a1) * &r11 * &r02;
    let cubic = &three * a3 * &r03 + &two * a1 * (&p21 + &r12) + (a3 * &p12 - a2 * &r21);
    let bracket = quadratic - (a1 * a1 + a2 * a3) * cubic;
    let scaled = -(&three / (&two * a2)) * bracket;

    let sigma = spec.sigma.clone();
    let sign = Sign::of(&scaled);
    let pi_coefficient = exact_sqrt(&sigma).map(|root| &scaled / (&sigma * root));
    let decimal = match &pi_coefficient {
        Some(v) => to_decimal_string(v, 64),
        None => {
            let root = sqrt_approx(&sigma, 80);
            to_decimal_string(&(&scaled / (&sigma * root)), 64)
        }
    };
    GeneralLyapunovResult {
        scaled_coefficient: scaled,
        sigma,
        pi_coefficient,
        pi_coefficient_decimal: decimal,
        sign,
        kind: BifurcationKind::from_sign(sign),
    }
}
