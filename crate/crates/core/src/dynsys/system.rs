use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::lyapunov::HopfSpec;
use crate::boundary::{boundary_polynomial, SubsetCensus};
use crate::graph::Graph;
use crate::poly::{BivariatePolynomial, FloatPoly, Var};
use crate::weighted::{weighted_lienard_f, WeightParams};
use crate::{Error, Result};

/// `dx/dt = fx(x, y)`, `dy/dt = fy(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarSystem {
    pub fx: BivariatePolynomial,
    pub fy: BivariatePolynomial,
    /// Names the construction and its inputs.
    pub label: String,
}

impl PlanarSystem {
    pub fn new(fx: BivariatePolynomial, fy: BivariatePolynomial, label: impl Into<String>) -> Self {
        Self {
            fx,
            fy,
            label: label.into(),
        }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> (BigRational, BigRational) {
        (self.fx.evaluate(x, y), self.fy.evaluate(x, y))
    }

    /// Exact Jacobian `[[∂fx/∂x, ∂fx/∂y], [∂fy/∂x, ∂fy/∂y]]` at a point.
    pub fn jacobian(&self, x: &BigRational, y: &BigRational) -> [[BigRational; 2]; 2] {
        [
            [
                self.fx.partial(Var::X).evaluate(x, y),
                self.fx.partial(Var::Y).evaluate(x, y),
            ],
            [
                self.fy.partial(Var::X).evaluate(x, y),
                self.fy.partial(Var::Y).evaluate(x, y),
            ],
        ]
    }

    /// `∂fx/∂x + ∂fy/∂y` as an exact polynomial.
    pub fn divergence(&self) -> BivariatePolynomial {
        &self.fx.partial(Var::X) + &self.fy.partial(Var::Y)
    }

    pub fn to_float(&self) -> FloatField {
        FloatField {
            fx: self.fx.to_float(),
            fy: self.fy.to_float(),
        }
    }
}

/// Floating-point vector field for the integrators.
#[derive(Debug, Clone)]
pub struct FloatField {
    fx: FloatPoly,
    fy: FloatPoly,
}

impl FloatField {
    #[inline]
    pub fn eval(&self, x: f64, y: f64) -> (f64, f64) {
        (self.fx.eval(x, y), self.fy.eval(x, y))
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn pow2(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << n)
}

/// `1 − x² − y²`
fn unit_disk_gap() -> BivariatePolynomial {
    BivariatePolynomial::from_terms([(0, 0, q(1)), (2, 0, q(-1)), (0, 2, q(-1))])
}

/// `dx/dt = 2^{n1} x − B(g1)`, `dy/dt = 2^{n2} y − B(g2)`; `(1, 1)` is always
/// an equilibrium since `B(g; 1, 1) = 2^n`.
pub fn build_example1(g1: &Graph, g2: &Graph) -> PlanarSystem {
    let fx = &BivariatePolynomial::monomial(1, 0, pow2(g1.order())) - &boundary_polynomial(g1);
    let fy = &BivariatePolynomial::monomial(0, 1, pow2(g2.order())) - &boundary_polynomial(g2);
    PlanarSystem::new(fx, fy, format!("example1(n1={}, n2={})", g1.order(), g2.order()))
}

/// Liénard form `dx/dt = y − B̃_w(g1; x)`, `dy/dt = −B̃_w(g2; x)`.
pub fn build_lienard(g1: &Graph, g2: &Graph, params: &WeightParams) -> PlanarSystem {
    let f = BivariatePolynomial::from_univariate_x(&weighted_lienard_f(g1, params));
    let g = BivariatePolynomial::from_univariate_x(&weighted_lienard_f(g2, params));
    PlanarSystem::new(
        &BivariatePolynomial::y() - &f,
        -&g,
        format!(
            "lienard(n1={}, n2={}, k={}, u={})",
            g1.order(),
            g2.order(),
            params.k,
            params.u
        ),
    )
}

/// `dx/dt = y − ε·B̃_w(g1; x)`, `dy/dt = −x`; `g1` must have odd order.
pub fn build_eps_lienard(g1: &Graph, params: &WeightParams, eps: &BigRational) -> Result<PlanarSystem> {
    if g1.order() % 2 == 0 {
        return Err(Error::invalid(format!(
            "the ε-system needs a graph of odd order, got {}",
            g1.order()
        )));
    }
    let f = BivariatePolynomial::from_univariate_x(&weighted_lienard_f(g1, params).scale(eps));
    Ok(PlanarSystem::new(
        &BivariatePolynomial::y() - &f,
        BivariatePolynomial::monomial(1, 0, q(-1)),
        format!(
            "eps-lienard(m={}, k={}, u={}, eps={})",
            g1.order(),
            params.k,
            params.u,
            eps
        ),
    ))
}

/// `dx/dt = −B y + x(1 − x² − y²)`, `dy/dt = B x + y(1 − x² − y²)`.
pub fn build_circle_system1(g: &Graph) -> PlanarSystem {
    let b = boundary_polynomial(g);
    let gap = unit_disk_gap();
    let x = BivariatePolynomial::x();
    let y = BivariatePolynomial::y();
    PlanarSystem::new(
        &(-&(&b * &y)) + &(&x * &gap),
        &(&b * &x) + &(&y * &gap),
        format!("circle1(n={})", g.order()),
    )
}

/// `dx/dt = −y + B x(1 − x² − y²)`, `dy/dt = x + B y(1 − x² − y²)`.
pub fn build_circle_system2(g: &Graph) -> PlanarSystem {
    let b = boundary_polynomial(g);
    let radial = &b * &unit_disk_gap();
    let x = BivariatePolynomial::x();
    let y = BivariatePolynomial::y();
    PlanarSystem::new(
        &(-&y) + &(&radial * &x),
        &x + &(&radial * &y),
        format!("circle2(n={})", g.order()),
    )
}

/// Requirements for the weak-focus systems: order at least 2 and no
/// isolated vertex (so `B − 1` has no linear part).
pub fn check_hopf_graph(g: &Graph, which: &str) -> Result<()> {
    if g.order() < 2 {
        return Err(Error::Precondition(format!(
            "{which} must have order >= 2, got {}",
            g.order()
        )));
    }
    let isolated = SubsetCensus::of(g).count(0, 1);
    if isolated != 0 {
        return Err(Error::Precondition(format!(
            "{which} has {isolated} isolated vertices (B_0,1 = {isolated})"
        )));
    }
    Ok(())
}

/// `dx/dt = αx − y + B(g1) − 1`, `dy/dt = x + αy + B(g2) − 1`.
pub fn build_hopf(g1: &Graph, g2: &Graph, alpha: &BigRational) -> Result<PlanarSystem> {
    check_hopf_graph(g1, "G1")?;
    check_hopf_graph(g2, "G2")?;
    let linear = |a: BigRational, b: BigRational| {
        BivariatePolynomial::from_terms([(1, 0, a), (0, 1, b)])
    };
    Ok(PlanarSystem::new(
        &linear(alpha.clone(), q(-1)) + &boundary_polynomial(g1).tilde(),
        &linear(q(1), alpha.clone()) + &boundary_polynomial(g2).tilde(),
        format!("hopf(n1={}, n2={}, alpha={})", g1.order(), g2.order(), alpha),
    ))
}

/// `dx/dt = α1 x + α2 y + B(g1) − 1`, `dy/dt = α3 x + α4 y + B(g2) − 1`.
pub fn build_general_hopf(g1: &Graph, g2: &Graph, spec: &HopfSpec) -> Result<PlanarSystem> {
    check_hopf_graph(g1, "G1")?;
    check_hopf_graph(g2, "G2")?;
    let [a1, a2, a3, a4] = spec.alphas();
    let fx = &BivariatePolynomial::from_terms([(1, 0, a1.clone()), (0, 1, a2.clone())])
        + &boundary_polynomial(g1).tilde();
    let fy = &BivariatePolynomial::from_terms([(1, 0, a3.clone()), (0, 1, a4.clone())])
        + &boundary_polynomial(g2).tilde();
    Ok(PlanarSystem::new(
        fx,
        fy,
        format!(
            "hopf-general(n1={}, n2={}, alpha=[{a1}, {a2}, {a3}, {a4}])",
            g1.order(),
            g2.order()
        ),
    ))
}

/// Derivative of the Poincaré map of the Hopf system's linear part at the
/// origin, `e^{2πα}`, written out symbolically.
pub fn hopf_return_derivative(alpha: &BigRational) -> String {
    if alpha.is_zero() {
        String::from("1")
    } else {
        format!("exp(2*pi*{alpha})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, parse_graph_spec, Family::*};
    use crate::rational::{int, ratio};

    fn g(spec: &str) -> Graph {
        parse_graph_spec(spec).unwrap()
    }

    #[test]
    fn example1_has_equilibrium_at_one_one() {
        let s = build_example1(&g("K2"), &g("E3"));
        let want_fx = BivariatePolynomial::from_terms([(1, 0, int(4)), (0, 0, int(-1)), (1, 1, int(-2)), (0, 2, int(-1))]);
        assert_eq!(s.fx, want_fx);
        let want_fy = &BivariatePolynomial::monomial(0, 1, int(8))
            - &(&BivariatePolynomial::one() + &BivariatePolynomial::y()).pow(3);
        assert_eq!(s.fy, want_fy);
        for (a, b) in [("K2", "E3"), ("K1", "E1"), ("C5", "S4+P2"), ("W6", "E1")] {
            let s = build_example1(&g(a), &g(b));
            assert_eq!(s.eval(&int(1), &int(1)), (int(0), int(0)), "{a} {b}");
        }
        let s = build_example1(&g("K1"), &g("E1"));
        assert_eq!(s.fx.render(), "-1 + 2x - y");
        assert_eq!(s.fy.render(), "-1 + y");
    }

    #[test]
    fn lienard_builders() {
        let e1 = make_family(Empty, 1).unwrap();
        let p = WeightParams::new(ratio(2, 3), int(5));
        let s = build_lienard(&e1, &e1, &p);
        assert_eq!(s.fx.render(), "-x + y");
        assert_eq!(s.fy.render(), "-x");

        let s = build_lienard(&g("K3"), &e1, &WeightParams::new(int(0), int(-1)));
        assert_eq!(s.fx.render(), "x + y + 2x^2 - 4x^3");

        let s = build_eps_lienard(&g("E3"), &WeightParams::unweighted(), &int(1)).unwrap();
        assert_eq!(s.fx.render(), "-3x + y - 3x^2 - x^3");
        let s = build_eps_lienard(&g("E3"), &WeightParams::unweighted(), &int(0)).unwrap();
        assert_eq!(s.fx.render(), "y");
        assert_eq!(s.fy.render(), "-x");
        assert!(build_eps_lienard(&g("E4"), &WeightParams::unweighted(), &int(1)).is_err());
    }

    #[test]
    fn circle_systems() {
        for spec in ["K3", "K4", "S3+P2", "E2"] {
            let graph = g(spec);
            let b = boundary_polynomial(&graph);
            let s1 = build_circle_system1(&graph);
            let x = BivariatePolynomial::x();
            let y = BivariatePolynomial::y();
            // radial identity x fx + y fy = r²(1 − r²)
            let radial = &(&x * &s1.fx) + &(&y * &s1.fy);
            let r2 = &(&x * &x) + &(&y * &y);
            assert_eq!(radial, &r2 * &unit_disk_gap(), "{spec}");

            let s2 = build_circle_system2(&graph);
            // on the unit circle the field is (−y, x)
            for (cx, cy) in [(ratio(3, 5), ratio(4, 5)), (ratio(-5, 13), ratio(12, 13)), (int(0), int(-1))] {
                assert_eq!(s2.eval(&cx, &cy), (-cy.clone(), cx.clone()));
            }
            let _ = b;
        }
        let e1 = build_circle_system2(&g("E1"));
        let want = &(-&BivariatePolynomial::y())
            + &(&(&(&BivariatePolynomial::one() + &BivariatePolynomial::y()) * &BivariatePolynomial::x())
                * &unit_disk_gap());
        assert_eq!(e1.fx, want);
    }

    #[test]
    fn hopf_linear_part() {
        let s = build_hopf(&g("K4"), &g("S2+2*P2"), &ratio(1, 1000)).unwrap();
        let j = s.jacobian(&int(0), &int(0));
        assert_eq!(j, [[ratio(1, 1000), int(-1)], [int(1), ratio(1, 1000)]]);
        assert_eq!(s.eval(&int(0), &int(0)), (int(0), int(0)));
        assert!(matches!(build_hopf(&g("K1"), &g("K3"), &int(0)), Err(Error::Precondition(_))));
        assert!(matches!(build_hopf(&g("K3"), &g("P2+K1"), &int(0)), Err(Error::Precondition(_))));
        assert_eq!(hopf_return_derivative(&ratio(1, 1000)), "exp(2*pi*1/1000)");
    }

    #[test]
    fn general_hopf_reduces_to_hopf() {
        let spec = HopfSpec::new(int(0), int(-1), int(1), int(0)).unwrap();
        let a = build_general_hopf(&g("C5"), &g("S3"), &spec).unwrap();
        let b = build_hopf(&g("C5"), &g("S3"), &int(0)).unwrap();
        assert_eq!((a.fx, a.fy), (b.fx, b.fy));

        let spec = HopfSpec::new(ratio(1, 2), int(-1), ratio(5, 4), ratio(-1, 2)).unwrap();
        let s = build_general_hopf(&g("K3"), &g("P2"), &spec).unwrap();
        assert_eq!(
            s.jacobian(&int(0), &int(0)),
            [[ratio(1, 2), int(-1)], [ratio(5, 4), ratio(-1, 2)]]
        );
    }
}
