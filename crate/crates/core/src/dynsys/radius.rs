use alloc::format;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::graph::Graph;
use crate::poly::UnivariatePolynomial;
use crate::rational::{binomial, pow2, signum};
use crate::weighted::{weighted_table, AffineForm, WeightParams, WeightedTable};
use crate::{Error, Result};

/// Averaged radius polynomial in `ρ = r²` of an ε-Liénard system.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiusPolynomial {
    pub poly: UnivariatePolynomial,
    pub m: usize,
    /// Coefficient of `ρ^d` as an affine form in `(k, u)`, scale included.
    pub affine_coeffs: Vec<AffineForm>,
}

/// `C(2d+2, d+1) / 2^(2d+2)`, the average of `cos^(2d+2)` over a period.
pub fn radius_coefficient_scale(d: usize) -> BigRational {
    BigRational::new(
        binomial(2 * d as u64 + 2, d as u64 + 1),
        pow2(2 * d as u32 + 2),
    )
}

fn require_odd(g: &Graph, what: &str) -> Result<usize> {
    let m = g.order();
    if m % 2 == 0 {
        return Err(Error::invalid(format!("{what} needs a graph of odd order, got {m}")));
    }
    Ok(m)
}

pub(crate) fn radius_forms(t: &WeightedTable) -> Vec<AffineForm> {
    (0..=(t.order() - 1) / 2)
        .map(|d| t.diagonal_form(2 * d + 1).scale(&radius_coefficient_scale(d)))
        .collect()
}

pub fn radius_polynomial(g1: &Graph, params: &WeightParams) -> Result<RadiusPolynomial> {
    let m = require_odd(g1, "the radius polynomial")?;
    if m < 3 {
        return Err(Error::invalid("the radius polynomial needs order at least 3"));
    }
    let affine_coeffs = radius_forms(&weighted_table(g1));
    let poly = UnivariatePolynomial::from_coeffs(affine_coeffs.iter().map(|f| f.eval(params)).collect());
    Ok(RadiusPolynomial { poly, m, affine_coeffs })
}

/// Upper bound `(m − 1)/2` on local limit cycles.
pub fn max_local_cycles(g1: &Graph) -> Result<usize> {
    Ok((require_odd(g1, "the local cycle bound")? - 1) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniqueCycleVerdict {
    UniqueStable,
    UniqueUnstable,
    NotApplicable,
}

impl UniqueCycleVerdict {
    pub fn name(self) -> &'static str {
        match self {
            UniqueCycleVerdict::UniqueStable => "unique_stable",
            UniqueCycleVerdict::UniqueUnstable => "unique_unstable",
            UniqueCycleVerdict::NotApplicable => "not_applicable",
        }
    }
}

/// Sign test on `B⁽ʷ⁾₀₁ · (B⁽ʷ⁾₁₂ + B⁽ʷ⁾₂₁ + B⁽ʷ⁾₀₃)` for order-3 graphs.
pub fn lienard_unique_cycle_check(g1: &Graph, params: &WeightParams) -> Result<UniqueCycleVerdict> {
    if g1.order() != 3 {
        return Err(Error::invalid(format!(
            "the unique-cycle test needs a graph of order 3, got {}",
            g1.order()
        )));
    }
    let t = weighted_table(g1);
    let b01 = t.cell(0, 1).value(params);
    let cubic = t.diagonal_form(3).eval(params);
    let product = &b01 * &cubic;
    Ok(if signum(&product) >= 0 {
        UniqueCycleVerdict::NotApplicable
    } else if signum(&b01) < 0 {
        UniqueCycleVerdict::UniqueStable
    } else {
        UniqueCycleVerdict::UniqueUnstable
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph_spec;
    use crate::rational::{int, ratio};

    fn g(s: &str) -> Graph {
        parse_graph_spec(s).unwrap()
    }

    #[test]
    fn scales() {
        assert_eq!(radius_coefficient_scale(0), ratio(1, 2));
        assert_eq!(radius_coefficient_scale(1), ratio(3, 8));
        assert_eq!(radius_coefficient_scale(2), ratio(5, 16));
        assert_eq!(radius_coefficient_scale(3), ratio(35, 128));
    }

    #[test]
    fn single_edge_polynomial() {
        let p = WeightParams::new(ratio(-211, 80), ratio(299, 120));
        let r = radius_polynomial(&g("edges:5:0-4"), &p).unwrap();
        assert_eq!(r.poly, UnivariatePolynomial::from_roots(&[ratio(1, 2), int(3)]));
        assert_eq!(r.poly.render_in("ρ"), "3/2 - (7/2)ρ + ρ^2");
        assert_eq!(r.affine_coeffs.len(), 3);
    }

    #[test]
    fn empty_three() {
        let r = radius_polynomial(&g("E3"), &WeightParams::unweighted()).unwrap();
        assert_eq!(r.poly.coeffs(), &[ratio(3, 2), ratio(3, 8)]);
    }

    #[test]
    fn constant_term_is_half_b01() {
        for spec in ["K3", "P3", "P2+K1", "E5", "C5", "S4+K1", "K7"] {
            let graph = g(spec);
            let params = WeightParams::new(ratio(2, 3), ratio(-5, 7));
            let r = radius_polynomial(&graph, &params).unwrap();
            let b01 = weighted_table(&graph).cell(0, 1).value(&params);
            assert_eq!(r.poly.coeff(0), b01 / int(2), "{spec}");
            assert_eq!(r.affine_coeffs.len(), (graph.order() - 1) / 2 + 1);
        }
    }

    #[test]
    fn order_checks() {
        assert!(radius_polynomial(&g("K4"), &WeightParams::unweighted()).is_err());
        assert!(radius_polynomial(&g("K1"), &WeightParams::unweighted()).is_err());
        assert_eq!(max_local_cycles(&g("K3")).unwrap(), 1);
        assert_eq!(max_local_cycles(&g("edges:5:0-4")).unwrap(), 2);
        assert_eq!(max_local_cycles(&g("K1")).unwrap(), 0);
        assert!(max_local_cycles(&g("P2")).is_err());
    }

    #[test]
    fn unique_cycle_verdicts() {
        let check = |s: &str, k, u| lienard_unique_cycle_check(&g(s), &WeightParams::new(int(k), int(u))).unwrap();
        assert_eq!(check("P2+K1", 0, -2), UniqueCycleVerdict::UniqueUnstable);
        assert_eq!(check("K3", 0, -1), UniqueCycleVerdict::UniqueStable);
        assert_eq!(check("K3", 1, 0), UniqueCycleVerdict::NotApplicable);
        assert!(lienard_unique_cycle_check(&g("K5"), &WeightParams::unweighted()).is_err());
    }
}
