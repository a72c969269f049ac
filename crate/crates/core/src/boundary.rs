//! The boundary polynomial `B(G; x, y) = Σ_S x^{|∂S|} y^{|S|}` where `∂S` is
//! the exterior vertex boundary.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::graph::{full_mask, Graph};
use crate::poly::BivariatePolynomial;
use crate::{Error, Result};

/// Subset counts `B_{i,j}`: how many `S` have `|∂S| = i` and `|S| = j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetCensus {
    order: usize,
    counts: Vec<u64>,
}

impl SubsetCensus {
    /// Enumerates all `2^n` subsets of `g`.
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut counts = vec![0u64; (n + 1) * (n + 1)];
        // Split the mask into low/high halves and tabulate the neighbourhood
        // union of each half once; the union for a full mask is then an OR.
        let lo_bits = n / 2;
        let hi_bits = n - lo_bits;
        let rows = g.adjacency_rows();
        let table = |offset: usize, bits: usize| -> Vec<u32> {
            let mut t = vec![0u32; 1 << bits];
            for m in 1..(1usize << bits) {
                let low = m.trailing_zeros() as usize;
                t[m] = t[m & (m - 1)] | rows[offset + low];
            }
            t
        };
        let lo = table(0, lo_bits);
        let hi = table(lo_bits, hi_bits);
        let lo_mask = (1u32 << lo_bits) - 1;
        for s in 0..=full_mask(n) {
            let reach = lo[(s & lo_mask) as usize] | hi[(s >> lo_bits) as usize];
            let i = (reach & !s).count_ones() as usize;
            let j = s.count_ones() as usize;
            counts[i * (n + 1) + j] += 1;
        }
        Self { order: n, counts }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `B_{i,j}`; zero outside `i + j <= n`.
    pub fn count(&self, i: usize, j: usize) -> u64 {
        if i + j > self.order {
            0
        } else {
            self.counts[i * (self.order + 1) + j]
        }
    }

    pub fn to_polynomial(&self) -> BivariatePolynomial {
        BivariatePolynomial::from_counts(self.order, |i, j| self.count(i, j))
    }
}

pub fn boundary_polynomial(g: &Graph) -> BivariatePolynomial {
    SubsetCensus::of(g).to_polynomial()
}

/// `B_{i,j}(g)`; requires `i + j <= g.order()`.
pub fn coefficient(g: &Graph, i: usize, j: usize) -> Result<u64> {
    if i + j > g.order() {
        return Err(Error::invalid(format!(
            "coefficient ({i},{j}) out of range for a graph of order {}",
            g.order()
        )));
    }
    Ok(SubsetCensus::of(g).count(i, j))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `(x + y)^n + 1 − x^n`
    Complete,
    /// `(1 + y)^n`
    Empty,
}

pub fn closed_form(kind: ClosedForm, n: usize) -> Result<BivariatePolynomial> {
    if n == 0 {
        return Err(Error::invalid("closed forms need n >= 1"));
    }
    let one = BivariatePolynomial::one();
    let x = BivariatePolynomial::x();
    let y = BivariatePolynomial::y();
    Ok(match kind {
        ClosedForm::Complete => &(&(&x + &y).pow(n as u32) + &one) - &x.pow(n as u32),
        ClosedForm::Empty => (&one + &y).pow(n as u32),
    })
}

/// `2^n`, the value of every boundary polynomial of order `n` at `(1, 1)`.
pub fn subset_total(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_family, Family::*, VertexSet};
    use crate::rational::int;

    /// Independent census: one subset at a time through `vertex_boundary`.
    fn brute(g: &Graph) -> BivariatePolynomial {
        let n = g.order();
        let mut terms = Vec::new();
        for bits in 0..(1u32 << n) {
            let s = VertexSet::from_bits(n, bits).unwrap();
            terms.push((g.vertex_boundary(s).len(), s.len(), int(1)));
        }
        BivariatePolynomial::from_terms(terms)
    }

    #[test]
    fn small_examples() {
        let k3 = make_family(Complete, 3).unwrap();
        assert_eq!(boundary_polynomial(&k3).render(), "1 + 3x^2y + 3xy^2 + y^3");
        let e2 = make_family(Empty, 2).unwrap();
        assert_eq!(boundary_polynomial(&e2).render(), "1 + 2y + y^2");
        let p2 = make_family(Path, 2).unwrap();
        assert_eq!(boundary_polynomial(&p2), brute(&p2));
        assert_eq!(boundary_polynomial(&p2).render(), "1 + 2xy + y^2");
    }

    #[test]
    fn matches_brute_force_on_odd_orders() {
        // odd n exercises the uneven low/high split
        for spec in ["P5", "C7", "W6", "S3", "K1", "edges:5:0-4"] {
            let g = crate::graph::parse_graph_spec(spec).unwrap();
            assert_eq!(boundary_polynomial(&g), brute(&g), "{spec}");
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            closed_form(ClosedForm::Complete, 1).unwrap().render(),
            "1 + y"
        );
        assert_eq!(closed_form(ClosedForm::Empty, 3).unwrap().render(), "1 + 3y + 3y^2 + y^3");
        let k4 = closed_form(ClosedForm::Complete, 4).unwrap();
        assert_eq!(k4, boundary_polynomial(&make_family(Complete, 4).unwrap()));
        assert!(closed_form(ClosedForm::Empty, 0).is_err());
    }

    #[test]
    fn coefficient_queries() {
        let c5 = make_family(Cycle, 5).unwrap();
        assert_eq!(coefficient(&c5, 2, 1).unwrap(), 5);
        let s5 = make_family(Star, 5).unwrap();
        assert_eq!(coefficient(&s5, 1, 2).unwrap(), 6);
        let g = disjoint_union(&make_family(Star, 4).unwrap(), &make_family(Path, 2).unwrap()).unwrap();
        assert_eq!(coefficient(&g, 1, 1).unwrap(), 5);
        assert_eq!(coefficient(&g, 0, 0).unwrap(), 1);
        assert_eq!(coefficient(&g, 3, 0).unwrap(), 0);
        assert!(coefficient(&g, 4, 3).is_err());
    }

    #[test]
    fn evaluations() {
        let k4 = boundary_polynomial(&make_family(Complete, 4).unwrap());
        assert_eq!(k4.evaluate(&int(1), &int(1)), int(16));
        let k3 = boundary_polynomial(&make_family(Complete, 3).unwrap());
        assert_eq!(k3.evaluate(&int(0), &int(-1)), int(0));
        assert_eq!(k3.evaluate(&int(0), &int(0)), int(1));
    }
}
