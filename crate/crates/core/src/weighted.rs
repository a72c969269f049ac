//! The parity-weighted boundary polynomial.
//!
//! A subset `S` weighs 1 when it is empty or has odd size and `k` otherwise.
//! Cell `(i, j)` with `j >= 1` is *realized* when some `S` has `|∂S| = i` and
//! `|S| = j`; its value is then the weight sum. Every unrealized cell with
//! `j >= 1` takes the same free value `u`, and the row `j = 0` is zero apart
//! from the constant term. Cells are kept as affine forms `a + b·k + c·u` so
//! that fitting `k` and `u` is plain linear algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::boundary::SubsetCensus;
use crate::graph::{Graph, VertexSet};
use crate::poly::{BivariatePolynomial, UnivariatePolynomial};
use crate::{Error, Result};

/// Values of the free weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightParams {
    /// Weight of nonempty even-size subsets.
    pub k: BigRational,
    /// Shared value of all unrealized cells.
    pub u: BigRational,
    /// Optional individual parts whose sum is `u`; informational only.
    named_parts: Option<Vec<BigRational>>,
}

impl WeightParams {
    pub fn new(k: BigRational, u: BigRational) -> Self {
        Self {
            k,
            u,
            named_parts: None,
        }
    }

    /// `k = 1, u = 0`: every subset counts once and unrealized cells vanish,
    /// which reproduces the unweighted polynomial.
    pub fn unweighted() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn with_parts(k: BigRational, u: BigRational, parts: Vec<BigRational>) -> Result<Self> {
        let sum: BigRational = parts.iter().cloned().sum();
        if sum != u {
            return Err(Error::invalid(format!(
                "named parts sum to {sum}, expected u = {u}"
            )));
        }
        Ok(Self {
            k,
            u,
            named_parts: Some(parts),
        })
    }

    pub fn named_parts(&self) -> Option<&[BigRational]> {
        self.named_parts.as_deref()
    }
}

pub fn subset_weight(s: VertexSet, params: &WeightParams) -> BigRational {
    if s.is_empty() || s.len() % 2 == 1 {
        BigRational::one()
    } else {
        params.k.clone()
    }
}

/// One coefficient cell: `a` odd-size realizers, `b` even nonempty
/// realizers, `c = 1` iff unrealized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AffineCell {
    pub a: u64,
    pub b: u64,
    pub c: u8,
}

impl AffineCell {
    pub fn is_unrealized(&self) -> bool {
        self.c == 1
    }

    pub fn form(&self) -> AffineForm {
        AffineForm::new(
            BigRational::from_integer(BigInt::from(self.a)),
            BigRational::from_integer(BigInt::from(self.b)),
            BigRational::from_integer(BigInt::from(self.c)),
        )
    }

    pub fn value(&self, params: &WeightParams) -> BigRational {
        self.form().eval(params)
    }
}

/// `constant + k_coeff·k + u_coeff·u` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineForm {
    pub constant: BigRational,
    pub k_coeff: BigRational,
    pub u_coeff: BigRational,
}

impl AffineForm {
    pub fn new(constant: BigRational, k_coeff: BigRational, u_coeff: BigRational) -> Self {
        Self {
            constant,
            k_coeff,
            u_coeff,
        }
    }

    pub fn eval(&self, params: &WeightParams) -> BigRational {
        &self.constant + &self.k_coeff * &params.k + &self.u_coeff * &params.u
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(&self.constant * s, &self.k_coeff * s, &self.u_coeff * s)
    }

    pub fn is_constant(&self) -> bool {
        self.k_coeff.is_zero() && self.u_coeff.is_zero()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        if !self.constant.is_zero() {
            crate::poly::push_term(&mut out, &self.constant, "");
        }
        if !self.k_coeff.is_zero() {
            crate::poly::push_term(&mut out, &self.k_coeff, "k");
        }
        if !self.u_coeff.is_zero() {
            crate::poly::push_term(&mut out, &self.u_coeff, "u");
        }
        crate::poly::finish(out)
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &AffineForm {
    type Output = AffineForm;

    fn add(self, rhs: Self) -> AffineForm {
        AffineForm::new(
            &self.constant + &rhs.constant,
            &self.k_coeff + &rhs.k_coeff,
            &self.u_coeff + &rhs.u_coeff,
        )
    }
}

impl Mul<&BigRational> for &AffineForm {
    type Output = AffineForm;

    fn mul(self, rhs: &BigRational) -> AffineForm {
        self.scale(rhs)
    }
}

/// All cells `(i, j)` with `i + j <= n` of the weighted polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTable {
    order: usize,
    cells: Vec<AffineCell>,
}

impl WeightedTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cell(&self, i: usize, j: usize) -> AffineCell {
        if i + j > self.order {
            AffineCell::default()
        } else {
            self.cells[i * (self.order + 1) + j]
        }
    }

    /// Cells in `(i + j, i)` order, including zero cells.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, AffineCell)> + '_ {
        let n = self.order;
        (0..=n)
            .flat_map(move |d| (0..=d).map(move |i| (i, d - i)))
            .map(move |(i, j)| (i, j, self.cell(i, j)))
    }

    /// `Σ_{i+j=d}` of the cell forms.
    pub fn diagonal_form(&self, d: usize) -> AffineForm {
        (0..=d).fold(AffineForm::default(), |acc, i| &acc + &self.cell(i, d - i).form())
    }

    /// Builds a table from explicit cells, checking the structural invariants.
    pub fn from_cells(order: usize, cells: &[(usize, usize, AffineCell)]) -> Result<Self> {
        let mut t = Self {
            order,
            cells: alloc::vec![AffineCell::default(); (order + 1) * (order + 1)],
        };
        for &(i, j, c) in cells {
            if i + j > order {
                return Err(Error::invalid(format!("cell ({i},{j}) outside i+j <= {order}")));
            }
            if c.c > 1 || (c.c == 1 && (c.a != 0 || c.b != 0)) {
                return Err(Error::invalid(format!("cell ({i},{j}) is both realized and unrealized")));
            }
            if j == 0 && (i, c) != (0, AffineCell { a: 1, b: 0, c: 0 }) && c != AffineCell::default() {
                return Err(Error::invalid(format!("cell ({i},0) must be zero")));
            }
            t.cells[i * (order + 1) + j] = c;
        }
        Ok(t)
    }
}

pub fn weighted_table(g: &Graph) -> WeightedTable {
    table_from_census(&SubsetCensus::of(g))
}

pub fn table_from_census(census: &SubsetCensus) -> WeightedTable {
    let n = census.order();
    let mut cells = alloc::vec![AffineCell::default(); (n + 1) * (n + 1)];
    cells[0] = AffineCell { a: 1, b: 0, c: 0 };
    for i in 0..=n {
        for j in 1..=n - i {
            let count = census.count(i, j);
            // every S in cell (i, j) has |S| = j, so parity is per column
            cells[i * (n + 1) + j] = match (count, j % 2) {
                (0, _) => AffineCell { a: 0, b: 0, c: 1 },
                (m, 1) => AffineCell { a: m, b: 0, c: 0 },
                (m, _) => AffineCell { a: 0, b: m, c: 0 },
            };
        }
    }
    WeightedTable { order: n, cells }
}

pub fn instantiate(t: &WeightedTable, params: &WeightParams) -> BivariatePolynomial {
    let mut p = BivariatePolynomial::zero(t.order);
    for (i, j, cell) in t.cells() {
        let v = cell.value(params);
        if !v.is_zero() {
            p.set(i, j, v);
        }
    }
    p
}

/// `B̃_w(g; x) = B_w(g; x, x) − 1`.
pub fn weighted_lienard_f(g: &Graph, params: &WeightParams) -> UnivariatePolynomial {
    instantiate(&weighted_table(g), params).tilde().diagonal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::boundary_polynomial;
    use crate::graph::{make_family, parse_graph_spec, Family::*};
    use crate::rational::{int, ratio};

    fn params(k: BigRational, u: BigRational) -> WeightParams {
        WeightParams::new(k, u)
    }

    /// Direct weighted sum over subsets, no census.
    fn brute_cells(g: &Graph, k: &BigRational) -> Vec<(usize, usize, BigRational, bool)> {
        let n = g.order();
        let mut out = Vec::new();
        for i in 0..=n {
            for j in 0..=n - i {
                let mut sum = BigRational::zero();
                let mut hit = false;
                for bits in 0..(1u32 << n) {
                    let s = VertexSet::from_bits(n, bits).unwrap();
                    if s.len() == j && g.vertex_boundary(s).len() == i {
                        hit = true;
                        sum += subset_weight(s, &WeightParams::new(k.clone(), int(0)));
                    }
                }
                out.push((i, j, sum, hit));
            }
        }
        out
    }

    #[test]
    fn subset_weights() {
        let p = params(ratio(-211, 80), int(0));
        assert_eq!(subset_weight(VertexSet::empty(4), &p), int(1));
        let three = VertexSet::from_vertices(4, [0, 1, 2]).unwrap();
        assert_eq!(subset_weight(three, &p), int(1));
        let two = VertexSet::from_vertices(4, [0, 3]).unwrap();
        assert_eq!(subset_weight(two, &p), ratio(-211, 80));
    }

    #[test]
    fn census_cells() {
        let k3 = weighted_table(&make_family(Complete, 3).unwrap());
        assert_eq!(k3.cell(0, 1), AffineCell { a: 0, b: 0, c: 1 });
        assert_eq!(k3.cell(0, 1).value(&params(int(0), int(-1))), int(-1));
        assert_eq!(k3.cell(2, 1), AffineCell { a: 3, b: 0, c: 0 });
        assert_eq!(k3.cell(1, 2), AffineCell { a: 0, b: 3, c: 0 });

        let g = parse_graph_spec("P2+K1").unwrap();
        let t = weighted_table(&g);
        assert_eq!(t.cell(0, 1), AffineCell { a: 1, b: 0, c: 0 });
        assert_eq!(t.cell(2, 1), AffineCell { a: 0, b: 0, c: 1 });

        let fig2 = weighted_table(&parse_graph_spec("edges:5:0-4").unwrap());
        assert_eq!(fig2.cell(1, 2), AffineCell { a: 0, b: 6, c: 0 });
        assert_eq!(fig2.cell(0, 0), AffineCell { a: 1, b: 0, c: 0 });
        assert_eq!(fig2.cell(3, 0), AffineCell::default());
    }

    #[test]
    fn table_agrees_with_direct_weighted_sum() {
        let k = ratio(-5, 7);
        for spec in ["edges:5:0-4", "K3", "P2+K1", "C4", "S4+E1"] {
            let g = parse_graph_spec(spec).unwrap();
            let t = weighted_table(&g);
            for (i, j, sum, hit) in brute_cells(&g, &k) {
                let cell = t.cell(i, j);
                if j == 0 {
                    continue;
                }
                assert_eq!(cell.is_unrealized(), !hit, "{spec} ({i},{j})");
                if hit {
                    assert_eq!(cell.value(&params(k.clone(), int(99))), sum, "{spec} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn unweighted_params_recover_boundary_polynomial() {
        for spec in ["K4", "S5", "P2+K1", "C5+P2", "edges:5:0-4"] {
            let g = parse_graph_spec(spec).unwrap();
            assert_eq!(
                instantiate(&weighted_table(&g), &WeightParams::unweighted()),
                boundary_polynomial(&g)
            );
        }
    }

    #[test]
    fn single_edge_diagonal_sums() {
        let g = parse_graph_spec("edges:5:0-4").unwrap();
        let t = weighted_table(&g);
        // forms derived from the census
        assert_eq!(t.diagonal_form(1), AffineForm::new(int(3), int(0), int(0)));
        assert_eq!(t.diagonal_form(3), AffineForm::new(int(4), int(6), int(1)));
        assert_eq!(t.diagonal_form(5), AffineForm::new(int(1), int(2), int(3)));
        let p = params(ratio(-211, 80), ratio(299, 120));
        let diag = instantiate(&t, &p).diagonal();
        assert_eq!(diag.coeff(1), int(3));
        assert_eq!(diag.coeff(3), ratio(-28, 3));
        assert_eq!(diag.coeff(5), ratio(16, 5));
    }

    #[test]
    fn lienard_f_examples() {
        let e1 = make_family(Empty, 1).unwrap();
        let x = UnivariatePolynomial::monomial(1, int(1));
        assert_eq!(weighted_lienard_f(&e1, &params(ratio(3, 7), int(-9))), x);

        let k3 = make_family(Complete, 3).unwrap();
        let f = weighted_lienard_f(&k3, &params(int(0), int(-1)));
        assert_eq!(f, UnivariatePolynomial::from_coeffs(alloc::vec![int(0), int(-1), int(-2), int(4)]));

        let g = parse_graph_spec("P2+K1").unwrap();
        let f = weighted_lienard_f(&g, &params(int(0), int(-2)));
        assert_eq!(f, UnivariatePolynomial::from_coeffs(alloc::vec![int(0), int(1), int(2), int(-1)]));
        assert!(f.coeff(0) == int(0));
    }

    #[test]
    fn named_parts_must_sum_to_u() {
        assert!(WeightParams::with_parts(int(1), ratio(299, 120), alloc::vec![ratio(299, 120)]).is_ok());
        assert!(WeightParams::with_parts(int(1), int(2), alloc::vec![int(1), int(2)]).is_err());
    }

    #[test]
    fn from_cells_rejects_mixed_cells() {
        let bad = AffineCell { a: 1, b: 0, c: 1 };
        assert!(WeightedTable::from_cells(3, &[(1, 1, bad)]).is_err());
        let row0 = AffineCell { a: 2, b: 0, c: 0 };
        assert!(WeightedTable::from_cells(3, &[(2, 0, row0)]).is_err());
        assert!(WeightedTable::from_cells(3, &[(0, 0, AffineCell { a: 1, b: 0, c: 0 })]).is_ok());
    }
}
