use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::radius::radius_forms;
use crate::graph::Graph;
use crate::poly::UnivariatePolynomial;
use crate::rational::signum;
use crate::weighted::{weighted_table, AffineForm, WeightParams};
use crate::{Error, Result};

/// `form(k, u) = target`, the constraint on the coefficient of `ρ^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitEquation {
    pub degree: usize,
    pub form: AffineForm,
    pub target: BigRational,
}

impl FitEquation {
    fn row(&self) -> [BigRational; 3] {
        [
            self.form.k_coeff.clone(),
            self.form.u_coeff.clone(),
            &self.target - &self.form.constant,
        ]
    }
}

impl fmt::Display for FitEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[rho^{}] {} = {}", self.degree, self.form, self.target)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfeasibilityCertificate {
    pub equations: Vec<FitEquation>,
    /// Value the last equation's left side is forced to by the others.
    pub implied: BigRational,
    pub required: BigRational,
    pub message: String,
}

impl fmt::Display for InfeasibilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eqs: Vec<String> = self.equations.iter().map(|e| format!("{e}")).collect();
        write!(f, "{}; {}", self.message, eqs.join(" and "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitOutcome {
    Feasible {
        params: WeightParams,
        equations: Vec<FitEquation>,
        /// Unknowns the equations leave undetermined; these are set to 0.
        free: Vec<&'static str>,
    },
    Infeasible(InfeasibilityCertificate),
}

impl FitOutcome {
    pub fn params(&self) -> Option<&WeightParams> {
        match self {
            FitOutcome::Feasible { params, .. } => Some(params),
            FitOutcome::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&InfeasibilityCertificate> {
        match self {
            FitOutcome::Infeasible(c) => Some(c),
            FitOutcome::Feasible { .. } => None,
        }
    }
}

/// Solves for `(k, u)` so the radius polynomial of `g1` equals
/// `∏ (ρ − ρᵢ)`. Targets are squared radii.
pub fn fit_weight_params(g1: &Graph, squared_radii: &[BigRational]) -> Result<FitOutcome> {
    let m = g1.order();
    if m % 2 == 0 || m < 3 {
        return Err(Error::invalid(format!("fitting needs an odd order of at least 3, got {m}")));
    }
    let want = (m - 1) / 2;
    if squared_radii.len() != want {
        return Err(Error::invalid(format!(
            "order {m} takes {want} target radii, got {}",
            squared_radii.len()
        )));
    }
    if let Some(bad) = squared_radii.iter().find(|r| !r.is_positive()) {
        return Err(Error::invalid(format!("target radii must be positive, got {bad}")));
    }
    for (a, r) in squared_radii.iter().enumerate() {
        if squared_radii[..a].contains(r) {
            return Err(Error::invalid(format!("target radii must be distinct, {r} repeats")));
        }
    }

    let target = UnivariatePolynomial::from_roots(squared_radii);
    let equations: Vec<FitEquation> = radius_forms(&weighted_table(g1))
        .into_iter()
        .enumerate()
        .map(|(degree, form)| FitEquation {
            degree,
            form,
            target: target.coeff(degree),
        })
        .collect();

    let all: Vec<usize> = (0..equations.len()).collect();
    if let Some((k, u, free)) = solve(&equations, &all) {
        return Ok(FitOutcome::Feasible {
            params: WeightParams::new(k, u),
            equations,
            free,
        });
    }
    Ok(FitOutcome::Infeasible(certificate(&equations)))
}

type Solution = (BigRational, BigRational, Vec<&'static str>);

/// Exact elimination on the chosen rows; free unknowns become 0.
fn solve(eqs: &[FitEquation], pick: &[usize]) -> Option<Solution> {
    let mut rows: Vec<[BigRational; 3]> = pick.iter().map(|&i| eqs[i].row()).collect();
    let mut pivots = vec![];
    let mut r = 0;
    for col in 0..2 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        for c in 0..3 {
            rows[r][c] = &rows[r][c] / &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in 0..3 {
                    let delta = &f * &rows[r][c];
                    rows[i][c] -= delta;
                }
            }
        }
        pivots.push((col, r));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[2].is_zero()) {
        return None;
    }
    let mut vals = [BigRational::zero(), BigRational::zero()];
    let mut free = vec![];
    for (col, name) in [(0, "k"), (1, "u")] {
        match pivots.iter().find(|(c, _)| *c == col) {
            Some(&(_, row)) => vals[col] = rows[row][2].clone(),
            None => free.push(name),
        }
    }
    let [k, u] = vals;
    Some((k, u, free))
}

fn certificate(eqs: &[FitEquation]) -> InfeasibilityCertificate {
    let n = eqs.len();
    let alone_ok: Vec<bool> = (0..n).map(|i| solve(eqs, &[i]).is_some()).collect();
    let desc: Vec<usize> = (0..n).rev().collect();

    let mut pairs = vec![];
    for (a, &i) in desc.iter().enumerate() {
        for &j in &desc[a + 1..] {
            pairs.push((i, j));
        }
    }
    for &(i, j) in &pairs {
        if alone_ok[i] && alone_ok[j] && solve(eqs, &[i, j]).is_none() {
            let a = explain(eqs, &[i], j);
            let b = explain(eqs, &[j], i);
            let plain = |c: &InfeasibilityCertificate| c.implied.is_positive() && c.required.is_negative();
            return if plain(&a) || !plain(&b) { a } else { b };
        }
    }
    if let Some(bad) = (0..n).rev().find(|&i| !alone_ok[i]) {
        let partner = (0..n).rev().find(|&i| i != bad).unwrap_or(bad);
        let mut c = explain(eqs, &[], bad);
        if partner != bad {
            c.equations.insert(0, eqs[partner].clone());
        }
        return c;
    }
    for &(i, j) in &pairs {
        for l in (0..n).rev() {
            if l != i && l != j && solve(eqs, &[i, j]).is_some() && solve(eqs, &[i, j, l]).is_none() {
                return explain(eqs, &[i, j], l);
            }
        }
    }
    unreachable!("an inconsistent system in two unknowns has an inconsistent subset of size at most 3")
}

/// Substitutes the solution of `given` into equation `last`.
fn explain(eqs: &[FitEquation], given: &[usize], last: usize) -> InfeasibilityCertificate {
    let e = &eqs[last];
    let implied = if given.is_empty() {
        e.form.constant.clone()
    } else {
        implied_value(eqs, given, e)
    };
    let required = e.target.clone();
    let word = |q: &BigRational| match signum(q) {
        -1 => "negative",
        0 => "zero",
        _ => "positive",
    };
    let message = if signum(&implied) != signum(&required) && signum(&implied) != 0 && signum(&required) != 0 {
        format!("sign contradiction ({} = {})", word(&implied), word(&required))
    } else {
        format!("value contradiction ({implied} = {required})")
    };
    let mut equations: Vec<FitEquation> = given.iter().map(|&i| eqs[i].clone()).collect();
    equations.push(e.clone());
    InfeasibilityCertificate {
        equations,
        implied,
        required,
        message,
    }
}

/// The value `e.form` must take on every solution of the `given` rows. The
/// caller guarantees this is unique, i.e. `e`'s variable part lies in the
/// span of the given rows.
fn implied_value(eqs: &[FitEquation], given: &[usize], e: &FitEquation) -> BigRational {
    // Any solution of the given rows works, since e's variable part is a
    // combination of theirs.
    let (k, u, _) = solve(eqs, given).expect("given rows are consistent");
    e.form.eval(&WeightParams::new(k, u))
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
    fn single_edge_fit() {
        let out = fit_weight_params(&g("edges:5:0-4"), &[ratio(1, 2), int(3)]).unwrap();
        match out {
            FitOutcome::Feasible { params, free, .. } => {
                assert_eq!(params.k, ratio(-211, 80));
                assert_eq!(params.u, ratio(299, 120));
                assert!(free.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn complete_five_is_infeasible() {
        let out = fit_weight_params(&g("K5"), &[int(1), int(4)]).unwrap();
        let c = out.certificate().expect("infeasible");
        assert_eq!(c.equations.len(), 2);
        assert_eq!(c.message, "sign contradiction (positive = negative)");
        let degrees: Vec<usize> = c.equations.iter().map(|e| e.degree).collect();
        assert_eq!(degrees, vec![0, 1]);
    }

    #[test]
    fn empty_five_is_infeasible() {
        let out = fit_weight_params(&g("E5"), &[int(1), int(4)]).unwrap();
        let c = out.certificate().expect("infeasible");
        assert_eq!(c.equations.len(), 2);
        assert_eq!(c.message, "sign contradiction (positive = negative)");
        assert_eq!(c.equations[0].degree, 2);
        assert_eq!(c.equations[1].degree, 1);
    }

    #[test]
    fn constant_equation_alone_can_be_false() {
        // E3: the ρ^0 coefficient is the constant 3/2 but must equal −ρ₁
        let c = fit_weight_params(&g("E3"), &[int(2)]).unwrap();
        let c = c.certificate().expect("infeasible").clone();
        assert_eq!(c.message, "sign contradiction (positive = negative)");
        assert_eq!((c.implied, c.required), (ratio(3, 2), int(-2)));
        assert_eq!(c.equations.len(), 2);
    }

    #[test]
    fn underdetermined_sets_free_to_zero() {
        let eq = |k: i64, u: i64, t: i64| FitEquation {
            degree: 0,
            form: AffineForm::new(int(0), int(k), int(u)),
            target: int(t),
        };
        let eqs = [eq(2, 4, 6), eq(1, 2, 3)];
        let (k, u, free) = solve(&eqs, &[0, 1]).unwrap();
        assert_eq!((k, u, free), (int(3), int(0), vec!["u"]));
        let eqs = [eq(0, 2, 6)];
        assert_eq!(solve(&eqs, &[0]).unwrap(), (int(0), int(3), vec!["k"]));
        let eqs = [eq(1, 1, 1), eq(1, -1, 1), eq(2, 1, 5)];
        assert!(solve(&eqs, &[0, 1, 2]).is_none());
        let c = certificate(&eqs);
        assert_eq!(c.equations.len(), 3);
    }

    #[test]
    fn argument_checks() {
        assert!(fit_weight_params(&g("K4"), &[int(1)]).is_err());
        assert!(fit_weight_params(&g("K5"), &[int(1)]).is_err());
        assert!(fit_weight_params(&g("K5"), &[int(1), int(1)]).is_err());
        assert!(fit_weight_params(&g("K5"), &[int(1), int(-1)]).is_err());
    }
}
