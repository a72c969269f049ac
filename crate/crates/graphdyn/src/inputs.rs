//! Command-line values: graphs, rationals, radius lists and system choices.

use std::fs;

use clap::{Args, ValueEnum};
use graphdyn_core::dynsys::{
    build_circle_system1, build_circle_system2, build_eps_lienard, build_example1,
    build_general_hopf, build_hopf, build_lienard, HopfSpec, PlanarSystem,
};
use graphdyn_core::graph::{parse_edge_list, parse_graph_spec};
use graphdyn_core::rational::parse_rational;
use graphdyn_core::weighted::WeightParams;
use graphdyn_core::{BigRational, Graph};
use num_traits::{One, Zero};

use crate::CliError;

/// A graph spec, or `@path` naming an edge-list file.
pub fn graph(text: &str) -> Result<Graph, CliError> {
    match text.strip_prefix('@') {
        Some(path) => {
            let body = fs::read_to_string(path).map_err(|e| CliError::User(format!("cannot read {path}: {e}")))?;
            Ok(parse_edge_list(&body)?)
        }
        None => Ok(parse_graph_spec(text)?),
    }
}

pub fn rational(text: &str) -> Result<BigRational, CliError> {
    Ok(parse_rational(text)?)
}

pub fn rational_list(text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split(',').map(rational).collect()
}

/// Squares of radii given as rationals or as `sqrt(q)`.
pub fn squared_radii(text: &str) -> Result<Vec<BigRational>, CliError> {
    text.split(',')
        .map(|item| {
            let item = item.trim();
            match item.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
                Some(inner) => rational(inner),
                None => {
                    let r = rational(item)?;
                    Ok(&r * &r)
                }
            }
        })
        .collect()
}

pub fn float_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::User(format!("not a number: '{s}'")))
        })
        .collect()
}

pub fn weight_params(k: Option<&str>, u: Option<&str>) -> Result<Option<WeightParams>, CliError> {
    match (k, u) {
        (None, None) => Ok(None),
        (k, u) => {
            let k = k.map(rational).transpose()?.unwrap_or_else(BigRational::one);
            let u = u.map(rational).transpose()?.unwrap_or_else(BigRational::zero);
            Ok(Some(WeightParams::new(k, u)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemKind {
    Example1,
    Lienard,
    EpsLienard,
    Circle1,
    Circle2,
    Hopf,
    HopfGeneral,
}

/// Arguments shared by `classify` and `simulate`.
#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// System family
    #[arg(value_enum)]
    pub system: SystemKind,
    /// Graph of the circle systems
    #[arg(long)]
    pub g: Option<String>,
    /// First graph
    #[arg(long)]
    pub g1: Option<String>,
    /// Second graph
    #[arg(long)]
    pub g2: Option<String>,
    /// Weight of even subsets
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    /// Value of unrealized cells
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<String>,
    /// Scale of the damping term
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<String>,
    /// Bifurcation parameter
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Linear part a1,a2,a3,a4
    #[arg(long, allow_hyphen_values = true)]
    pub alphas: Option<String>,
}

fn required<'a>(v: &'a Option<String>, flag: &str, system: &str) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::User(format!("{system} needs --{flag}")))
}

impl SystemArgs {
    pub fn build(&self) -> Result<PlanarSystem, CliError> {
        let name = self.system.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        let name = name.as_str();
        let params = || -> Result<WeightParams, CliError> {
            Ok(weight_params(self.k.as_deref(), self.u.as_deref())?.unwrap_or_else(WeightParams::unweighted))
        };
        Ok(match self.system {
            SystemKind::Example1 => {
                build_example1(&graph(required(&self.g1, "g1", name)?)?, &graph(required(&self.g2, "g2", name)?)?)
            }
            SystemKind::Lienard => {
                let g2 = graph(self.g2.as_deref().unwrap_or("E1"))?;
                build_lienard(&graph(required(&self.g1, "g1", name)?)?, &g2, &params()?)
            }
            SystemKind::EpsLienard => build_eps_lienard(
                &graph(required(&self.g1, "g1", name)?)?,
                &params()?,
                &rational(required(&self.eps, "eps", name)?)?,
            )?,
            SystemKind::Circle1 => build_circle_system1(&graph(required(&self.g, "g", name)?)?),
            SystemKind::Circle2 => build_circle_system2(&graph(required(&self.g, "g", name)?)?),
            SystemKind::Hopf => build_hopf(
                &graph(required(&self.g1, "g1", name)?)?,
                &graph(required(&self.g2, "g2", name)?)?,
                &rational(required(&self.alpha, "alpha", name)?)?,
            )?,
            SystemKind::HopfGeneral => {
                let a = rational_list(required(&self.alphas, "alphas", name)?)?;
                let [a1, a2, a3, a4]: [BigRational; 4] = a
                    .try_into()
                    .map_err(|_| CliError::User("--alphas takes four values".into()))?;
                build_general_hopf(
                    &graph(required(&self.g1, "g1", name)?)?,
                    &graph(required(&self.g2, "g2", name)?)?,
                    &HopfSpec::new(a1, a2, a3, a4)?,
                )?
            }
        })
    }

    /// The equilibrium the construction is built around.
    pub fn default_point(&self) -> (BigRational, BigRational) {
        match self.system {
            SystemKind::Example1 => (BigRational::one(), BigRational::one()),
            _ => (BigRational::zero(), BigRational::zero()),
        }
    }
}
