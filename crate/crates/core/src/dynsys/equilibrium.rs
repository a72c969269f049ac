use alloc::format;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::PlanarSystem;
use crate::rational::{exact_sqrt, signum};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquilibriumKind {
    Saddle,
    StableNode,
    UnstableNode,
    StableFocus,
    UnstableFocus,
    /// Purely imaginary eigenvalues; a statement about the linearization only.
    CenterLinear,
    /// Some eigenvalue is zero.
    Degenerate,
}

impl EquilibriumKind {
    pub fn name(self) -> &'static str {
        match self {
            EquilibriumKind::Saddle => "saddle",
            EquilibriumKind::StableNode => "stable_node",
            EquilibriumKind::UnstableNode => "unstable_node",
            EquilibriumKind::StableFocus => "stable_focus",
            EquilibriumKind::UnstableFocus => "unstable_focus",
            EquilibriumKind::CenterLinear => "center_linear",
            EquilibriumKind::Degenerate => "degenerate",
        }
    }
}

/// Eigenvalues of the 2×2 Jacobian. Real pairs are exact when the
/// discriminant is a rational square.
#[derive(Debug, Clone, PartialEq)]
pub enum EigenValues {
    RealExact(BigRational, BigRational),
    Real(f64, f64),
    /// `re ± i·im`
    Complex { re: BigRational, im: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumClass {
    pub kind: EquilibriumKind,
    pub eigenvalues: EigenValues,
    pub trace: BigRational,
    pub determinant: BigRational,
    /// `trace² − 4·det`; its exact sign separates nodes from foci.
    pub discriminant: BigRational,
}

pub fn classify_equilibrium(
    s: &PlanarSystem,
    point: (&BigRational, &BigRational),
) -> Result<EquilibriumClass> {
    let (x, y) = point;
    let (rx, ry) = s.eval(x, y);
    if !rx.is_zero() || !ry.is_zero() {
        return Err(Error::NotEquilibrium {
            residual: format!("({rx}, {ry})"),
        });
    }
    let j = s.jacobian(x, y);
    let trace = &j[0][0] + &j[1][1];
    let det = &j[0][0] * &j[1][1] - &j[0][1] * &j[1][0];
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    let disc = &trace * &trace - &four * &det;

    let eigenvalues = if disc.is_negative() {
        let im = (-&disc).to_f64().unwrap_or(f64::NAN);
        EigenValues::Complex {
            re: &trace / &two,
            im: num_traits::Float::sqrt(im) / 2.0,
        }
    } else if let Some(root) = exact_sqrt(&disc) {
        EigenValues::RealExact((&trace - &root) / &two, (&trace + &root) / &two)
    } else {
        let t = trace.to_f64().unwrap_or(f64::NAN);
        let r = num_traits::Float::sqrt(disc.to_f64().unwrap_or(f64::NAN));
        EigenValues::Real((t - r) / 2.0, (t + r) / 2.0)
    };

    let kind = match (signum(&det), signum(&disc), signum(&trace)) {
        (0, _, _) => EquilibriumKind::Degenerate,
        (-1, _, _) => EquilibriumKind::Saddle,
        (_, -1, 0) => EquilibriumKind::CenterLinear,
        (_, -1, -1) => EquilibriumKind::StableFocus,
        (_, -1, _) => EquilibriumKind::UnstableFocus,
        (_, _, -1) => EquilibriumKind::StableNode,
        _ => EquilibriumKind::UnstableNode,
    };

    Ok(EquilibriumClass {
        kind,
        eigenvalues,
        trace,
        determinant: det,
        discriminant: disc,
    })
}
