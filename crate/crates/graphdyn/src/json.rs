//! JSON encodings of the core types.

use graphdyn_core::dynsys::{
    EigenValues, EquilibriumClass, FitEquation, GeneralLyapunovResult, InfeasibilityCertificate,
    LyapunovResult, PlanarSystem, PositiveRoot, RadiusPolynomial,
};
use graphdyn_core::simulate::{CycleReport, IntegratorConfig, LimitCycleEstimate, Quadrature};
use graphdyn_core::weighted::{AffineForm, WeightParams, WeightedTable};
use graphdyn_core::{BigInt, BigRational, BivariatePolynomial, UnivariatePolynomial};
use serde_json::{json, Value};

pub const GENERATOR: &str = concat!("graphdyn ", env!("CARGO_PKG_VERSION"));

pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn integer(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

/// `{"maxdeg", "terms": [{"i", "j", "num", "den"}]}`, terms by `(i + j, i)`.
pub fn polynomial(p: &BivariatePolynomial) -> Value {
    let mut terms = p.terms();
    terms.sort_by_key(|(i, j, _)| (i + j, *i));
    let terms: Vec<Value> = terms
        .iter()
        .map(|(i, j, c)| json!({"i": i, "j": j, "num": integer(c.numer()), "den": integer(c.denom())}))
        .collect();
    json!({"maxdeg": p.maxdeg(), "terms": terms})
}

/// Ascending coefficients of a polynomial in one variable.
pub fn univariate(p: &UnivariatePolynomial, var: &str) -> Value {
    json!({
        "var": var,
        "coeffs": p.coeffs().iter().map(rational).collect::<Vec<_>>(),
        "rendered": p.render_in(var),
    })
}

pub fn weighted_table(t: &WeightedTable) -> Value {
    let cells: Vec<Value> = t
        .cells()
        .map(|(i, j, c)| json!({"i": i, "j": j, "a": c.a, "b": c.b, "c": c.c}))
        .collect();
    json!({"order": t.order(), "cells": cells})
}

pub fn weight_params(p: &WeightParams) -> Value {
    let parts: Vec<Value> = p.named_parts().unwrap_or(&[]).iter().map(rational).collect();
    json!({"k": rational(&p.k), "u": rational(&p.u), "named_parts": parts})
}

pub fn affine_form(f: &AffineForm) -> Value {
    json!({
        "constant": rational(&f.constant),
        "k": rational(&f.k_coeff),
        "u": rational(&f.u_coeff),
        "rendered": f.render(),
    })
}

pub fn system(s: &PlanarSystem) -> Value {
    json!({"label": s.label, "fx": polynomial(&s.fx), "fy": polynomial(&s.fy)})
}

pub fn lyapunov(r: &LyapunovResult) -> Value {
    json!({
        "pi_coefficient": rational(&r.pi_coefficient),
        "sign": r.sign.name(),
        "kind": r.kind.name(),
    })
}

pub fn general_lyapunov(r: &GeneralLyapunovResult) -> Value {
    json!({
        "scaled_coefficient": rational(&r.scaled_coefficient),
        "sigma": rational(&r.sigma),
        "pi_coefficient": r.pi_coefficient.as_ref().map(rational),
        "pi_coefficient_decimal": r.pi_coefficient_decimal,
        "sign": r.sign.name(),
        "kind": r.kind.name(),
    })
}

pub fn equilibrium(c: &EquilibriumClass) -> Value {
    let eigenvalues = match &c.eigenvalues {
        EigenValues::RealExact(a, b) => json!({"type": "real_exact", "values": [rational(a), rational(b)]}),
        EigenValues::Real(a, b) => json!({"type": "real", "values": [a, b]}),
        EigenValues::Complex { re, im } => json!({"type": "complex", "re": rational(re), "im": im}),
    };
    json!({
        "kind": c.kind.name(),
        "eigenvalues": eigenvalues,
        "trace": rational(&c.trace),
        "determinant": rational(&c.determinant),
        "discriminant": rational(&c.discriminant),
    })
}

pub fn fit_equation(e: &FitEquation) -> Value {
    json!({
        "degree": e.degree,
        "form": affine_form(&e.form),
        "target": rational(&e.target),
        "rendered": e.to_string(),
    })
}

pub fn certificate(c: &InfeasibilityCertificate) -> Value {
    json!({
        "message": c.message,
        "implied": rational(&c.implied),
        "required": rational(&c.required),
        "equations": c.equations.iter().map(fit_equation).collect::<Vec<_>>(),
    })
}

pub fn radius_polynomial(r: &RadiusPolynomial) -> Value {
    json!({
        "m": r.m,
        "polynomial": univariate(&r.poly, "rho"),
        "affine_coefficients": r.affine_coeffs.iter().map(affine_form).collect::<Vec<_>>(),
    })
}

pub fn positive_root(r: &PositiveRoot) -> Value {
    json!({
        "rho": r.value,
        "radius": r.radius(),
        "multiplicity": r.multiplicity,
        "enclosure": [rational(&r.enclosure.0), rational(&r.enclosure.1)],
        "exact": r.exact.as_ref().map(rational),
    })
}

pub fn config(c: &IntegratorConfig) -> Value {
    json!({
        "method": c.method.name(),
        "step": c.step,
        "tolerance": c.tolerance,
        "max_time": c.max_time,
        "direction": c.direction.name(),
    })
}

pub fn cycle(c: &LimitCycleEstimate) -> Value {
    json!({
        "section_radius": c.section_radius,
        "mean_radius": c.mean_radius,
        "radius_spread": c.radius_spread,
        "period": c.period,
        "stability": c.stability.name(),
        "section_crossings_used": c.section_crossings_used,
        "probe_displacements": [c.probe_displacements.0, c.probe_displacements.1],
    })
}

pub fn cycle_report(r: &CycleReport) -> Value {
    let inconclusive: Vec<Value> = r
        .inconclusive
        .iter()
        .map(|s| json!({"seed": s.seed, "reason": s.reason}))
        .collect();
    json!({
        "cycles": r.cycles.iter().map(cycle).collect::<Vec<_>>(),
        "inconclusive": inconclusive,
        "config": config(&r.config),
    })
}

pub fn quadrature(q: &Quadrature) -> Value {
    json!({"value": q.value, "abs_error_estimate": q.abs_error_estimate})
}

/// Adds the `generator` field to a top-level object.
pub fn stamp(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("generator".into(), Value::String(GENERATOR.into()));
    }
    v
}
