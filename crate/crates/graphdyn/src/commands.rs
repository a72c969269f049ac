//! One function per subcommand. Each returns the text for the terminal and
//! the JSON document; the caller decides where they go.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use graphdyn_core::boundary::{boundary_polynomial, coefficient};
use graphdyn_core::dynsys::{
    classify_equilibrium, fit_weight_params, general_lyapunov_number, lyapunov_from_coefficients,
    lyapunov_number, positive_roots, radius_polynomial, FitOutcome, HopfCoefficients, HopfSpec,
    LyapunovResult, PositiveRoot, Sign,
};
use graphdyn_core::simulate::{detect_limit_cycles, integrate, Direction, IntegratorConfig, Method, Trajectory};
use graphdyn_core::weighted::{instantiate, weighted_table};
use graphdyn_core::BigRational;
use serde_json::{json, Value};

use crate::inputs::{self, SystemArgs};
use crate::{json as js, CliError};

pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// Whether some checked claim failed; only `repro` sets it.
    pub failed: bool,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Self { text, json: js::stamp(json), failed: false }
    }
}

pub fn poly(spec: &str, weighted: bool, k: Option<&str>, u: Option<&str>, diag: bool) -> Result<Outcome, CliError> {
    let g = inputs::graph(spec)?;
    let graph = json!({"spec": spec, "order": g.order()});
    if !weighted {
        let p = boundary_polynomial(&g);
        let (text, extra) = if diag {
            let d = p.diagonal();
            (d.render_in("x"), js::univariate(&d, "x"))
        } else {
            (p.render(), Value::Null)
        };
        return Ok(Outcome::new(
            text,
            json!({"graph": graph, "polynomial": js::polynomial(&p), "rendered": p.render(), "diagonal": extra}),
        ));
    }
    let params = inputs::weight_params(k, u)?
        .ok_or_else(|| CliError::User("--weighted needs --k and --u".into()))?;
    let table = weighted_table(&g);
    let p = instantiate(&table, &params);
    let d = p.diagonal();
    let text = if diag { d.render_in("x") } else { p.render() };
    Ok(Outcome::new(
        text,
        json!({
            "graph": graph,
            "params": js::weight_params(&params),
            "table": js::weighted_table(&table),
            "polynomial": js::polynomial(&p),
            "rendered": p.render(),
            "diagonal": js::univariate(&d, "x"),
        }),
    ))
}

pub fn coeff(spec: &str, i: usize, j: usize) -> Result<Outcome, CliError> {
    let g = inputs::graph(spec)?;
    let v = coefficient(&g, i, j)?;
    Ok(Outcome::new(v.to_string(), json!({"graph": spec, "i": i, "j": j, "value": v})))
}

pub fn classify(system: &SystemArgs, at: Option<&str>) -> Result<Outcome, CliError> {
    let s = system.build()?;
    let (x, y) = match at {
        Some(text) => {
            let v = inputs::rational_list(text)?;
            match <[BigRational; 2]>::try_from(v) {
                Ok([x, y]) => (x, y),
                Err(_) => return Err(CliError::User("--at takes two values x,y".into())),
            }
        }
        None => system.default_point(),
    };
    let c = classify_equilibrium(&s, (&x, &y))?;
    let text = format!(
        "{} at ({x}, {y}): trace {}, determinant {}, discriminant {}",
        c.kind.name(),
        c.trace,
        c.determinant,
        c.discriminant
    );
    Ok(Outcome::new(
        text,
        json!({"system": js::system(&s), "point": [js::rational(&x), js::rational(&y)], "classification": js::equilibrium(&c)}),
    ))
}

pub fn lyapunov_text(coefficient: &str, sign: Sign, kind: &str) -> String {
    match sign {
        Sign::Zero => format!("0, {kind}"),
        _ => format!("{coefficient} · π, {kind}"),
    }
}

fn plain_lyapunov(r: &LyapunovResult) -> String {
    lyapunov_text(&r.pi_coefficient.to_string(), r.sign, r.kind.name())
}

pub fn lyapunov(g1: &str, g2: &str, general: Option<&str>, allow_isolated: bool) -> Result<Outcome, CliError> {
    let (a, b) = (inputs::graph(g1)?, inputs::graph(g2)?);
    let graphs = json!({"g1": g1, "g2": g2});
    if let Some(alphas) = general {
        let v = inputs::rational_list(alphas)?;
        let [a1, a2, a3, a4]: [BigRational; 4] = v
            .try_into()
            .map_err(|_| CliError::User("--general takes four values a1,a2,a3,a4".into()))?;
        let spec = HopfSpec::new(a1, a2, a3, a4)?;
        let r = general_lyapunov_number(&a, &b, &spec)?;
        let coefficient = match &r.pi_coefficient {
            Some(q) => q.to_string(),
            None => r.pi_coefficient_decimal.clone(),
        };
        let text = lyapunov_text(&coefficient, r.sign, r.kind.name());
        return Ok(Outcome::new(text, json!({"graphs": graphs, "general": js::general_lyapunov(&r)})));
    }
    let r = if allow_isolated {
        lyapunov_from_coefficients(&HopfCoefficients::of(&a), &HopfCoefficients::of(&b))
    } else {
        lyapunov_number(&a, &b)?
    };
    Ok(Outcome::new(plain_lyapunov(&r), json!({"graphs": graphs, "lyapunov": js::lyapunov(&r)})))
}

fn roots_text(out: &mut String, roots: &[PositiveRoot]) {
    if roots.is_empty() {
        out.push_str("no positive roots\n");
    }
    for r in roots {
        let exact = r.exact.as_ref().map(|q| format!(" = {q}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "rho = {:.15}{exact} (radius {:.15}, multiplicity {})",
            r.value,
            r.radius(),
            r.multiplicity
        );
    }
}

pub fn radii(
    g1: &str,
    k: Option<&str>,
    u: Option<&str>,
    fit: Option<&str>,
    fit_squared: Option<&str>,
) -> Result<Outcome, CliError> {
    let g = inputs::graph(g1)?;
    let targets = match (fit, fit_squared) {
        (Some(_), Some(_)) => return Err(CliError::User("use only one of --fit and --fit-squared".into())),
        (Some(r), None) => Some(inputs::squared_radii(r)?),
        (None, Some(r)) => Some(inputs::rational_list(r)?),
        (None, None) => None,
    };
    let Some(targets) = targets else {
        let params = inputs::weight_params(k, u)?
            .ok_or_else(|| CliError::User("give --k and --u, or --fit".into()))?;
        let rp = radius_polynomial(&g, &params)?;
        let roots = positive_roots(&rp.poly)?;
        let mut text = format!("radius polynomial: {}\n", rp.poly.render_in("rho"));
        roots_text(&mut text, &roots);
        return Ok(Outcome::new(
            text.trim_end().to_string(),
            json!({
                "graph": g1,
                "params": js::weight_params(&params),
                "radius_polynomial": js::radius_polynomial(&rp),
                "roots": roots.iter().map(js::positive_root).collect::<Vec<_>>(),
            }),
        ));
    };
    let targets_json: Vec<Value> = targets.iter().map(js::rational).collect();
    match fit_weight_params(&g, &targets)? {
        FitOutcome::Feasible { params, equations, free } => {
            let rp = radius_polynomial(&g, &params)?;
            let roots = positive_roots(&rp.poly)?;
            let mut text = format!("k = {}, u = {}\n", params.k, params.u);
            if !free.is_empty() {
                let _ = writeln!(text, "underdetermined: {} set to 0", free.join(", "));
            }
            let _ = writeln!(text, "radius polynomial: {}", rp.poly.render_in("rho"));
            roots_text(&mut text, &roots);
            Ok(Outcome::new(
                text.trim_end().to_string(),
                json!({
                    "graph": g1,
                    "squared_radii": targets_json,
                    "feasible": true,
                    "params": js::weight_params(&params),
                    "free": free,
                    "equations": equations.iter().map(js::fit_equation).collect::<Vec<_>>(),
                    "radius_polynomial": js::radius_polynomial(&rp),
                    "roots": roots.iter().map(js::positive_root).collect::<Vec<_>>(),
                }),
            ))
        }
        FitOutcome::Infeasible(cert) => Ok(Outcome::new(
            format!("INFEASIBLE: {cert}"),
            json!({"graph": g1, "squared_radii": targets_json, "feasible": false, "certificate": js::certificate(&cert)}),
        )),
    }
}

/// Integrator choices for `simulate`.
pub struct SimulateOptions<'a> {
    pub seeds: &'a str,
    pub method: Method,
    pub step: f64,
    pub tolerance: f64,
    pub max_time: f64,
    pub duration: f64,
    pub backward: bool,
    pub seed_cap: usize,
}

/// `t,x,y` rows with 17 significant digits.
pub fn trajectory_csv(tr: &Trajectory) -> String {
    let mut out = String::from("t,x,y\n");
    for (t, x, y) in &tr.samples {
        let _ = writeln!(out, "{t:.16e},{x:.16e},{y:.16e}");
    }
    out
}

pub fn simulate(system: &SystemArgs, opts: &SimulateOptions<'_>, out_dir: Option<&Path>) -> Result<Outcome, CliError> {
    let s = system.build()?;
    let seeds = inputs::float_list(opts.seeds)?;
    if seeds.len() > opts.seed_cap {
        return Err(CliError::User(format!(
            "{} seeds exceed --seed-cap {}",
            seeds.len(),
            opts.seed_cap
        )));
    }
    let mut cfg = match opts.method {
        Method::Rk4Fixed => IntegratorConfig::rk4(opts.step, opts.max_time),
        Method::Rkf45Adaptive => IntegratorConfig::rkf45(opts.tolerance, opts.max_time),
    };
    if opts.backward {
        cfg = cfg.with_direction(Direction::Backward);
    }
    cfg.validate()?;
    let report = detect_limit_cycles(&s, &seeds, &cfg)?;
    let mut files = Vec::new();
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| CliError::User(format!("cannot create {}: {e}", dir.display())))?;
        let traj_cfg = cfg.with_max_time(opts.duration);
        for (n, seed) in seeds.iter().enumerate() {
            let tr = integrate(&s, (*seed, 0.0), &traj_cfg)?;
            let path = dir.join(format!("trajectory_{n}.csv"));
            write(&path, &trajectory_csv(&tr))?;
            files.push(json!({"seed": seed, "path": path.display().to_string(), "termination": tr.termination.name()}));
        }
    }
    let mut text = format!("{}\n", s.label);
    for c in &report.cycles {
        let _ = writeln!(
            text,
            "{} cycle: mean radius {:.6}, section radius {:.6}, period {:.6}",
            c.stability.name(),
            c.mean_radius,
            c.section_radius,
            c.period
        );
    }
    for i in &report.inconclusive {
        let _ = writeln!(text, "seed {}: inconclusive, {}", i.seed, i.reason);
    }
    if report.cycles.is_empty() && report.inconclusive.is_empty() {
        text.push_str("no cycles found\n");
    }
    let doc = json!({
        "system": js::system(&s),
        "seeds": seeds,
        "report": js::cycle_report(&report),
        "trajectories": files,
    });
    let outcome = Outcome::new(text.trim_end().to_string(), doc);
    if let Some(dir) = out_dir {
        write(&dir.join("cycles.json"), &pretty(&outcome.json))?;
    }
    Ok(outcome)
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn write(path: &Path, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|e| CliError::User(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyapunov_lines() {
        assert_eq!(lyapunov("C5", "C5", None, false).unwrap().text, "15/2 · π, subcritical");
        assert_eq!(lyapunov("K4", "S2+2*P2", None, false).unwrap().text, "-27 · π, supercritical");
        assert_eq!(lyapunov("K4", "K4", None, false).unwrap().text, "0, inconclusive");
        assert!(lyapunov("K4", "E2", None, false).is_err());
        assert!(lyapunov("K4", "E2", None, true).is_ok());
    }

    #[test]
    fn radii_forward_and_fit() {
        let o = radii("edges:5:0-4", Some("-211/80"), Some("299/120"), None, None).unwrap();
        assert!(o.text.contains("= 1/2") && o.text.contains("= 3"), "{}", o.text);
        let o = radii("edges:5:0-4", None, None, Some("sqrt(1/2),sqrt(3)"), None).unwrap();
        assert!(o.text.starts_with("k = -211/80, u = 299/120"), "{}", o.text);
        let o = radii("E5", None, None, Some("1,2"), None).unwrap();
        assert!(o.text.starts_with("INFEASIBLE:") && o.text.contains("positive = negative"), "{}", o.text);
        assert!(radii("K4", Some("1"), Some("0"), None, None).is_err());
    }

    #[test]
    fn csv_has_seventeen_digits() {
        let line = format!("{:.16e}", 0.1f64);
        assert_eq!(line, "1.0000000000000001e-1");
    }
}
