use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::integrator::{Direction, Flow, IntegratorConfig};
use super::poincare::{first_return, ReturnFailure, ReturnHit};
use crate::dynsys::PlanarSystem;
use crate::{Error, Result};

/// Successive return-map iterates closer than this (relative) count as converged.
pub const CONVERGENCE_TOL: f64 = 1e-8;
/// Candidates closer than this (relative to `max(1, r)`) are merged.
pub const MERGE_TOL: f64 = 1e-4;
/// Relative offset of the two probes used to read off stability.
pub const STABILITY_PROBE: f64 = 1e-3;

/// Probe displacements below this (relative) are treated as zero.
pub const FLAT_TOL: f64 = 1e-11;

const MAX_ITERATIONS: usize = 60;
const ORIGIN_FLOOR: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleStability {
    Stable,
    Unstable,
    /// Attracting on one side and repelling on the other.
    SemiStable,
}

impl CycleStability {
    pub fn name(self) -> &'static str {
        match self {
            CycleStability::Stable => "stable",
            CycleStability::Unstable => "unstable",
            CycleStability::SemiStable => "semi_stable",
        }
    }

    fn reversed(self) -> Self {
        match self {
            CycleStability::Stable => CycleStability::Unstable,
            CycleStability::Unstable => CycleStability::Stable,
            CycleStability::SemiStable => CycleStability::SemiStable,
        }
    }
}

/// A periodic orbit located as a fixed point of the return map on the
/// positive x-axis. Stability always refers to forward time.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitCycleEstimate {
    /// Where the orbit crosses the positive x-axis.
    pub section_radius: f64,
    /// Time average of `|(x, y)|` over one period.
    pub mean_radius: f64,
    /// Half the range of `|(x, y)|` over one period.
    pub radius_spread: f64,
    pub period: f64,
    pub stability: CycleStability,
    /// Return-map evaluations spent locating and classifying the orbit.
    pub section_crossings_used: usize,
    /// Displacement `P(r) − r` just inside and just outside the orbit, in
    /// the integration direction.
    pub probe_displacements: (f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct InconclusiveSeed {
    pub seed: f64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport {
    /// Ascending by section radius.
    pub cycles: Vec<LimitCycleEstimate>,
    pub inconclusive: Vec<InconclusiveSeed>,
    pub config: IntegratorConfig,
}

struct ReturnMap<'a> {
    flow: Flow,
    cfg: &'a IntegratorConfig,
    evaluations: usize,
}

impl ReturnMap<'_> {
    fn hit(&mut self, r: f64) -> core::result::Result<ReturnHit, ReturnFailure> {
        self.evaluations += 1;
        first_return(&self.flow, self.cfg, r)
    }

    fn displacement(&mut self, r: f64) -> core::result::Result<f64, ReturnFailure> {
        self.hit(r).map(|h| h.x - r)
    }
}

enum SeedOutcome {
    Converged(f64),
    Failed(String),
}

/// Steffensen-accelerated fixed-point iteration of the return map, so both
/// attracting and repelling orbits are reachable from a seed.
fn iterate_seed(map: &mut ReturnMap<'_>, seed: f64) -> SeedOutcome {
    let mut r = seed;
    for _ in 0..MAX_ITERATIONS {
        let p1 = match map.hit(r) {
            Ok(h) => h.x,
            Err(e) => return SeedOutcome::Failed(e.describe().into()),
        };
        if (p1 - r).abs() <= CONVERGENCE_TOL * r {
            return SeedOutcome::Converged(p1);
        }
        let p2 = match map.hit(p1) {
            Ok(h) => h.x,
            Err(_) => p1,
        };
        let denom = p2 - 2.0 * p1 + r;
        let mut next = if denom != 0.0 && denom.is_finite() {
            r - (p1 - r) * (p1 - r) / denom
        } else {
            p2
        };
        if !(next.is_finite() && next > 0.0 && next < 10.0 * r.max(p2)) {
            next = p2;
        }
        if next < ORIGIN_FLOOR {
            return SeedOutcome::Failed("return map iterates toward the origin".into());
        }
        if (next - r).abs() <= CONVERGENCE_TOL * r {
            return SeedOutcome::Converged(next);
        }
        r = next;
    }
    SeedOutcome::Failed(format!("no convergence after {MAX_ITERATIONS} accelerated iterations"))
}

/// Illinois regula falsi on the displacement over `[a, b]`.
fn bracket_root(map: &mut ReturnMap<'_>, mut a: f64, mut fa: f64, mut b: f64, mut fb: f64) -> Option<f64> {
    let mut side = 0i8;
    for _ in 0..100 {
        let c = (a * fb - b * fa) / (fb - fa);
        let c = if c > a.min(b) && c < a.max(b) { c } else { 0.5 * (a + b) };
        let fc = map.displacement(c).ok()?;
        if fc == 0.0 || (b - a).abs() <= 1e-12 * c {
            return Some(c);
        }
        if (fc > 0.0) == (fb > 0.0) {
            b = c;
            fb = fc;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        } else {
            a = c;
            fa = fc;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        }
        if (b - a).abs() <= 1e-12 * c {
            return Some(c);
        }
    }
    Some(0.5 * (a + b))
}

/// Finds periodic orbits around the origin by iterating the return map on
/// the positive x-axis from each seed radius, and by bracketing sign changes
/// of `P(r) − r` between adjacent seeds. `cfg.max_time` bounds each single
/// return. With a backward configuration the map is the inverse return map;
/// reported stabilities are still forward-time.
pub fn detect_limit_cycles(s: &PlanarSystem, seeds: &[f64], cfg: &IntegratorConfig) -> Result<CycleReport> {
    cfg.validate()?;
    if seeds.is_empty() {
        return Err(Error::invalid("at least one seed radius is required"));
    }
    if let Some(bad) = seeds.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
        return Err(Error::invalid(format!("seed radii must be positive, got {bad}")));
    }
    let mut map = ReturnMap {
        flow: Flow::new(s.to_float(), cfg.direction),
        cfg,
        evaluations: 0,
    };
    let mut candidates: Vec<(f64, usize)> = Vec::new();
    let mut inconclusive = Vec::new();

    for &seed in seeds {
        map.evaluations = 0;
        match iterate_seed(&mut map, seed) {
            SeedOutcome::Converged(r) => candidates.push((r, map.evaluations)),
            SeedOutcome::Failed(reason) => inconclusive.push(InconclusiveSeed { seed, reason }),
        }
    }

    let mut sorted: Vec<f64> = seeds.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite seeds"));
    sorted.dedup();
    let disp: Vec<Option<f64>> = sorted.iter().map(|&r| map.displacement(r).ok()).collect();
    for i in 1..sorted.len() {
        if let (Some(fa), Some(fb)) = (disp[i - 1], disp[i]) {
            if (fa > 0.0) != (fb > 0.0) && fa != 0.0 && fb != 0.0 {
                map.evaluations = 0;
                if let Some(r) = bracket_root(&mut map, sorted[i - 1], fa, sorted[i], fb) {
                    candidates.push((r, map.evaluations));
                }
            }
        }
    }

    candidates.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite radii"));
    let mut merged: Vec<(f64, usize)> = Vec::new();
    for (r, used) in candidates {
        match merged.last_mut() {
            Some(last) if (r - last.0).abs() <= MERGE_TOL * r.max(1.0) => last.1 += used,
            _ => merged.push((r, used)),
        }
    }

    let mut cycles = Vec::new();
    for (r, used) in merged {
        map.evaluations = 0;
        match classify(&mut map, r) {
            Ok(mut est) => {
                est.section_crossings_used += used;
                if cfg.direction == Direction::Backward {
                    est.stability = est.stability.reversed();
                }
                cycles.push(est);
            }
            Err(reason) => inconclusive.push(InconclusiveSeed { seed: r, reason }),
        }
    }
    Ok(CycleReport {
        cycles,
        inconclusive,
        config: *cfg,
    })
}

fn classify(map: &mut ReturnMap<'_>, r: f64) -> core::result::Result<LimitCycleEstimate, String> {
    let orbit = map.hit(r).map_err(|e| String::from(e.describe()))?;
    let inner = map.displacement(r * (1.0 - STABILITY_PROBE));
    let outer = map.displacement(r * (1.0 + STABILITY_PROBE));
    let (di, dout) = match (inner, outer) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            return Err(format!("candidate at {r}: stability probe failed: {}", e.describe()))
        }
    };
    let floor = FLAT_TOL * r.max(1e-3);
    if di.abs() < floor || dout.abs() < floor {
        return Err(format!(
            "candidate at {r}: return map is flat nearby (|P(r) - r| below {floor:e}), no isolated orbit"
        ));
    }
    let stability = match (di > 0.0, dout < 0.0) {
        (true, true) => CycleStability::Stable,
        (false, false) => CycleStability::Unstable,
        _ => CycleStability::SemiStable,
    };
    Ok(LimitCycleEstimate {
        section_radius: r,
        mean_radius: orbit.mean_radius,
        radius_spread: 0.5 * (orbit.max_radius - orbit.min_radius),
        period: orbit.time,
        stability,
        section_crossings_used: map.evaluations,
        probe_displacements: (di, dout),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynsys::{build_circle_system2, build_eps_lienard};
    use crate::graph::parse_graph_spec;
    use crate::rational::{int, ratio};
    use crate::weighted::WeightParams;
    use core::f64::consts::PI;

    #[test]
    fn circle_cycle_is_stable_unit() {
        let s = build_circle_system2(&parse_graph_spec("K3").unwrap());
        let rep = detect_limit_cycles(&s, &[0.5, 2.0], &IntegratorConfig::rkf45(1e-9, 50.0)).unwrap();
        assert_eq!(rep.cycles.len(), 1, "{rep:?}");
        let c = &rep.cycles[0];
        assert_eq!(c.stability, CycleStability::Stable);
        assert!((c.mean_radius - 1.0).abs() < 1e-3);
        assert!((c.period - 2.0 * PI).abs() < 1e-4);
        assert!(c.radius_spread < 1e-3);
    }

    fn lienard(eps: i64) -> PlanarSystem {
        // x' = y − (ε/10)(x³ − x), y' = −x
        PlanarSystem::new(
            crate::BivariatePolynomial::from_terms([(0, 1, int(1)), (1, 0, ratio(eps, 10)), (3, 0, ratio(-eps, 10))]),
            crate::BivariatePolynomial::from_terms([(1, 0, int(-1))]),
            "vdp",
        )
    }

    #[test]
    fn van_der_pol_like_cycle() {
        let rep = detect_limit_cycles(&lienard(1), &[0.5, 3.0], &IntegratorConfig::rk4(1e-3, 50.0)).unwrap();
        assert_eq!(rep.cycles.len(), 1, "{rep:?}");
        let c = &rep.cycles[0];
        assert_eq!(c.stability, CycleStability::Stable);
        // averaging predicts r² = 4/3
        assert!((c.mean_radius - 2.0 / 3f64.sqrt()).abs() < 0.05, "{c:?}");
        assert!(c.radius_spread < c.mean_radius);
    }

    #[test]
    fn backward_run_reports_forward_stability() {
        let cfg = IntegratorConfig::rk4(1e-3, 50.0).backward();
        let rep = detect_limit_cycles(&lienard(-1), &[0.5, 3.0], &cfg).unwrap();
        assert_eq!(rep.cycles.len(), 1, "{rep:?}");
        assert_eq!(rep.cycles[0].stability, CycleStability::Unstable);
        // forward, a bracketing pair of seeds still locates it
        let fwd = detect_limit_cycles(&lienard(-1), &[0.5, 1.2], &cfg.with_direction(Direction::Forward)).unwrap();
        assert_eq!(fwd.cycles.len(), 1, "{fwd:?}");
        assert_eq!(fwd.cycles[0].stability, CycleStability::Unstable);
        assert!((fwd.cycles[0].section_radius - rep.cycles[0].section_radius).abs() < 1e-6);
    }

    #[test]
    fn center_has_no_isolated_cycle() {
        let s = build_eps_lienard(&parse_graph_spec("K1").unwrap(), &WeightParams::unweighted(), &int(0)).unwrap();
        let rep = detect_limit_cycles(&s, &[1.0], &IntegratorConfig::rk4(1e-3, 10.0)).unwrap();
        assert!(rep.cycles.is_empty(), "{rep:?}");
        assert_eq!(rep.inconclusive.len(), 1);
    }

    #[test]
    fn argument_checks() {
        let s = build_circle_system2(&parse_graph_spec("E1").unwrap());
        assert!(detect_limit_cycles(&s, &[], &IntegratorConfig::default()).is_err());
        assert!(detect_limit_cycles(&s, &[-1.0], &IntegratorConfig::default()).is_err());
    }
}
