use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::integrator::{Flow, IntegratorConfig, StepOutcome, Stepper, Trajectory};
use crate::dynsys::PlanarSystem;

/// Refinement sub-steps never exceed this length.
const REFINE_PIECE: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingOrientation {
    /// `y` increasing along the direction of travel.
    Upward,
    Downward,
    Either,
}

/// A crossing of `{y = 0, x > 0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub t: f64,
    pub x: f64,
    pub upward: bool,
}

/// Finds `h ∈ (0, span]` with `y(state advanced by h) = 0`, given that `y`
/// changes sign over the step. Safeguarded Newton on the sub-step length.
pub(crate) fn refine_crossing(flow: &Flow, s0: [f64; 2], y1: f64, span: f64) -> (f64, [f64; 2]) {
    let (mut lo, mut hi) = (0.0, span);
    let y_lo = s0[1];
    let mut h = span * s0[1] / (s0[1] - y1);
    if !(h > 0.0 && h < span) {
        h = 0.5 * span;
    }
    let mut state = flow.rk4_split(s0, h, REFINE_PIECE);
    for _ in 0..60 {
        let y = state[1];
        if y == 0.0 {
            break;
        }
        if (y > 0.0) == (y_lo > 0.0) {
            lo = h;
        } else {
            hi = h;
        }
        let dy = flow.eval(state)[1];
        let mut next = h - y / dy;
        if !(next > lo && next < hi) || !dy.is_finite() || dy == 0.0 {
            next = 0.5 * (lo + hi);
        }
        let done = (next - h).abs() <= 1e-15 * span.max(1.0);
        h = next;
        state = flow.rk4_split(s0, h, REFINE_PIECE);
        if done || hi - lo <= 1e-15 * span.max(1.0) {
            break;
        }
    }
    (h, state)
}

/// Crossings of the positive x-axis along a recorded trajectory, refined to
/// about `1e-12` in `t`. The initial sample is never reported.
pub fn poincare_crossings(s: &PlanarSystem, tr: &Trajectory, orientation: CrossingOrientation) -> Vec<Crossing> {
    let flow = Flow::new(s.to_float(), tr.config.direction);
    let sign = tr.config.direction.sign();
    let mut out = Vec::new();
    for w in tr.samples.windows(2) {
        let (t0, x0, y0) = w[0];
        let (t1, x1, y1) = w[1];
        let changes = (y0 < 0.0 && y1 >= 0.0) || (y0 > 0.0 && y1 <= 0.0);
        if !changes || (x0 <= 0.0 && x1 <= 0.0) {
            continue;
        }
        let upward = y0 < 0.0;
        let wanted = match orientation {
            CrossingOrientation::Upward => upward,
            CrossingOrientation::Downward => !upward,
            CrossingOrientation::Either => true,
        };
        if !wanted {
            continue;
        }
        let span = (t1 - t0).abs();
        let (h, state) = if y1 == 0.0 {
            (span, [x1, y1])
        } else {
            refine_crossing(&flow, [x0, y0], y1, span)
        };
        if state[0] > 0.0 {
            out.push(Crossing {
                t: t0 + sign * h,
                x: state[0],
                upward,
            });
        }
    }
    out
}

/// Statistics of the orbit segment between two section crossings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReturnHit {
    pub x: f64,
    /// Flow time to return.
    pub time: f64,
    pub mean_radius: f64,
    pub min_radius: f64,
    pub max_radius: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReturnFailure {
    Diverged,
    StepUnderflow,
    /// No return within `max_time`.
    Timeout,
    /// The field has no transversal component at the seed.
    NotTransversal,
}

impl ReturnFailure {
    pub fn describe(self) -> &'static str {
        match self {
            ReturnFailure::Diverged => "trajectory diverged before returning to the section",
            ReturnFailure::StepUnderflow => "step size underflow before returning to the section",
            ReturnFailure::Timeout => "no return to the section within max_time",
            ReturnFailure::NotTransversal => "the flow is tangent to the section at the seed",
        }
    }
}

pub(crate) fn first_return(flow: &Flow, cfg: &IntegratorConfig, r: f64) -> Result<ReturnHit, ReturnFailure> {
    let v = flow.eval([r, 0.0])[1];
    if !(v.is_finite() && v != 0.0) {
        return Err(ReturnFailure::NotTransversal);
    }
    let dir = v.signum();
    let mut st = Stepper::new(flow.clone(), [r, 0.0], cfg);
    let (mut area, mut lo, mut hi) = (0.0, r, r);
    let mut prev_r = r;
    while st.tau < cfg.max_time {
        let before = st.state;
        match st.step(cfg.max_time) {
            StepOutcome::Ok => {}
            StepOutcome::Diverged => return Err(ReturnFailure::Diverged),
            StepOutcome::Underflow => return Err(ReturnFailure::StepUnderflow),
        }
        let after = st.state;
        if before[1] * dir < 0.0 && after[1] * dir >= 0.0 {
            let (h, hit) = if after[1] == 0.0 {
                (st.last_h, after)
            } else {
                refine_crossing(flow, before, after[1], st.last_h)
            };
            if hit[0] > 0.0 {
                let rr = hit[0].hypot(hit[1]);
                area += 0.5 * h * (prev_r + rr);
                let time = st.tau - st.last_h + h;
                return Ok(ReturnHit {
                    x: hit[0],
                    time,
                    mean_radius: area / time,
                    min_radius: lo.min(rr),
                    max_radius: hi.max(rr),
                });
            }
        }
        let rr = after[0].hypot(after[1]);
        area += 0.5 * st.last_h * (prev_r + rr);
        lo = lo.min(rr);
        hi = hi.max(rr);
        prev_r = rr;
    }
    Err(ReturnFailure::Timeout)
}

/// First return of the orbit through `(r, 0)` to the positive x-axis,
/// crossing in the same sense as it left. `cfg.max_time` bounds the search.
pub fn return_map(s: &PlanarSystem, r: f64, cfg: &IntegratorConfig) -> Result<ReturnHit, ReturnFailure> {
    first_return(&Flow::new(s.to_float(), cfg.direction), cfg, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynsys::{build_circle_system2, build_eps_lienard, build_hopf};
    use crate::graph::parse_graph_spec;
    use crate::rational::{int, ratio};
    use crate::simulate::integrate;
    use crate::weighted::WeightParams;
    use core::f64::consts::PI;

    fn g(s: &str) -> crate::Graph {
        parse_graph_spec(s).unwrap()
    }

    #[test]
    fn circle_orbit_crossings_are_two_pi_apart() {
        let s = build_circle_system2(&g("K3"));
        let tr = integrate(&s, (1.0, 0.0), &IntegratorConfig::rk4(1e-3, 13.0)).unwrap();
        let c = poincare_crossings(&s, &tr, CrossingOrientation::Upward);
        assert_eq!(c.len(), 2);
        for (n, cr) in c.iter().enumerate() {
            assert!((cr.t - 2.0 * PI * (n + 1) as f64).abs() < 1e-6, "{cr:?}");
            assert!((cr.x - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn linear_center_crossings_stay_put() {
        let s = build_eps_lienard(&g("K1"), &WeightParams::unweighted(), &int(0)).unwrap();
        let tr = integrate(&s, (0.7, 0.0), &IntegratorConfig::rk4(1e-3, 20.0)).unwrap();
        // clockwise: the positive x-axis is crossed downward
        assert!(poincare_crossings(&s, &tr, CrossingOrientation::Upward).is_empty());
        let c = poincare_crossings(&s, &tr, CrossingOrientation::Downward);
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|cr| (cr.x - 0.7).abs() < 1e-9));
    }

    #[test]
    fn spiral_into_origin_decreases() {
        let s = build_hopf(&g("K4"), &g("S2+2*P2"), &ratio(-1, 10)).unwrap();
        let tr = integrate(&s, (0.05, 0.0), &IntegratorConfig::rk4(1e-3, 40.0)).unwrap();
        let c = poincare_crossings(&s, &tr, CrossingOrientation::Either);
        assert!(c.len() >= 5);
        assert!(c.windows(2).all(|w| w[1].x < w[0].x));
    }

    #[test]
    fn return_map_on_center() {
        let s = build_eps_lienard(&g("K1"), &WeightParams::unweighted(), &int(0)).unwrap();
        let hit = return_map(&s, 1.5, &IntegratorConfig::rk4(1e-3, 10.0)).unwrap();
        assert!((hit.x - 1.5).abs() < 1e-10);
        assert!((hit.time - 2.0 * PI).abs() < 1e-10);
        assert!((hit.mean_radius - 1.5).abs() < 1e-9);
        let back = return_map(&s, 1.5, &IntegratorConfig::rk4(1e-3, 10.0).backward()).unwrap();
        assert!((back.x - 1.5).abs() < 1e-10);
        assert_eq!(return_map(&s, 1.5, &IntegratorConfig::rk4(1e-3, 1.0)), Err(ReturnFailure::Timeout));
    }
}
