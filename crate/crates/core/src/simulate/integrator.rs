use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::dynsys::{FloatField, PlanarSystem};
use crate::{Error, Result};

/// States farther than this from the origin count as divergence.
pub const DIVERGENCE_RADIUS: f64 = 1e6;

const MIN_STEP: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Rk4Fixed,
    Rkf45Adaptive,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Rk4Fixed => "rk4_fixed",
            Method::Rkf45Adaptive => "rkf45_adaptive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Direction::Forward => 1.0,
            Direction::Backward => -1.0,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorConfig {
    pub method: Method,
    /// Fixed step for RK4, initial step for RKF45.
    pub step: f64,
    /// Local error tolerance for RKF45.
    pub tolerance: f64,
    pub max_time: f64,
    pub direction: Direction,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        Self::rk4(1e-3, 100.0)
    }
}

impl IntegratorConfig {
    pub fn rk4(step: f64, max_time: f64) -> Self {
        Self {
            method: Method::Rk4Fixed,
            step,
            tolerance: 1e-9,
            max_time,
            direction: Direction::Forward,
        }
    }

    pub fn rkf45(tolerance: f64, max_time: f64) -> Self {
        Self {
            method: Method::Rkf45Adaptive,
            step: 1e-3,
            tolerance,
            max_time,
            direction: Direction::Forward,
        }
    }

    pub fn backward(mut self) -> Self {
        self.direction = Direction::Backward;
        self
    }

    pub fn with_direction(mut self, direction: Direction) -> Self {
        self.direction = direction;
        self
    }

    pub fn with_max_time(mut self, max_time: f64) -> Self {
        self.max_time = max_time;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.step) {
            return Err(Error::invalid(format!("step must be positive, got {}", self.step)));
        }
        if !positive(self.tolerance) {
            return Err(Error::invalid(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if !positive(self.max_time) {
            return Err(Error::invalid(format!("max_time must be positive, got {}", self.max_time)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Reached `max_time`.
    Completed,
    /// Left the disk of radius [`DIVERGENCE_RADIUS`] or produced a non-finite state.
    Diverged,
    /// RKF45 could not meet the tolerance with a step above `1e-14`.
    StepUnderflow,
}

impl Termination {
    pub fn name(self) -> &'static str {
        match self {
            Termination::Completed => "completed",
            Termination::Diverged => "diverged",
            Termination::StepUnderflow => "step_underflow",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    /// `(t, x, y)`; `t` runs backwards for backward integration.
    pub samples: Vec<(f64, f64, f64)>,
    pub label: String,
    pub config: IntegratorConfig,
    pub termination: Termination,
}

impl Trajectory {
    pub fn last(&self) -> (f64, f64, f64) {
        *self.samples.last().expect("trajectories hold the initial state")
    }
}

/// Field oriented along the integration direction.
#[derive(Debug, Clone)]
pub(crate) struct Flow {
    field: FloatField,
    sign: f64,
}

impl Flow {
    pub fn new(field: FloatField, direction: Direction) -> Self {
        Self {
            field,
            sign: direction.sign(),
        }
    }

    #[inline]
    pub fn eval(&self, s: [f64; 2]) -> [f64; 2] {
        let (a, b) = self.field.eval(s[0], s[1]);
        [self.sign * a, self.sign * b]
    }

    #[inline]
    pub fn rk4(&self, s: [f64; 2], h: f64) -> [f64; 2] {
        let k1 = self.eval(s);
        let k2 = self.eval(axpy(s, 0.5 * h, k1));
        let k3 = self.eval(axpy(s, 0.5 * h, k2));
        let k4 = self.eval(axpy(s, h, k3));
        [
            s[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            s[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        ]
    }

    /// RK4 over `h` in pieces no longer than `max_piece`.
    pub fn rk4_split(&self, mut s: [f64; 2], h: f64, max_piece: f64) -> [f64; 2] {
        let n = (h.abs() / max_piece).ceil().max(1.0);
        let piece = h / n;
        for _ in 0..n as usize {
            s = self.rk4(s, piece);
        }
        s
    }

    /// One Fehlberg 4(5) step: the fifth-order state and an error estimate.
    fn rkf45(&self, s: [f64; 2], h: f64) -> ([f64; 2], f64) {
        let k1 = self.eval(s);
        let k2 = self.eval(comb(s, h, &[(1.0 / 4.0, k1)]));
        let k3 = self.eval(comb(s, h, &[(3.0 / 32.0, k1), (9.0 / 32.0, k2)]));
        let k4 = self.eval(comb(
            s,
            h,
            &[(1932.0 / 2197.0, k1), (-7200.0 / 2197.0, k2), (7296.0 / 2197.0, k3)],
        ));
        let k5 = self.eval(comb(
            s,
            h,
            &[(439.0 / 216.0, k1), (-8.0, k2), (3680.0 / 513.0, k3), (-845.0 / 4104.0, k4)],
        ));
        let k6 = self.eval(comb(
            s,
            h,
            &[
                (-8.0 / 27.0, k1),
                (2.0, k2),
                (-3544.0 / 2565.0, k3),
                (1859.0 / 4104.0, k4),
                (-11.0 / 40.0, k5),
            ],
        ));
        let fifth = comb(
            s,
            h,
            &[
                (16.0 / 135.0, k1),
                (6656.0 / 12825.0, k3),
                (28561.0 / 56430.0, k4),
                (-9.0 / 50.0, k5),
                (2.0 / 55.0, k6),
            ],
        );
        let fourth = comb(
            s,
            h,
            &[(25.0 / 216.0, k1), (1408.0 / 2565.0, k3), (2197.0 / 4104.0, k4), (-1.0 / 5.0, k5)],
        );
        let err = (fifth[0] - fourth[0]).abs().max((fifth[1] - fourth[1]).abs());
        (fifth, err)
    }
}

#[inline]
fn axpy(s: [f64; 2], a: f64, k: [f64; 2]) -> [f64; 2] {
    [s[0] + a * k[0], s[1] + a * k[1]]
}

#[inline]
fn comb(s: [f64; 2], h: f64, terms: &[(f64, [f64; 2])]) -> [f64; 2] {
    let mut out = s;
    for &(c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

pub(crate) fn escaped(s: [f64; 2]) -> bool {
    !(s[0].is_finite() && s[1].is_finite()) || s[0].hypot(s[1]) > DIVERGENCE_RADIUS
}

/// Advances a state step by step in flow time `τ ≥ 0` (wall time is
/// `τ · direction.sign()`).
#[derive(Debug, Clone)]
pub(crate) struct Stepper {
    pub flow: Flow,
    pub state: [f64; 2],
    pub tau: f64,
    method: Method,
    h: f64,
    tolerance: f64,
    /// Length of the last accepted step.
    pub last_h: f64,
}

pub(crate) enum StepOutcome {
    Ok,
    Diverged,
    Underflow,
}

impl Stepper {
    pub fn new(flow: Flow, state: [f64; 2], cfg: &IntegratorConfig) -> Self {
        Self {
            flow,
            state,
            tau: 0.0,
            method: cfg.method,
            h: cfg.step,
            tolerance: cfg.tolerance,
            last_h: 0.0,
        }
    }

    /// Takes one step without passing `tau_end`.
    pub fn step(&mut self, tau_end: f64) -> StepOutcome {
        let remaining = tau_end - self.tau;
        match self.method {
            Method::Rk4Fixed => {
                let h = self.h.min(remaining);
                self.state = self.flow.rk4(self.state, h);
                self.tau += h;
                self.last_h = h;
            }
            Method::Rkf45Adaptive => loop {
                let h = self.h.min(remaining);
                let (next, err) = self.flow.rkf45(self.state, h);
                let scale = self.tolerance * (1.0 + self.state[0].abs().max(self.state[1].abs()));
                if err.is_finite() && err <= scale {
                    self.state = next;
                    self.tau += h;
                    self.last_h = h;
                    let grow = if err == 0.0 { 4.0 } else { (0.9 * (scale / err).powf(0.2)).clamp(0.2, 4.0) };
                    if h == self.h || grow < 1.0 {
                        self.h *= grow;
                    }
                    break;
                }
                let shrink = if err.is_finite() { (0.9 * (scale / err).powf(0.25)).clamp(0.1, 0.5) } else { 0.1 };
                self.h = h * shrink;
                if self.h < MIN_STEP {
                    return StepOutcome::Underflow;
                }
            },
        }
        if escaped(self.state) {
            StepOutcome::Diverged
        } else {
            StepOutcome::Ok
        }
    }
}

/// Integrates `s` from `x0` until `max_time` or divergence. Every accepted
/// step is recorded.
pub fn integrate(s: &PlanarSystem, x0: (f64, f64), cfg: &IntegratorConfig) -> Result<Trajectory> {
    cfg.validate()?;
    let mut st = Stepper::new(Flow::new(s.to_float(), cfg.direction), [x0.0, x0.1], cfg);
    let sign = cfg.direction.sign();
    let mut samples = Vec::new();
    samples.push((0.0, x0.0, x0.1));
    let mut termination = Termination::Completed;
    if escaped(st.state) {
        termination = Termination::Diverged;
    }
    while termination == Termination::Completed && st.tau < cfg.max_time {
        match st.step(cfg.max_time) {
            StepOutcome::Ok => samples.push((sign * st.tau, st.state[0], st.state[1])),
            StepOutcome::Diverged => termination = Termination::Diverged,
            StepOutcome::Underflow => termination = Termination::StepUnderflow,
        }
    }
    Ok(Trajectory {
        samples,
        label: format!("{} [{} {} step={} tol={} T={}]", s.label, cfg.method.name(), cfg.direction.name(), cfg.step, cfg.tolerance, cfg.max_time),
        config: *cfg,
        termination,
    })
}
