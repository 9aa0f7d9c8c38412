use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{DsiiOperator, FlowError, PotentialField};
use crate::grid::{rms, Field, GridDomain};

/// `dt <= c h^3`; RK4 on the imaginary axis is stable up to `2 sqrt 2`, and the
/// cubic symbol is bounded by `(pi/h)^3 / sqrt 2`, which puts the exact bound
/// near `0.129 h^3`.
pub const DEFAULT_CFL_CONSTANT: f64 = 0.1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct FlowConfig {
    pub dt: f64,
    pub steps: usize,
    pub dealias: bool,
    pub cfl_constant: f64,
}

impl Default for FlowConfig {
    fn default() -> Self {
        Self { dt: 1e-4, steps: 100, dealias: true, cfl_constant: DEFAULT_CFL_CONSTANT }
    }
}

impl FlowConfig {
    pub fn cfl_limit(&self, domain: &GridDomain) -> f64 {
        let h = domain.dx().min(domain.dy());
        self.cfl_constant * h.powi(3)
    }

    pub fn check(&self, domain: &GridDomain) -> Result<(), FlowError> {
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(FlowError::BadStep { dt: self.dt });
        }
        let limit = self.cfl_limit(domain);
        if self.dt > limit {
            return Err(FlowError::Cfl { dt: self.dt, limit, c: self.cfl_constant });
        }
        Ok(())
    }
}

/// Scalar diagnostics recorded along a flow.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowMonitor {
    pub step: usize,
    pub time: f64,
    pub p_rms: f64,
    pub q_rms: f64,
    /// Mean of `p q` over the grid.
    pub pq_mean: [f64; 2],
}

impl FlowMonitor {
    pub fn new(step: usize, time: f64, p: &Field, q: &Field) -> Self {
        let m = (p * q).mean().unwrap_or_default();
        Self { step, time, p_rms: rms(p), q_rms: rms(q), pq_mean: [m.re, m.im] }
    }
}

fn axpy(base: &[Field], k: &[Field], h: f64) -> Vec<Field> {
    let h = Complex64::new(h, 0.0);
    base.iter()
        .zip(k)
        .map(|(b, k)| {
            let mut out = b.clone();
            out.scaled_add(h, k);
            out
        })
        .collect()
}

/// One classical Runge–Kutta step for a system of fields.
pub fn rk4_step<E>(
    state: &[Field],
    dt: f64,
    rhs: impl Fn(&[Field]) -> Result<Vec<Field>, E>,
) -> Result<Vec<Field>, E> {
    let k1 = rhs(state)?;
    let k2 = rhs(&axpy(state, &k1, dt / 2.0))?;
    let k3 = rhs(&axpy(state, &k2, dt / 2.0))?;
    let k4 = rhs(&axpy(state, &k3, dt))?;
    let w = Complex64::new(dt / 6.0, 0.0);
    Ok(state
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let mut incr = k1[n].clone();
            incr.scaled_add(Complex64::new(2.0, 0.0), &k2[n]);
            incr.scaled_add(Complex64::new(2.0, 0.0), &k3[n]);
            incr += &k4[n];
            let mut out = s.clone();
            out.scaled_add(w, &incr);
            out
        })
        .collect())
}

/// A run is declared divergent once any field exceeds this multiple of the
/// largest initial magnitude (or of 1, if larger).
pub const DIVERGENCE_FACTOR: f64 = 1e8;

/// Largest modulus over all fields; NaN if any value is not finite.
pub(crate) fn magnitude(state: &[Field]) -> f64 {
    let mut m = 0.0f64;
    for z in state.iter().flat_map(|f| f.iter()) {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return f64::NAN;
        }
        m = m.max(z.norm());
    }
    m
}

/// Fails with the step index on non-finite values or runaway growth.
pub(crate) fn check_divergence(state: &[Field], initial: f64, step: usize) -> Result<(), FlowError> {
    let m = magnitude(state);
    if !m.is_finite() || m > DIVERGENCE_FACTOR * initial.max(1.0) {
        return Err(FlowError::Diverged { step });
    }
    Ok(())
}

/// Integrates `(p, q)` under the n = 3 flow for `cfg.steps` steps.
///
/// `observe` is called on the initial state and after every step.
pub fn evolve_observed(
    p: &PotentialField,
    q: &PotentialField,
    cfg: &FlowConfig,
    mut observe: impl FnMut(usize, f64, &Field, &Field),
) -> Result<(PotentialField, PotentialField), FlowError> {
    if p.domain != q.domain {
        return Err(FlowError::DomainMismatch);
    }
    cfg.check(&p.domain)?;
    let op = DsiiOperator::new(&p.domain, cfg.dealias)?;
    let mut state = vec![p.values.clone(), q.values.clone()];
    let initial = magnitude(&state);
    observe(0, 0.0, &state[0], &state[1]);
    for step in 1..=cfg.steps {
        state = rk4_step(&state, cfg.dt, |s| op.dsii3(&s[0], &s[1]).map(|(a, b)| vec![a, b]))?;
        check_divergence(&state, initial, step)?;
        observe(step, step as f64 * cfg.dt, &state[0], &state[1]);
    }
    let mut it = state.into_iter();
    let (pv, qv) = (it.next().unwrap(), it.next().unwrap());
    Ok((PotentialField { domain: p.domain, values: pv }, PotentialField { domain: q.domain, values: qv }))
}

pub fn evolve(
    p: &PotentialField,
    q: &PotentialField,
    cfg: &FlowConfig,
) -> Result<(PotentialField, PotentialField), FlowError> {
    evolve_observed(p, q, cfg, |_, _, _, _| {})
}
