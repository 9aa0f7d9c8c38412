use super::flow::{check_divergence, magnitude, rk4_step};
use super::{DsiiOperator, FlowConfig, FlowError};
use crate::grid::Field;
use crate::weierstrass::{
    dirac_field_of, integrate_coordinates, DiracResidual, PathOrder, SignConvention, SpinorField, SurfaceCoords,
    WeierstrassData,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeformConfig {
    pub flow: FlowConfig,
    /// Steps between recorded snapshots; the last step is always recorded.
    pub snapshot_stride: usize,
    pub convention: SignConvention,
    pub base: (usize, usize),
}

impl Default for DeformConfig {
    fn default() -> Self {
        Self { flow: FlowConfig::default(), snapshot_stride: 10, convention: SignConvention::default(), base: (0, 0) }
    }
}

/// Surface state at one recorded time.
#[derive(Clone, Debug)]
pub struct Snapshot {
    pub step: usize,
    pub time: f64,
    pub data: WeierstrassData,
    pub surface: SurfaceCoords,
    pub dirac: SpinorField,
    /// How far the evolved `psi, phi` are from solving the linear problem.
    pub residual: DiracResidual,
}

fn snapshot(step: usize, time: f64, data: WeierstrassData, cfg: &DeformConfig) -> Result<Snapshot, FlowError> {
    let surface = integrate_coordinates(&data, cfg.base, cfg.convention, PathOrder::XThenY)?;
    let dirac = dirac_field_of(&surface);
    let residual = data.dirac_system_residual()?;
    Ok(Snapshot { step, time, data, surface, dirac, residual })
}

fn unpack(domain: crate::grid::GridDomain, s: Vec<Field>) -> WeierstrassData {
    let mut it = s.into_iter();
    let mut next = || it.next().unwrap();
    let (p, q) = (next(), next());
    let psi = [next(), next()];
    let phi = [next(), next()];
    WeierstrassData { domain, p, q, psi, phi }
}

/// Evolves potentials and linear-problem functions together under the n = 3
/// flow and rebuilds the surface and its Dirac spinor field at each snapshot.
pub fn deform_surface(data: &WeierstrassData, cfg: &DeformConfig) -> Result<Vec<Snapshot>, FlowError> {
    if cfg.snapshot_stride == 0 {
        return Err(FlowError::BadStride);
    }
    let domain = data.domain;
    domain.check_point(cfg.base)?;
    cfg.flow.check(&domain)?;
    let op = DsiiOperator::new(&domain, cfg.flow.dealias)?;
    let rhs = |s: &[Field]| -> Result<Vec<Field>, FlowError> {
        let (pt, qt) = op.dsii3(&s[0], &s[1])?;
        let (psi1, phi1) = op.linear_n3(&s[0], &s[1], &s[2], &s[4])?;
        let (psi2, phi2) = op.linear_n3(&s[0], &s[1], &s[3], &s[5])?;
        Ok(vec![pt, qt, psi1, psi2, phi1, phi2])
    };
    let mut state = vec![
        data.p.clone(),
        data.q.clone(),
        data.psi[0].clone(),
        data.psi[1].clone(),
        data.phi[0].clone(),
        data.phi[1].clone(),
    ];
    let initial = magnitude(&state);
    let mut out = vec![snapshot(0, 0.0, data.clone(), cfg)?];
    for step in 1..=cfg.flow.steps {
        state = rk4_step(&state, cfg.flow.dt, rhs)?;
        check_divergence(&state, initial, step)?;
        if step % cfg.snapshot_stride == 0 || step == cfg.flow.steps {
            let time = step as f64 * cfg.flow.dt;
            out.push(snapshot(step, time, unpack(domain, state.clone()), cfg)?);
        }
    }
    Ok(out)
}
