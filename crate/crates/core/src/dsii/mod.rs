//! Pseudo-spectral evaluation and time integration of the third-order
//! Davey–Stewartson II flow, the associated evolution of the linear-problem
//! functions, and the modified / plain Veselov–Novikov reductions.
//!
//! All inverse derivatives use the zero-mean gauge, and every quadratic
//! product is two-thirds dealiased unless disabled in the operator.

mod deform;
mod flow;
mod rhs;

use thiserror::Error;

use crate::grid::{Field, GridDomain, GridError};
use crate::weierstrass::WeierstrassError;

pub use deform::{deform_surface, DeformConfig, Snapshot};
pub use flow::{evolve, evolve_observed, rk4_step, FlowConfig, FlowMonitor, DEFAULT_CFL_CONSTANT, DIVERGENCE_FACTOR};
pub use rhs::{dsii3_rhs, linear_operators_n3, mvn_rhs, vn_rhs, DsiiOperator};

/// Relative tolerance on imaginary parts for the real-valued reductions.
pub const REAL_TOL: f64 = 1e-12;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum FlowError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Weierstrass(#[from] WeierstrassError),
    #[error("fields live on different domains")]
    DomainMismatch,
    #[error("potential must be real-valued (max |Im| = {0:e})")]
    NotReal(f64),
    #[error("time step {dt:e} must be positive and finite")]
    BadStep { dt: f64 },
    #[error("time step {dt:e} exceeds the stability limit {limit:e} = {c} h^3")]
    Cfl { dt: f64, limit: f64, c: f64 },
    #[error("non-finite values after step {step}")]
    Diverged { step: usize },
    #[error("snapshot stride must be positive")]
    BadStride,
}

/// Complex potential on a periodic domain.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialField {
    pub domain: GridDomain,
    pub values: Field,
}

impl PotentialField {
    pub fn new(domain: GridDomain, values: Field) -> Result<Self, FlowError> {
        domain.validate()?;
        if !domain.periodic {
            return Err(GridError::NotPeriodic.into());
        }
        domain.check(&values)?;
        Ok(Self { domain, values })
    }

    pub fn from_fn(domain: GridDomain, f: impl Fn(num_complex::Complex64) -> num_complex::Complex64) -> Result<Self, FlowError> {
        Self::new(domain, domain.sample(f))
    }

    pub fn zeros(domain: GridDomain) -> Result<Self, FlowError> {
        Self::new(domain, domain.zeros())
    }

    /// Largest imaginary part relative to `max(1, max |value|)`.
    pub fn imag_excess(&self) -> f64 {
        let scale = self.values.iter().map(|z| z.norm()).fold(1.0, f64::max);
        self.values.iter().map(|z| z.im.abs()).fold(0.0, f64::max) / scale
    }
}
