use num_complex::Complex64;
use serde::Serialize;

use super::{wirtinger, WeierstrassError};
use crate::grid::{max_abs, rms, Field, GridDomain};

/// Potentials `p, q` and the functions `psi_a, phi_a` on a common grid.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassData {
    pub domain: GridDomain,
    pub p: Field,
    pub q: Field,
    pub psi: [Field; 2],
    pub phi: [Field; 2],
}

impl WeierstrassData {
    pub fn new(
        domain: GridDomain,
        p: Field,
        q: Field,
        psi: [Field; 2],
        phi: [Field; 2],
    ) -> Result<Self, WeierstrassError> {
        domain.validate()?;
        for f in [&p, &q, &psi[0], &psi[1], &phi[0], &phi[1]] {
            domain.check(f)?;
        }
        Ok(Self { domain, p, q, psi, phi })
    }

    /// Samples each field from a function of `z`.
    pub fn from_fns(
        domain: GridDomain,
        p: impl Fn(Complex64) -> Complex64,
        q: impl Fn(Complex64) -> Complex64,
        psi: [&dyn Fn(Complex64) -> Complex64; 2],
        phi: [&dyn Fn(Complex64) -> Complex64; 2],
    ) -> Result<Self, WeierstrassError> {
        Self::new(
            domain,
            domain.sample(p),
            domain.sample(q),
            [domain.sample(psi[0]), domain.sample(psi[1])],
            [domain.sample(phi[0]), domain.sample(phi[1])],
        )
    }

    /// `p = q = 0` and `psi_a = phi_a = value` everywhere.
    pub fn constant(domain: GridDomain, value: Complex64) -> Result<Self, WeierstrassError> {
        let zero = domain.zeros();
        let v = domain.constant(value);
        Self::new(domain, zero.clone(), zero, [v.clone(), v.clone()], [v.clone(), v])
    }

    /// `psi1 psi2 phi1 phi2`, the expected conformal factor.
    pub fn conformal_factor(&self) -> Field {
        &(&self.psi[0] * &self.psi[1]) * &(&self.phi[0] * &self.phi[1])
    }

    /// Residuals of `d_z psi_a = p phi_a` and `d_zbar phi_a = q psi_a`.
    pub fn dirac_system_residual(&self) -> Result<DiracResidual, WeierstrassError> {
        let mut fields = Vec::with_capacity(4);
        for a in 0..2 {
            let (dz_psi, _) = wirtinger(&self.domain, &self.psi[a])?;
            fields.push(&dz_psi - &(&self.p * &self.phi[a]));
        }
        for a in 0..2 {
            let (_, dzbar_phi) = wirtinger(&self.domain, &self.phi[a])?;
            fields.push(&dzbar_phi - &(&self.q * &self.psi[a]));
        }
        let max = fields.iter().map(max_abs).collect();
        let rms = fields.iter().map(rms).collect();
        Ok(DiracResidual { fields, max, rms })
    }
}

/// Residual fields in the order `psi1, psi2, phi1, phi2` equations.
#[derive(Clone, Debug, Serialize)]
pub struct DiracResidual {
    #[serde(skip)]
    pub fields: Vec<Field>,
    pub max: Vec<f64>,
    pub rms: Vec<f64>,
}

impl DiracResidual {
    pub fn max_norm(&self) -> f64 {
        self.max.iter().copied().fold(0.0, f64::max)
    }
}
