use super::{FlowError, PotentialField, REAL_TOL};
use crate::grid::Field;
use crate::spectral::Spectral;

/// Spectral operators of the n = 3 flow on one periodic domain.
#[derive(Clone, Debug)]
pub struct DsiiOperator {
    spectral: Spectral,
    dealias: bool,
}

impl DsiiOperator {
    pub fn new(domain: &crate::grid::GridDomain, dealias: bool) -> Result<Self, FlowError> {
        Ok(Self { spectral: Spectral::new(domain)?, dealias })
    }

    pub fn spectral(&self) -> &Spectral {
        &self.spectral
    }

    fn prod(&self, a: &Field, b: &Field) -> Field {
        self.spectral.product(a, b, self.dealias)
    }

    /// `dz^a dzbar^b` with negative powers meaning inverse derivatives.
    fn d(&self, f: &Field, a: i32, b: i32) -> Field {
        self.spectral.mixed(f, a, b)
    }

    fn check(&self, f: &Field) -> Result<(), FlowError> {
        if f.dim() != self.spectral.domain().shape() {
            return Err(FlowError::DomainMismatch);
        }
        Ok(())
    }

    /// Right-hand sides `(p_t, q_t)`:
    ///
    /// ```text
    /// p_t = p_zzz + p_zbar^3 + 3 p_z dzbar^-1 (pq)_z + 3 p_zbar dz^-1 (qp)_zbar
    ///       + 3 p dzbar^-1 (q p_z)_z + 3 p dz^-1 (q p_zbar)_zbar
    /// q_t = q_zzz + q_zbar^3 + 3 q_z dzbar^-1 (pq)_z + 3 q_zbar dz^-1 (pq)_zbar
    ///       + 3 q dzbar^-1 (p q_z)_z + 3 q dz^-1 (p q_zbar)_zbar
    /// ```
    pub fn dsii3(&self, p: &Field, q: &Field) -> Result<(Field, Field), FlowError> {
        self.check(p)?;
        self.check(q)?;
        let pq = self.prod(p, q);
        let s_z = self.d(&pq, 1, -1);
        let s_zbar = self.d(&pq, -1, 1);
        let rhs = |u: &Field, v: &Field| {
            let uz = self.d(u, 1, 0);
            let uzbar = self.d(u, 0, 1);
            let mut out = &self.d(u, 3, 0) + &self.d(u, 0, 3);
            let mut nl = self.prod(&uz, &s_z);
            nl += &self.prod(&uzbar, &s_zbar);
            nl += &self.prod(u, &self.d(&self.prod(v, &uz), 1, -1));
            nl += &self.prod(u, &self.d(&self.prod(v, &uzbar), -1, 1));
            out.scaled_add(num_complex::Complex64::new(3.0, 0.0), &nl);
            out
        };
        Ok((rhs(p, q), rhs(q, p)))
    }

    fn require_real(&self, p: &PotentialField) -> Result<(), FlowError> {
        self.check(&p.values)?;
        let excess = p.imag_excess();
        if excess > REAL_TOL {
            return Err(FlowError::NotReal(excess));
        }
        Ok(())
    }

    /// Modified Veselov–Novikov right-hand side
    ///
    /// ```text
    /// p_t = p_zzz + p_zbar^3 + 3 p_z dzbar^-1 (|p|^2)_z + 3 p_zbar dz^-1 (|p|^2)_zbar
    ///       + 3 p dzbar^-1 (conj(p) p_z)_z + 3 p dz^-1 (conj(p) p_zbar)_zbar
    /// ```
    pub fn mvn(&self, p: &PotentialField) -> Result<Field, FlowError> {
        self.require_real(p)?;
        let u = &p.values;
        let ubar = u.mapv(|v| v.conj());
        let modsq = self.prod(u, &ubar);
        let uz = self.d(u, 1, 0);
        let uzbar = self.d(u, 0, 1);
        let mut out = &self.d(u, 3, 0) + &self.d(u, 0, 3);
        let mut nl = self.prod(&uz, &self.d(&modsq, 1, -1));
        nl += &self.prod(&uzbar, &self.d(&modsq, -1, 1));
        nl += &self.prod(u, &self.d(&self.prod(&ubar, &uz), 1, -1));
        nl += &self.prod(u, &self.d(&self.prod(&ubar, &uzbar), -1, 1));
        out.scaled_add(num_complex::Complex64::new(3.0, 0.0), &nl);
        Ok(out)
    }

    /// Veselov–Novikov right-hand side
    /// `p_t = p_zzz + p_zbar^3 + 3 [p dzbar^-1 p_z]_z + 3 [p dz^-1 p_zbar]_zbar`.
    pub fn vn(&self, p: &PotentialField) -> Result<Field, FlowError> {
        self.require_real(p)?;
        let u = &p.values;
        let mut out = &self.d(u, 3, 0) + &self.d(u, 0, 3);
        let a = self.prod(u, &self.d(u, 1, -1));
        let b = self.prod(u, &self.d(u, -1, 1));
        let nl = &self.d(&a, 1, 0) + &self.d(&b, 0, 1);
        out.scaled_add(num_complex::Complex64::new(3.0, 0.0), &nl);
        Ok(out)
    }

    /// `(psi_t, phi_t) = (A3 psi + B3 phi, C3 psi + D3 phi)` with
    ///
    /// ```text
    /// A3 = dzbar^3 + 3 [dz^-1 (pq)_zbar] dzbar + 3 [dz^-1 (q p_zbar)_zbar]
    /// B3 = -p dz^2 + p_z dz - p_zz - 3 p [dzbar^-1 (pq)_z]
    /// C3 = -q dzbar^2 + q_zbar dzbar - q_zbarzbar - 3 q [dzbar^-1 (pq)_zbar]
    /// D3 = dz^3 + 3 [dzbar^-1 (pq)_z] dz + 3 [dz^-1 (pq)_zbar]
    /// ```
    pub fn linear_n3(&self, p: &Field, q: &Field, psi: &Field, phi: &Field) -> Result<(Field, Field), FlowError> {
        for f in [p, q, psi, phi] {
            self.check(f)?;
        }
        let three = num_complex::Complex64::new(3.0, 0.0);
        let pq = self.prod(p, q);
        let s_z = self.d(&pq, 1, -1); // dzbar^-1 (pq)_z
        let s_zbar = self.d(&pq, -1, 1); // dz^-1 (pq)_zbar
        let pz = self.d(p, 1, 0);
        let pzbar = self.d(p, 0, 1);
        let qzbar = self.d(q, 0, 1);

        let mut a = self.d(psi, 0, 3);
        a.scaled_add(three, &self.prod(&s_zbar, &self.d(psi, 0, 1)));
        let w = self.d(&self.prod(q, &pzbar), -1, 1);
        a.scaled_add(three, &self.prod(&w, psi));

        let mut b = -self.prod(p, &self.d(phi, 2, 0));
        b += &self.prod(&pz, &self.d(phi, 1, 0));
        b -= &self.prod(&self.d(p, 2, 0), phi);
        b.scaled_add(-three, &self.prod(&self.prod(p, &s_z), phi));

        let mut cc = -self.prod(q, &self.d(psi, 0, 2));
        cc += &self.prod(&qzbar, &self.d(psi, 0, 1));
        cc -= &self.prod(&self.d(q, 0, 2), psi);
        let t = self.d(&self.d(&pq, 0, 1), 0, -1); // dzbar^-1 (pq)_zbar
        cc.scaled_add(-three, &self.prod(&self.prod(q, &t), psi));

        let mut dd = self.d(phi, 3, 0);
        dd.scaled_add(three, &self.prod(&s_z, &self.d(phi, 1, 0)));
        dd.scaled_add(three, &self.prod(&s_zbar, phi));

        Ok((&a + &b, &cc + &dd))
    }
}

fn operator_for(p: &PotentialField, q: &PotentialField) -> Result<DsiiOperator, FlowError> {
    if p.domain != q.domain {
        return Err(FlowError::DomainMismatch);
    }
    DsiiOperator::new(&p.domain, true)
}

/// `(p_t, q_t)` of the n = 3 flow with dealiasing.
pub fn dsii3_rhs(p: &PotentialField, q: &PotentialField) -> Result<(Field, Field), FlowError> {
    operator_for(p, q)?.dsii3(&p.values, &q.values)
}

pub fn mvn_rhs(p: &PotentialField) -> Result<Field, FlowError> {
    DsiiOperator::new(&p.domain, true)?.mvn(p)
}

pub fn vn_rhs(p: &PotentialField) -> Result<Field, FlowError> {
    DsiiOperator::new(&p.domain, true)?.vn(p)
}

pub fn linear_operators_n3(
    p: &PotentialField,
    q: &PotentialField,
    psi: &Field,
    phi: &Field,
) -> Result<(Field, Field), FlowError> {
    operator_for(p, q)?.linear_n3(&p.values, &q.values, psi, phi)
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::grid::{max_abs, GridDomain};
    use crate::spectral::Wirtinger;

    fn mode(d: &GridDomain, m: f64, n: f64, amp: Complex64) -> Field {
        d.sample(|z| amp * Complex64::new(0.0, m * z.re + n * z.im).exp())
    }

    /// Symbol of `dz^3 + dzbar^3` for mode `exp(i(mx + ny))`.
    fn cubic_symbol(m: f64, n: f64) -> Complex64 {
        let a = Complex64::new(n, m) / 2.0;
        let b = Complex64::new(-n, m) / 2.0;
        a * a * a + b * b * b
    }

    #[test]
    fn zero_fields() {
        let d = GridDomain::periodic_square(16).unwrap();
        let z = PotentialField::zeros(d).unwrap();
        let (pt, qt) = dsii3_rhs(&z, &z).unwrap();
        assert_eq!(max_abs(&pt), 0.0);
        assert_eq!(max_abs(&qt), 0.0);
        assert_eq!(max_abs(&mvn_rhs(&z).unwrap()), 0.0);
        assert_eq!(max_abs(&vn_rhs(&z).unwrap()), 0.0);
    }

    #[test]
    fn linear_single_mode() {
        let d = GridDomain::periodic_square(16).unwrap();
        let p = PotentialField::new(d, mode(&d, 3.0, 2.0, Complex64::new(1e-3, 0.0))).unwrap();
        let q = PotentialField::zeros(d).unwrap();
        let (pt, qt) = dsii3_rhs(&p, &q).unwrap();
        let expected = p.values.mapv(|v| v * cubic_symbol(3.0, 2.0));
        assert!(max_abs(&(&pt - &expected)) < 1e-15);
        assert_eq!(max_abs(&qt), 0.0);
        assert!((cubic_symbol(3.0, 2.0) - Complex64::new(0.0, 2.25)).norm() < 1e-14);
    }

    #[test]
    fn vn_constant_is_stationary() {
        let d = GridDomain::periodic_square(16).unwrap();
        let p = PotentialField::new(d, d.constant(Complex64::new(2.0, 0.0))).unwrap();
        assert!(max_abs(&vn_rhs(&p).unwrap()) < 1e-13);
    }

    #[test]
    fn reductions_reject_complex_input() {
        let d = GridDomain::periodic_square(8).unwrap();
        let p = PotentialField::new(d, d.constant(Complex64::new(1.0, 0.5))).unwrap();
        assert!(matches!(mvn_rhs(&p), Err(FlowError::NotReal(_))));
        assert!(matches!(vn_rhs(&p), Err(FlowError::NotReal(_))));
    }

    #[test]
    fn free_linear_operators() {
        let d = GridDomain::periodic_square(16).unwrap();
        let z = PotentialField::zeros(d).unwrap();
        let psi = mode(&d, 2.0, -1.0, Complex64::new(0.5, 0.2));
        let phi = mode(&d, -1.0, 3.0, Complex64::new(1.0, 0.0));
        let (psi_t, phi_t) = linear_operators_n3(&z, &z, &psi, &phi).unwrap();
        let s = crate::spectral::Spectral::new(&d).unwrap();
        let sb = s.symbol(Wirtinger::Zbar, 2, 15);
        let sz = s.symbol(Wirtinger::Z, 15, 3);
        assert!(max_abs(&(&psi_t - &psi.mapv(|v| v * sb.powi(3)))) < 1e-12);
        assert!(max_abs(&(&phi_t - &phi.mapv(|v| v * sz.powi(3)))) < 1e-12);
        let zero = d.zeros();
        let (a, b) = linear_operators_n3(&z, &z, &zero, &zero).unwrap();
        assert_eq!(max_abs(&a) + max_abs(&b), 0.0);
    }

    fn smooth_real(d: &GridDomain) -> Field {
        d.sample(|z| {
            let (x, y) = (z.re, z.im);
            Complex64::new(0.4 * (2.0 * x + y).cos() + 0.3 * (x - 3.0 * y).sin() + 0.2 * (4.0 * y).cos() + 0.1, 0.0)
        })
    }

    fn rel(a: &Field, b: &Field) -> f64 {
        max_abs(&(a - b)) / max_abs(b)
    }

    #[test]
    fn mvn_reduction() {
        let d = GridDomain::periodic_square(32).unwrap();
        let p = PotentialField::new(d, smooth_real(&d)).unwrap();
        let (pt, qt) = dsii3_rhs(&p, &p).unwrap();
        let m = mvn_rhs(&p).unwrap();
        assert!(rel(&pt, &m) < 1e-10);
        assert!(rel(&qt, &m) < 1e-10);
    }

    #[test]
    fn vn_reduction() {
        let d = GridDomain::periodic_square(32).unwrap();
        let p = PotentialField::new(d, smooth_real(&d)).unwrap();
        let one = PotentialField::new(d, d.constant(Complex64::new(1.0, 0.0))).unwrap();
        let (pt, qt) = dsii3_rhs(&p, &one).unwrap();
        let v = vn_rhs(&p).unwrap();
        assert!(rel(&pt, &v) < 1e-10);
        assert!(max_abs(&qt) < 1e-10 * max_abs(&v));
    }

    #[test]
    fn domain_mismatch() {
        let a = PotentialField::zeros(GridDomain::periodic_square(8).unwrap()).unwrap();
        let b = PotentialField::zeros(GridDomain::periodic_square(16).unwrap()).unwrap();
        assert_eq!(dsii3_rhs(&a, &b).unwrap_err(), FlowError::DomainMismatch);
    }
}
