use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::modes::{lopatinskii_matrix, stable_modes, SymbolMatrices};
use super::VariationalData;
use crate::error::{Error, Result};

/// Smallest admissible ratio of the second-smallest to the largest singular value.
const SIMPLE_GAP: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct ProfileMode {
    pub omega: Complex64,
    pub v: DVector<Complex64>,
    pub coeff: Complex64,
}

/// `V(z) = sum_i coeff_i e^{-omega_i z} v_i`, normalized so that `tau * int_0^inf |V|^2 = sign`.
#[derive(Debug, Clone)]
pub struct SurfaceWaveProfile {
    pub modes: Vec<ProfileMode>,
    pub nu: Vec<f64>,
    pub eta: Vec<f64>,
    pub tau: f64,
    /// Sign of the normalization constant, `+1` or `-1`.
    pub sign: f64,
    /// `tau * int |V|^2` before rescaling.
    pub raw_norm: f64,
}

impl SurfaceWaveProfile {
    pub fn n(&self) -> usize {
        self.modes[0].v.len()
    }

    pub fn value(&self, z: f64) -> DVector<Complex64> {
        self.combine(z, |_| Complex64::new(1.0, 0.0))
    }

    /// `V'(z)`.
    pub fn derivative(&self, z: f64) -> DVector<Complex64> {
        self.combine(z, |m| -m.omega)
    }

    fn combine(&self, z: f64, factor: impl Fn(&ProfileMode) -> Complex64) -> DVector<Complex64> {
        let mut out = DVector::from_element(self.n(), Complex64::new(0.0, 0.0));
        for m in &self.modes {
            out += &m.v * (m.coeff * factor(m) * (-m.omega * z).exp());
        }
        out
    }

    /// The amplitude profile at wavenumber `xi`: `V(xi z)` for `xi > 0`, `conj V(|xi| z)` for `xi < 0`.
    pub fn rho(&self, xi: f64, z: f64) -> DVector<Complex64> {
        let v = self.value(xi.abs() * z);
        if xi > 0.0 {
            v
        } else {
            v.map(|x| x.conj())
        }
    }

    /// `d/dz` of [`Self::rho`].
    pub fn rho_z(&self, xi: f64, z: f64) -> DVector<Complex64> {
        let v = self.derivative(xi.abs() * z) * Complex64::new(xi.abs(), 0.0);
        if xi > 0.0 {
            v
        } else {
            v.map(|x| x.conj())
        }
    }

    /// Closed form of `int_0^inf |V|^2 dz`.
    pub fn norm_integral(&self) -> f64 {
        let mut s = Complex64::new(0.0, 0.0);
        for a in &self.modes {
            for b in &self.modes {
                s += a.coeff * b.coeff.conj() * a.v.dotc(&b.v).conj() / (a.omega + b.omega.conj());
            }
        }
        s.re
    }

    /// `a(k) = i sign sgn(k)`.
    pub fn coefficient_a(&self, k: f64) -> Result<Complex64> {
        if k == 0.0 || !k.is_finite() {
            return Err(Error::InvalidTriple(k, 0.0, 0.0, "a(k) is undefined at k = 0"));
        }
        Ok(Complex64::new(0.0, self.sign * k.signum()))
    }

    /// `|traction(V)(0)| / |V(0)|`.
    pub fn boundary_residual(&self, data: &VariationalData) -> Result<f64> {
        let sym = SymbolMatrices::new(data, &self.nu, &self.eta)?;
        let mut t = DVector::from_element(self.n(), Complex64::new(0.0, 0.0));
        for m in &self.modes {
            t += sym.traction(m.omega, &m.v) * m.coeff;
        }
        Ok(t.norm() / self.value(0.0).norm())
    }

    /// Interior equation residual at depth `z`, relative to `tau^2 |V(z)|`.
    pub fn interior_residual(&self, data: &VariationalData, z: f64) -> Result<f64> {
        let sym = SymbolMatrices::new(data, &self.nu, &self.eta)?;
        let mut r = DVector::from_element(self.n(), Complex64::new(0.0, 0.0));
        for m in &self.modes {
            r += sym.pencil(m.omega, self.tau) * &m.v * (m.coeff * (-m.omega * z).exp());
        }
        Ok(r.norm() / (self.tau * self.tau * self.value(z).norm()))
    }
}

/// Builds the normalized profile at a root of the Lopatinskii determinant.
///
/// The mode coefficients span the null space of the Lopatinskii matrix; the
/// largest-magnitude coefficient is made real positive.
pub fn build_profile(data: &VariationalData, nu: &[f64], eta: &[f64], tau: f64) -> Result<SurfaceWaveProfile> {
    let modes = stable_modes(data, nu, eta, tau)?;
    let lop: DMatrix<Complex64> = lopatinskii_matrix(data, nu, eta, &modes)?;
    let n = modes.len();
    let svd = lop.svd(false, true);
    let s = &svd.singular_values;
    if n >= 2 && s[n - 2] < SIMPLE_GAP * s[0] {
        return Err(Error::NonSimpleSurfaceWave(s[n - 2] / s[0]));
    }
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut coeffs: Vec<Complex64> = (0..n).map(|i| v_t[(n - 1, i)].conj()).collect();
    let k = (0..n).max_by(|&a, &b| coeffs[a].norm().total_cmp(&coeffs[b].norm())).unwrap_or(0);
    let phase = coeffs[k].conj() / coeffs[k].norm();
    coeffs.iter_mut().for_each(|c| *c *= phase);
    let mut profile = SurfaceWaveProfile {
        modes: modes
            .into_iter()
            .zip(coeffs)
            .map(|(m, coeff)| ProfileMode { omega: m.omega, v: m.v, coeff })
            .collect(),
        nu: nu.to_vec(),
        eta: eta.to_vec(),
        tau,
        sign: 1.0,
        raw_norm: 0.0,
    };
    let raw = tau * profile.norm_integral();
    if !(raw.abs() > 0.0) {
        return Err(Error::VariationalData("profile has vanishing norm".into()));
    }
    let scale = 1.0 / raw.abs().sqrt();
    profile.modes.iter_mut().for_each(|m| m.coeff *= scale);
    profile.sign = raw.signum();
    profile.raw_norm = raw;
    Ok(profile)
}
