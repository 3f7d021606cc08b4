use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{solve_states, PhaseBoundaryStates, PressureLaw};
use crate::error::{Error, Result};
use crate::kernel::{phase_boundary_pair_kernel, PairKernel};
use crate::numerics::bisect;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `X = (c^2 - u^2)|eta|^2 - tau^2` on one side.
fn side_term(c: f64, u: f64, eta_norm: f64, tau: f64) -> f64 {
    (c * c - u * u) * eta_norm * eta_norm - tau * tau
}

/// Largest `|tau|` for which both sides stay elliptic.
pub fn ellipticity_bound(s: &PhaseBoundaryStates, eta_norm: f64) -> f64 {
    eta_norm * (s.c_l * s.c_l - s.u_l * s.u_l).min(s.c_r * s.c_r - s.u_r * s.u_r).sqrt()
}

/// `u_l u_r a_l a_r + c_l^2 c_r^2 tau^2`; NaN outside the elliptic range.
pub fn dispersion_lhs(s: &PhaseBoundaryStates, eta_norm: f64, tau: f64) -> f64 {
    let (xl, xr) = (side_term(s.c_l, s.u_l, eta_norm, tau), side_term(s.c_r, s.u_r, eta_norm, tau));
    if xl < 0.0 || xr < 0.0 {
        return f64::NAN;
    }
    let (al, ar) = (-s.c_l * xl.sqrt(), s.c_r * xr.sqrt());
    s.u_l * s.u_r * al * ar + (s.c_l * s.c_r * tau).powi(2)
}

/// The positive root of the dispersion relation, by bisection on
/// `u_l u_r c_l c_r sqrt(X_l X_r) - c_l^2 c_r^2 tau^2`, which decreases on the elliptic range.
pub fn dispersion_root(s: &PhaseBoundaryStates, eta_norm: f64) -> Result<f64> {
    if !(eta_norm > 0.0) {
        return Err(Error::Geometry(format!("|eta| must be positive, got {eta_norm}")));
    }
    s.check()?;
    let tau_max = ellipticity_bound(s, eta_norm);
    let f = |tau: f64| {
        let (xl, xr) = (side_term(s.c_l, s.u_l, eta_norm, tau), side_term(s.c_r, s.u_r, eta_norm, tau));
        s.u_l * s.u_r * s.c_l * s.c_r * (xl.max(0.0) * xr.max(0.0)).sqrt() - (s.c_l * s.c_r * tau).powi(2)
    };
    bisect(f, 0.0, tau_max, 400)
        .filter(|&t| t > 0.0 && t < tau_max)
        .ok_or_else(|| Error::NoRoot(format!("dispersion relation has no sign change on (0, {tau_max})")))
}

/// Decay rates and interior mode amplitudes on both sides of the front.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearCoefficients {
    pub a_l: f64,
    pub a_r: f64,
    /// Mode on the left behaves like `exp(-beta1 z)`, on the right like `exp(beta2 z)`.
    pub beta1: Complex64,
    pub beta2: Complex64,
    pub gamma1: Complex64,
    pub gamma2: Complex64,
}

pub fn linear_coefficients(s: &PhaseBoundaryStates, eta_norm: f64, tau: f64) -> Result<LinearCoefficients> {
    let (xl, xr) = (side_term(s.c_l, s.u_l, eta_norm, tau), side_term(s.c_r, s.u_r, eta_norm, tau));
    if !(xl > 0.0 && xr > 0.0) {
        return Err(Error::Geometry(format!("tau = {tau} is outside the elliptic range for |eta| = {eta_norm}")));
    }
    let (a_l, a_r) = (-s.c_l * xl.sqrt(), s.c_r * xr.sqrt());
    let beta1 = (a_l - I * s.u_l * tau) / (s.c_l * s.c_l - s.u_l * s.u_l);
    let beta2 = (-a_r + I * s.u_r * tau) / (s.c_r * s.c_r - s.u_r * s.u_r);
    let jump = s.rho_r - s.rho_l;
    let gamma1 = jump * s.u_r * tau / (s.u_r * a_l - I * s.c_l * s.c_l * tau);
    let gamma2 = -jump * s.u_l * tau / (s.u_l * a_r - I * s.c_r * s.c_r * tau);
    Ok(LinearCoefficients { a_l, a_r, beta1, beta2, gamma1, gamma2 })
}

/// `(alpha0, alpha1, gamma)` with `gamma = alpha1 / (4 pi alpha0)`.
pub fn amplitude_coefficients(
    s: &PhaseBoundaryStates,
    eta_norm: f64,
    tau: f64,
    lin: &LinearCoefficients,
) -> (f64, Complex64, Complex64) {
    let (cl2, cr2) = (s.c_l * s.c_l, s.c_r * s.c_r);
    let (ul, ur) = (s.u_l, s.u_r);
    let e2 = eta_norm * eta_norm;
    let (xl, xr) = (side_term(s.c_l, ul, eta_norm, tau), side_term(s.c_r, ur, eta_norm, tau));
    let alpha0 = -((ul * ur).powi(2) * (xl + xr) + 2.0 * cl2 * cr2 * tau * tau) / tau;
    if s.rho_r == s.rho_l {
        return (alpha0, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    }
    let LinearCoefficients { a_l, a_r, beta1, beta2, gamma1, gamma2 } = *lin;
    let flux_term = 2.0 / (ur - ul)
        * (tau * tau + ul * ur * e2)
        * I
        * cl2
        * cr2
        * tau
        * (cr2 * gamma2 / (s.rho_r * ur) - cl2 * gamma1 / (s.rho_l * ul));
    let left = (0.5 * s.d2p_l + cl2 / s.rho_l)
        * ul
        * ur
        * (a_r / a_l)
        * (tau * tau + ul * ul * e2)
        * gamma1
        * (I * tau - ul * beta1);
    let right = (0.5 * s.d2p_r + cr2 / s.rho_r)
        * ul
        * ur
        * (a_l / a_r)
        * (tau * tau + ur * ur * e2)
        * gamma2
        * (I * tau + ur * beta2);
    let alpha1 = flux_term + left + right;
    (alpha0, alpha1, alpha1 / (4.0 * PI * alpha0))
}

/// Everything the phase-boundary pipeline produces for one front and one `|eta|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseBoundaryData {
    pub states: PhaseBoundaryStates,
    pub eta_norm: f64,
    pub tau: f64,
    /// `|dispersion lhs| / (c_l^2 c_r^2 tau_max^2)` at the returned root.
    pub dispersion_residual: f64,
    pub coefficients: LinearCoefficients,
    pub alpha0: f64,
    pub alpha1: Complex64,
    pub gamma: Complex64,
}

impl PhaseBoundaryData {
    /// Interior mode `(R, U)` at depth `z`, with `U` split into components along `eta` and `nu`.
    pub fn mode(&self, z: f64) -> (Complex64, [Complex64; 2]) {
        let s = &self.states;
        let c = &self.coefficients;
        let (tau, eta) = (self.tau, self.eta_norm);
        if z < 0.0 {
            let amp = c.gamma1 * (-c.beta1 * z).exp();
            let r = amp * (-I * tau + s.u_l * c.beta1);
            (r, [amp * I * s.c_l * s.c_l * eta, -amp * c.a_l])
        } else {
            let amp = c.gamma2 * (c.beta2 * z).exp();
            let r = amp * (-I * tau - s.u_r * c.beta2);
            (r, [amp * I * s.c_r * s.c_r * eta, -amp * c.a_r])
        }
    }

    /// Relative residual of the mode in the linearized mass and momentum equations,
    /// perturbations taken as `exp(i (tau t + eta . x))` times the profile.
    pub fn mode_residual(&self, z: f64) -> f64 {
        let s = &self.states;
        let (rho_pert, m) = self.mode(z);
        let (u, c2, rate) = if z < 0.0 {
            (s.u_l, s.c_l * s.c_l, -self.coefficients.beta1)
        } else {
            (s.u_r, s.c_r * s.c_r, self.coefficients.beta2)
        };
        let wave = [I * self.eta_norm, rate];
        let tau = self.tau;
        let mass = I * tau * rho_pert + wave[0] * m[0] + wave[1] * m[1];
        let m_dot_k = m[0] * wave[0] + m[1] * wave[1];
        let momentum = [
            I * tau * m[0] + u * rate * m[0] + c2 * rho_pert * wave[0],
            I * tau * m[1] + u * rate * m[1] + u * m_dot_k - u * u * rho_pert * rate + c2 * rho_pert * wave[1],
        ];
        let k = wave[0].norm() + wave[1].norm();
        let mag = rho_pert.norm() + m[0].norm() + m[1].norm();
        let scale = (tau.abs() + (u + u * u + c2) * k) * mag;
        [mass, momentum[0], momentum[1]].iter().map(|r| r.norm()).fold(0.0, f64::max) / scale
    }

    /// The pair kernel of the amplitude equation.
    pub fn pair_kernel(&self) -> PairKernel {
        phase_boundary_pair_kernel(self.gamma)
    }
}

/// Dispersion root and coefficients for given states.
pub fn analyze_states(states: &PhaseBoundaryStates, eta_norm: f64) -> Result<PhaseBoundaryData> {
    let tau = dispersion_root(states, eta_norm)?;
    let coefficients = linear_coefficients(states, eta_norm, tau)?;
    let (alpha0, alpha1, gamma) = amplitude_coefficients(states, eta_norm, tau, &coefficients);
    let tau_max = ellipticity_bound(states, eta_norm);
    let scale = (states.c_l * states.c_r * tau_max).powi(2);
    Ok(PhaseBoundaryData {
        states: *states,
        eta_norm,
        tau,
        dispersion_residual: dispersion_lhs(states, eta_norm, tau).abs() / scale,
        coefficients,
        alpha0,
        alpha1,
        gamma,
    })
}

/// Full pipeline from a pressure law and a left density.
pub fn analyze(law: &dyn PressureLaw, rho_l: f64, guess: Option<f64>, eta_norm: f64) -> Result<PhaseBoundaryData> {
    let states = solve_states(law, rho_l, guess)?;
    analyze_states(&states, eta_norm)
}
