//! Periodic pseudo-spectral solver for the amplitude equation in its three forms.
//!
//! States live on `[0, 2 pi)` with integer wavenumbers and Fourier-series coefficients,
//! `w(y) = sum_k w_k e^{i k y}`, so `cos y` has `w_1 = 1/2`. Only `k = 1..=K` is stored;
//! negative modes follow from reality and the mean is pinned to zero.

mod bilinear;
mod evolve;
mod io;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use bilinear::{bilinear_b, bilinear_p, bilinear_q, GalerkinBand, KernelTable};
pub use evolve::{integrate, integrate_with, ConservationLog, EvolutionForm, Evolver, FormTag, RunOutcome, BLOW_UP};
pub use io::{read_spectrum_csv, write_log_csv, write_spectrum_csv};

use crate::error::{Error, Result};
use crate::kernel::Kernel;

/// Sobolev index of the logged `H^sigma` norm.
pub const SOBOLEV_INDEX: f64 = 2.5;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// A real, mean-zero, band-limited periodic function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralState {
    coeffs: Vec<Complex64>,
    pub time: f64,
}

impl SpectralState {
    pub fn zeros(n_modes: usize) -> Self {
        Self { coeffs: vec![ZERO; n_modes], time: 0.0 }
    }

    /// Coefficients for `k = 1..=K`.
    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        Self { coeffs, time: 0.0 }
    }

    /// `sum_j a_j cos(k_j y + phi_j)`.
    pub fn from_modes(n_modes: usize, modes: &[(usize, f64, f64)]) -> Result<Self> {
        let mut s = Self::zeros(n_modes);
        for &(k, amp, phase) in modes {
            if k == 0 || k > n_modes {
                return Err(Error::Spectral(format!("mode {k} outside 1..={n_modes}")));
            }
            s.coeffs[k - 1] += Complex64::from_polar(0.5 * amp, phase);
        }
        Ok(s)
    }

    /// `cos y`.
    pub fn cosine(n_modes: usize) -> Self {
        Self::from_modes(n_modes, &[(1, 1.0, 0.0)]).expect("mode 1 is always in band")
    }

    /// `w_k = exp(-alpha k^2) / 2`.
    pub fn gaussian_spectrum(n_modes: usize, alpha: f64) -> Self {
        Self::from_coeffs((1..=n_modes).map(|k| Complex64::new(0.5 * (-alpha * (k * k) as f64).exp(), 0.0)).collect())
    }

    pub fn n_modes(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    /// Coefficient of any integer wavenumber; out-of-band and zero give 0.
    pub fn coeff(&self, k: i64) -> Complex64 {
        let n = self.coeffs.len() as i64;
        match k {
            0 => ZERO,
            k if k > 0 && k <= n => self.coeffs[(k - 1) as usize],
            k if k < 0 && -k <= n => self.coeffs[(-k - 1) as usize].conj(),
            _ => ZERO,
        }
    }

    /// Coefficients for `k = -K..=K`.
    pub fn full(&self) -> Vec<Complex64> {
        let n = self.coeffs.len() as i64;
        (-n..=n).map(|k| self.coeff(k)).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Multiplies mode `k` by `m(k)` for `k >= 1`.
    pub fn map_modes(&self, m: impl Fn(usize) -> Complex64) -> Self {
        let coeffs = self.coeffs.iter().enumerate().map(|(i, c)| c * m(i + 1)).collect();
        Self { coeffs, time: self.time }
    }

    /// `|d/dy|^power`.
    pub fn abs_derivative(&self, power: f64) -> Self {
        self.map_modes(|k| Complex64::new((k as f64).powf(power), 0.0))
    }

    /// `||w||_{L^2(0, 2 pi)}`.
    pub fn l2_norm(&self) -> f64 {
        (4.0 * PI * self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>()).sqrt()
    }

    /// `(2 pi sum_{k != 0} (1 + k^2)^sigma |w_k|^2)^{1/2}`.
    pub fn sobolev_norm(&self, sigma: f64) -> f64 {
        let s: f64 = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (1.0 + ((i + 1) * (i + 1)) as f64).powf(sigma) * c.norm_sqr())
            .sum();
        (4.0 * PI * s).sqrt()
    }

    /// Values at `y_j = 2 pi j / N`.
    pub fn to_nodal(&self, n_nodes: usize) -> Vec<f64> {
        (0..n_nodes)
            .map(|j| {
                let y = 2.0 * PI * j as f64 / n_nodes as f64;
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| 2.0 * (c * Complex64::from_polar(1.0, (i + 1) as f64 * y)).re)
                    .sum()
            })
            .collect()
    }

    /// Band-limited interpolant of nodal values; exact for `N >= 2K + 1` and band-limited data.
    pub fn from_nodal(values: &[f64], n_modes: usize) -> Self {
        let n = values.len() as f64;
        let coeffs = (1..=n_modes)
            .map(|k| {
                values
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| v * Complex64::from_polar(1.0, -(k as f64) * 2.0 * PI * j as f64 / n))
                    .sum::<Complex64>()
                    / n
            })
            .collect();
        Self { coeffs, time: 0.0 }
    }

    pub fn l2_distance(&self, other: &Self) -> f64 {
        let n = self.n_modes().max(other.n_modes()) as i64;
        (4.0 * PI * (1..=n).map(|k| (self.coeff(k) - other.coeff(k)).norm_sqr()).sum::<f64>()).sqrt()
    }
}

/// Multiplier `-i sgn(k)`.
pub fn hilbert_transform(state: &SpectralState) -> SpectralState {
    state.map_modes(|_| Complex64::new(0.0, -1.0))
}

/// `M = 1/2 sum_{0 < |k| <= K} |k| |w_k|^2`.
pub fn functional_m(state: &SpectralState) -> f64 {
    state.coeffs.iter().enumerate().map(|(i, c)| (i + 1) as f64 * c.norm_sqr()).sum()
}

/// `T = 1/3 sum b(-k-m, k, m) w(-k-m) w(k) w(m)` over in-band zero-sum triples, with the
/// imaginary part (rounding only, for conjugation-symmetric kernels) returned alongside.
pub fn functional_t_complex(state: &SpectralState, kernel: &Kernel) -> Complex64 {
    let b = bilinear_b(state, kernel, GalerkinBand::Full);
    let n = state.n_modes() as i64;
    // sum_k w(-k) B(k) with B(k) = sum_{l + m = k} b(-k, l, m) w(l) w(m)
    (-n..=n).filter(|&k| k != 0).map(|k| state.coeff(-k) * b[(k + n) as usize]).sum::<Complex64>() / 3.0
}

/// Real part of [`functional_t_complex`]. Warns when the imaginary part exceeds `1e-12`
/// relative to the sum of absolute contributions.
pub fn functional_t(state: &SpectralState, kernel: &Kernel) -> f64 {
    let t = functional_t_complex(state, kernel);
    let scale = state.max_abs().powi(3).max(f64::MIN_POSITIVE);
    if t.im.abs() > 1e-12 * scale.max(t.re.abs()) {
        log::warn!("T has imaginary part {:e} (real part {:e})", t.im, t.re);
    }
    t.re
}

/// `(2 pi)^2 T`, the normalization whose gradient in `<f, g> = (2 pi / N) sum_j f_j g_j`
/// is [`variational_delta_t`].
pub fn functional_t_integral(state: &SpectralState, kernel: &Kernel) -> f64 {
    4.0 * PI * PI * functional_t(state, kernel)
}

/// `deltaT_k = 2 pi B_k` for `k = 1..=K`.
pub fn variational_delta_t(state: &SpectralState, kernel: &Kernel) -> SpectralState {
    let n = state.n_modes();
    let b = bilinear_b(state, kernel, GalerkinBand::Full);
    SpectralState::from_coeffs((1..=n).map(|k| 2.0 * PI * b[n + k]).collect())
}

/// `deltaM_k = 2 pi |k| w_k`.
pub fn variational_delta_m(state: &SpectralState) -> SpectralState {
    state.map_modes(|k| Complex64::new(2.0 * PI * k as f64, 0.0))
}

/// `max_k |i k w_k + (1 / 2 pi) (H deltaM)_k|`, zero up to rounding.
pub fn check_momentum_identity(state: &SpectralState) -> f64 {
    let h = hilbert_transform(&variational_delta_m(state));
    state
        .coeffs
        .iter()
        .zip(h.coeffs())
        .enumerate()
        .map(|(i, (w, hd))| (Complex64::new(0.0, (i + 1) as f64) * w + hd / (2.0 * PI)).norm())
        .fold(0.0, f64::max)
}
