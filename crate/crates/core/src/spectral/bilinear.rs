use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{SpectralState, ZERO};
use crate::kernel::{Kernel, PairKernel};

/// Which legs of a triple may enter the Galerkin sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GalerkinBand {
    /// All three legs in `|k| <= K`; keeps M and T conserved by the semi-discrete flow.
    #[default]
    Full,
    /// Input legs restricted to `|k| <= 2K/3`. Experimental: breaks the conservation laws.
    TwoThirds,
}

impl GalerkinBand {
    pub fn leg_limit(self, n_modes: usize) -> i64 {
        match self {
            GalerkinBand::Full => n_modes as i64,
            GalerkinBand::TwoThirds => (2 * n_modes / 3) as i64,
        }
    }
}

/// `sum_m weight(k, m) w(k - m) w(m)` over `0 < |m|, |k - m| <= legs`.
///
/// `w` holds `k = -n..=n`. Both the direct and the tabulated paths go through here so
/// that they agree bit for bit.
#[inline]
fn galerkin_sum(w: &[Complex64], n: i64, legs: i64, k: i64, weight: impl Fn(i64) -> Complex64) -> Complex64 {
    let mut acc = ZERO;
    for m in (k - legs).max(-legs)..=(k + legs).min(legs) {
        if m == 0 || m == k {
            continue;
        }
        acc += weight(m) * w[(k - m + n) as usize] * w[(m + n) as usize];
    }
    acc
}

fn full_sum(state: &SpectralState, band: GalerkinBand, weight: impl Fn(i64, i64) -> Complex64 + Sync) -> Vec<Complex64> {
    let n = state.n_modes() as i64;
    let legs = band.leg_limit(state.n_modes());
    let w = state.full();
    (-n..=n)
        .into_par_iter()
        .map(|k| if k == 0 { ZERO } else { galerkin_sum(&w, n, legs, k, |m| weight(k, m)) })
        .collect()
}

/// `B_k = sum_m b(-k, k - m, m) w(k - m) w(m)` for `k = -K..=K` (entry `k + K`).
pub fn bilinear_b(state: &SpectralState, kernel: &Kernel, band: GalerkinBand) -> Vec<Complex64> {
    full_sum(state, band, |k, m| kernel.eval_unchecked(-k as f64, (k - m) as f64, m as f64))
}

/// Same sum for a degree-1/2 kernel acting on `u`.
pub fn bilinear_p(state: &SpectralState, kernel: &Kernel, band: GalerkinBand) -> Vec<Complex64> {
    bilinear_b(state, kernel, band)
}

/// `Q_k = sum_m q(k - m, m) v(k - m) v(m)`.
pub fn bilinear_q(state: &SpectralState, q: &PairKernel, band: GalerkinBand) -> Vec<Complex64> {
    full_sum(state, band, |k, m| q.eval_unchecked((k - m) as f64, m as f64))
}

/// Kernel weights of every in-band `(k, m)` pair, evaluated once.
#[derive(Debug, Clone)]
pub struct KernelTable {
    n: i64,
    legs: i64,
    band: GalerkinBand,
    values: Vec<Complex64>,
}

impl KernelTable {
    fn build(n_modes: usize, band: GalerkinBand, weight: impl Fn(i64, i64) -> Complex64 + Sync) -> Self {
        let n = n_modes as i64;
        let legs = band.leg_limit(n_modes);
        let width = (2 * n + 1) as usize;
        let values = (-n..=n)
            .into_par_iter()
            .flat_map_iter(|k| {
                let weight = &weight;
                (-n..=n).map(move |m| {
                    let in_band = k != 0 && m != 0 && m != k && m.abs() <= legs && (k - m).abs() <= legs;
                    if in_band {
                        weight(k, m)
                    } else {
                        ZERO
                    }
                })
            })
            .collect::<Vec<_>>();
        debug_assert_eq!(values.len(), width * width);
        Self { n, legs, band, values }
    }

    /// Table of `b(-k, k - m, m)`.
    pub fn trilinear(kernel: &Kernel, n_modes: usize, band: GalerkinBand) -> Self {
        Self::build(n_modes, band, |k, m| kernel.eval_unchecked(-k as f64, (k - m) as f64, m as f64))
    }

    /// Table of `q(k - m, m)`.
    pub fn pair(q: &PairKernel, n_modes: usize, band: GalerkinBand) -> Self {
        Self::build(n_modes, band, |k, m| q.eval_unchecked((k - m) as f64, m as f64))
    }

    pub fn n_modes(&self) -> usize {
        self.n as usize
    }

    pub fn band(&self) -> GalerkinBand {
        self.band
    }

    #[inline]
    pub fn get(&self, k: i64, m: i64) -> Complex64 {
        let width = 2 * self.n + 1;
        self.values[((k + self.n) * width + m + self.n) as usize]
    }

    /// Largest tabulated modulus.
    pub fn sup(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// The sum for `k = -K..=K`, identical to the direct path.
    pub fn apply(&self, state: &SpectralState) -> Vec<Complex64> {
        assert_eq!(state.n_modes() as i64, self.n, "table built for a different band");
        let w = state.full();
        (-self.n..=self.n)
            .into_par_iter()
            .map(|k| if k == 0 { ZERO } else { galerkin_sum(&w, self.n, self.legs, k, |m| self.get(k, m)) })
            .collect()
    }

    /// The sum for `k = 1..=K` only.
    pub fn apply_positive(&self, state: &SpectralState) -> Vec<Complex64> {
        assert_eq!(state.n_modes() as i64, self.n, "table built for a different band");
        let w = state.full();
        (1..=self.n).into_par_iter().map(|k| galerkin_sum(&w, self.n, self.legs, k, |m| self.get(k, m))).collect()
    }
}
