use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{functional_m, functional_t, GalerkinBand, KernelTable, SpectralState, SOBOLEV_INDEX};
use crate::error::{Error, Result};
use crate::kernel::{rescale_from_p, Kernel, PairKernel};

/// Integration halts once any coefficient exceeds this modulus.
pub const BLOW_UP: f64 = 1e12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormTag {
    /// `w_s = sign * (-H B[w])`.
    #[serde(rename = "W_FORM")]
    W,
    /// `u = |d_y|^{1/2} w`, `u_s = sign * d_y P[u]`.
    #[serde(rename = "U_FORM")]
    U,
    /// `v = |d_y| w`, `v_s = sign * d_y Q[v]`.
    #[serde(rename = "V_FORM")]
    V,
}

impl FormTag {
    /// Power of `|d_y|` taking `w` to this form's unknown.
    pub fn multiplier_power(self) -> f64 {
        match self {
            FormTag::W => 0.0,
            FormTag::U => 0.5,
            FormTag::V => 1.0,
        }
    }

    /// Maps a `w` state to this form's unknown.
    pub fn from_w(self, w: &SpectralState) -> SpectralState {
        match self {
            FormTag::W => w.clone(),
            _ => w.abs_derivative(self.multiplier_power()),
        }
    }

    /// Maps this form's unknown back to `w`.
    pub fn to_w(self, state: &SpectralState) -> SpectralState {
        match self {
            FormTag::W => state.clone(),
            _ => state.abs_derivative(-self.multiplier_power()),
        }
    }
}

/// An evolution equation: which unknown, which kernel, and the sign of the normalization.
#[derive(Clone)]
pub enum EvolutionForm {
    W { kernel: Kernel, sign: f64 },
    U { kernel: Kernel, sign: f64 },
    V { kernel: PairKernel, sign: f64 },
}

impl std::fmt::Debug for EvolutionForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            EvolutionForm::W { kernel, .. } | EvolutionForm::U { kernel, .. } => kernel.name().to_string(),
            EvolutionForm::V { kernel, .. } => kernel.name().to_string(),
        };
        f.debug_struct("EvolutionForm")
            .field("tag", &self.tag())
            .field("kernel", &name)
            .field("sign", &self.sign())
            .finish()
    }
}

impl EvolutionForm {
    pub fn tag(&self) -> FormTag {
        match self {
            EvolutionForm::W { .. } => FormTag::W,
            EvolutionForm::U { .. } => FormTag::U,
            EvolutionForm::V { .. } => FormTag::V,
        }
    }

    pub fn sign(&self) -> f64 {
        match self {
            EvolutionForm::W { sign, .. } | EvolutionForm::U { sign, .. } | EvolutionForm::V { sign, .. } => *sign,
        }
    }

    pub fn kernel_name(&self) -> String {
        match self {
            EvolutionForm::W { kernel, .. } | EvolutionForm::U { kernel, .. } => kernel.name().to_string(),
            EvolutionForm::V { kernel, .. } => kernel.name().to_string(),
        }
    }

    /// The kernel on zero-sum triples acting on `w`, used for `T`.
    pub fn trilinear(&self) -> Kernel {
        match self {
            EvolutionForm::W { kernel, .. } => kernel.clone(),
            EvolutionForm::U { kernel, .. } => rescale_from_p(kernel),
            EvolutionForm::V { kernel, .. } => kernel.to_trilinear(),
        }
    }

    fn table(&self, n_modes: usize, band: GalerkinBand) -> KernelTable {
        match self {
            EvolutionForm::W { kernel, .. } | EvolutionForm::U { kernel, .. } => KernelTable::trilinear(kernel, n_modes, band),
            EvolutionForm::V { kernel, .. } => KernelTable::pair(kernel, n_modes, band),
        }
    }
}

/// Aligned time series of the monitored quantities, all evaluated on `w`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ConservationLog {
    pub times: Vec<f64>,
    pub m_values: Vec<f64>,
    pub t_values: Vec<f64>,
    pub l2_values: Vec<f64>,
    pub hsigma_values: Vec<f64>,
}

impl ConservationLog {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// `max |M(s) - M(0)| / |M(0)|`.
    pub fn relative_m_drift(&self) -> f64 {
        relative_drift(&self.m_values)
    }

    /// `max |T(s) - T(0)|`.
    pub fn t_drift(&self) -> f64 {
        self.t_values.iter().map(|t| (t - self.t_values[0]).abs()).fold(0.0, f64::max)
    }
}

fn relative_drift(values: &[f64]) -> f64 {
    let first = values[0];
    values.iter().map(|v| (v - first).abs()).fold(0.0, f64::max) / first.abs()
}

/// Final state, log, and the reason for stopping early, if any.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub state: SpectralState,
    pub log: ConservationLog,
    pub steps_taken: usize,
    pub halted: Option<String>,
}

/// Right-hand side and RK4 stepping for one form and band.
pub struct Evolver {
    form: EvolutionForm,
    table: KernelTable,
    trilinear: Kernel,
}

impl Evolver {
    pub fn new(form: &EvolutionForm, n_modes: usize, band: GalerkinBand) -> Self {
        Self { form: form.clone(), table: form.table(n_modes, band), trilinear: form.trilinear() }
    }

    pub fn form(&self) -> &EvolutionForm {
        &self.form
    }

    pub fn table(&self) -> &KernelTable {
        &self.table
    }

    /// Time derivative of modes `k = 1..=K`.
    pub fn rhs(&self, state: &SpectralState) -> Vec<Complex64> {
        let sum = self.table.apply_positive(state);
        let sign = self.form.sign();
        match self.form.tag() {
            // -H multiplies positive modes by i
            FormTag::W => sum.into_iter().map(|s| Complex64::new(0.0, sign) * s).collect(),
            _ => sum.into_iter().enumerate().map(|(i, s)| Complex64::new(0.0, sign * (i + 1) as f64) * s).collect(),
        }
    }

    /// One classical fourth-order Runge–Kutta step.
    pub fn step(&self, state: &SpectralState, dt: f64) -> SpectralState {
        let shifted = |k: &[Complex64], h: f64| {
            let coeffs = state.coeffs().iter().zip(k).map(|(w, d)| w + d * h).collect();
            SpectralState::from_coeffs(coeffs)
        };
        let k1 = self.rhs(state);
        let k2 = self.rhs(&shifted(&k1, 0.5 * dt));
        let k3 = self.rhs(&shifted(&k2, 0.5 * dt));
        let k4 = self.rhs(&shifted(&k3, dt));
        let coeffs = state
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, w)| w + (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0))
            .collect();
        let mut next = SpectralState::from_coeffs(coeffs);
        next.time = state.time + dt;
        next
    }

    /// `(M, T, L2, H^sigma)` of the underlying `w`.
    pub fn diagnostics(&self, state: &SpectralState) -> (f64, f64, f64, f64) {
        let w = self.form.tag().to_w(state);
        (functional_m(&w), functional_t(&w, &self.trilinear), w.l2_norm(), w.sobolev_norm(SOBOLEV_INDEX))
    }

    fn record(&self, log: &mut ConservationLog, state: &SpectralState) {
        let (m, t, l2, hs) = self.diagnostics(state);
        log.times.push(state.time);
        log.m_values.push(m);
        log.t_values.push(t);
        log.l2_values.push(l2);
        log.hsigma_values.push(hs);
    }
}

/// RK4 with full Galerkin truncation.
pub fn integrate(
    form: &EvolutionForm,
    state0: &SpectralState,
    dt: f64,
    n_steps: usize,
    log_every: usize,
) -> Result<RunOutcome> {
    integrate_with(form, state0, dt, n_steps, log_every, GalerkinBand::Full)
}

/// RK4 from `state0` for `n_steps` steps of size `dt` (negative `dt` runs backwards),
/// logging every `log_every` steps and at the end.
pub fn integrate_with(
    form: &EvolutionForm,
    state0: &SpectralState,
    dt: f64,
    n_steps: usize,
    log_every: usize,
    band: GalerkinBand,
) -> Result<RunOutcome> {
    if !(dt.is_finite() && dt != 0.0) {
        return Err(Error::Spectral(format!("time step must be finite and nonzero, got {dt}")));
    }
    if log_every == 0 {
        return Err(Error::Spectral("log_every must be positive".into()));
    }
    if !state0.is_finite() {
        return Err(Error::Spectral("initial state has non-finite coefficients".into()));
    }
    let k = state0.n_modes();
    let evolver = Evolver::new(form, k, band);
    if band != GalerkinBand::Full {
        log::warn!("2/3 leg truncation does not conserve M or T");
    }
    let norm = state0.l2_norm();
    let limit = 0.5 / (k as f64 * evolver.table.sup().max(1.0) * norm);
    if dt.abs() > limit {
        log::warn!("dt = {dt:e} exceeds the stability guide {limit:e} (K = {k}, L2 = {norm:e})");
    }
    let mut log = ConservationLog::default();
    let mut state = state0.clone();
    evolver.record(&mut log, &state);
    for step in 1..=n_steps {
        let next = evolver.step(&state, dt);
        if !next.is_finite() || next.max_abs() > BLOW_UP {
            let reason = format!("blow-up at s = {}: max |coefficient| = {:e}", next.time, next.max_abs());
            log::warn!("{reason}");
            return Ok(RunOutcome { state: next, log, steps_taken: step, halted: Some(reason) });
        }
        state = next;
        if step % log_every == 0 || step == n_steps {
            evolver.record(&mut log, &state);
        }
    }
    Ok(RunOutcome { state, log, steps_taken: n_steps, halted: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{constant_kernel, hiz_kernel, reduce_to_q};

    #[test]
    fn zero_state_stays_zero() {
        let form = EvolutionForm::W { kernel: hiz_kernel(), sign: 1.0 };
        let out = integrate(&form, &SpectralState::zeros(8), 1e-2, 10, 5).unwrap();
        assert!(out.state.coeffs().iter().all(|c| c.norm() == 0.0));
        assert_eq!(out.log.len(), 3);
    }

    #[test]
    fn zero_kernel_gives_zero_dynamics() {
        let form = EvolutionForm::U { kernel: constant_kernel(0.0), sign: 1.0 };
        let w = SpectralState::cosine(8);
        let out = integrate(&form, &w, 1e-2, 5, 5).unwrap();
        assert_eq!(out.state.coeffs(), w.coeffs());
    }

    #[test]
    fn time_reversal() {
        let form = EvolutionForm::V { kernel: reduce_to_q(&hiz_kernel()).unwrap(), sign: -1.0 };
        let v0 = FormTag::V.from_w(&SpectralState::cosine(16));
        let fwd = integrate(&form, &v0, 1e-2, 20, 20).unwrap().state;
        let back = integrate(&form, &fwd, -1e-2, 20, 20).unwrap().state;
        assert!(back.l2_distance(&v0) < 1e-9);
    }

    #[test]
    fn blow_up_halts_with_partial_log() {
        let form = EvolutionForm::W { kernel: constant_kernel(1.0), sign: 1.0 };
        let w = SpectralState::from_modes(4, &[(1, 1e6, 0.0), (2, 1e6, 0.5)]).unwrap();
        let out = integrate(&form, &w, 1.0, 50, 1).unwrap();
        assert!(out.halted.is_some());
        assert!(!out.log.is_empty());
    }
}
