use nalgebra::{DMatrix, DVector, Schur, SymmetricEigen};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::VariationalData;
use crate::error::{Error, Result};
use crate::numerics::golden_min;

/// Real part threshold, relative to `|omega|`, below which a root counts as a normal mode.
const NORMAL_MODE_TOL: f64 = 1e-8;
/// Eigenvector-matrix condition number treated as a Jordan block.
const JORDAN_COND: f64 = 1e10;
/// Acceptance threshold for a refined root, relative to the scan scale.
const ROOT_TOL: f64 = 1e-12;
/// Fraction of the band excluded at each end.
const BAND_MARGIN: f64 = 1e-6;
/// Iteration cap of the complex Schur decomposition; the unbounded default can cycle.
const SCHUR_MAX_ITER: usize = 10_000;

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Contractions of the stiffness with the normal `nu` and tangential vector `eta`.
#[derive(Debug, Clone)]
pub struct SymbolMatrices {
    /// `c_{a j b l} nu_j nu_l`
    pub normal: DMatrix<f64>,
    /// `c_{a j b l} nu_j eta_l`
    pub mixed: DMatrix<f64>,
    /// `c_{a j b l} eta_j eta_l`
    pub tangential: DMatrix<f64>,
}

impl SymbolMatrices {
    pub fn new(data: &VariationalData, nu: &[f64], eta: &[f64]) -> Result<Self> {
        check_geometry(data, nu, eta)?;
        let n = data.n();
        let contract = |x: &[f64], y: &[f64]| {
            DMatrix::from_fn(n, n, |a, b| {
                let mut s = 0.0;
                for j in 0..data.d() {
                    for l in 0..data.d() {
                        s += data.c(a, j, b, l) * x[j] * y[l];
                    }
                }
                s
            })
        };
        Ok(Self { normal: contract(nu, nu), mixed: contract(nu, eta), tangential: contract(eta, eta) })
    }

    /// `omega^2 A - i omega (N + N^T) - C + tau^2 I`, which annihilates `v` for a mode `e^{-omega z} v`.
    pub fn pencil(&self, omega: Complex64, tau: f64) -> DMatrix<Complex64> {
        let n = self.normal.nrows();
        let i = Complex64::new(0.0, 1.0);
        DMatrix::from_fn(n, n, |a, b| {
            let sym = self.mixed[(a, b)] + self.mixed[(b, a)];
            let diag = if a == b { tau * tau } else { 0.0 };
            omega * omega * self.normal[(a, b)] - i * omega * sym - self.tangential[(a, b)] + diag
        })
    }

    /// Boundary traction `(-omega A + i N) v` of a mode.
    pub fn traction(&self, omega: Complex64, v: &DVector<Complex64>) -> DVector<Complex64> {
        let n = v.len();
        let i = Complex64::new(0.0, 1.0);
        DVector::from_fn(n, |a, _| (0..n).map(|b| (-omega * self.normal[(a, b)] + i * self.mixed[(a, b)]) * v[b]).sum())
    }
}

fn check_geometry(data: &VariationalData, nu: &[f64], eta: &[f64]) -> Result<()> {
    let d = data.d();
    if nu.len() != d || eta.len() != d {
        return Err(Error::Geometry(format!("nu and eta must have {d} components")));
    }
    let nn: f64 = nu.iter().map(|x| x * x).sum::<f64>().sqrt();
    let en: f64 = eta.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dot: f64 = nu.iter().zip(eta).map(|(a, b)| a * b).sum();
    if (nn - 1.0).abs() > 1e-14 {
        return Err(Error::Geometry(format!("|nu| = {nn} is not 1")));
    }
    if en == 0.0 {
        return Err(Error::Geometry("eta vanishes".into()));
    }
    if dot.abs() > 1e-14 * en {
        return Err(Error::Geometry(format!("eta . nu = {dot} is not 0")));
    }
    Ok(())
}

/// A decaying mode `e^{-omega z} v` with `Re omega > 0`, `|v| = 1`, largest entry real positive.
#[derive(Debug, Clone)]
pub struct Mode {
    pub omega: Complex64,
    pub v: DVector<Complex64>,
}

fn canonical_phase(v: &mut DVector<Complex64>) {
    let norm = v.norm();
    let k = v.iter().enumerate().max_by(|a, b| a.1.norm().total_cmp(&b.1.norm())).map(|x| x.0).unwrap_or(0);
    let phase = if v[k].norm() > 0.0 { v[k].conj() / v[k].norm() } else { Complex64::new(1.0, 0.0) };
    v.iter_mut().for_each(|x| *x = *x * phase / norm);
}

fn null_vector(m: DMatrix<Complex64>) -> (DVector<Complex64>, f64, f64) {
    let n = m.ncols();
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let s = &svd.singular_values;
    let v = DVector::from_fn(n, |i, _| v_t[(n - 1, i)].conj());
    let second = if n >= 2 { s[n - 2] } else { s[0] };
    (v, s[n - 1], second / s[0].max(f64::MIN_POSITIVE))
}

/// Solves the quadratic eigenproblem by companion linearization and keeps the `n`
/// decaying roots, sorted by real then imaginary part.
pub fn stable_modes(data: &VariationalData, nu: &[f64], eta: &[f64], tau: f64) -> Result<Vec<Mode>> {
    let sym = SymbolMatrices::new(data, nu, eta)?;
    let n = data.n();
    let a_inv = sym
        .normal
        .clone()
        .try_inverse()
        .ok_or_else(|| Error::VariationalData("normal stiffness c(nu, nu) is singular".into()))?;
    let bsum = &sym.mixed + sym.mixed.transpose();
    let lower_left = &a_inv * (&sym.tangential - DMatrix::identity(n, n) * (tau * tau));
    let lower_right = &a_inv * &bsum;
    let mut companion = DMatrix::from_element(2 * n, 2 * n, czero());
    for r in 0..n {
        companion[(r, n + r)] = Complex64::new(1.0, 0.0);
        for c in 0..n {
            companion[(n + r, c)] = Complex64::new(lower_left[(r, c)], 0.0);
            companion[(n + r, n + c)] = Complex64::new(0.0, lower_right[(r, c)]);
        }
    }
    let roots = Schur::try_new(companion, f64::EPSILON, SCHUR_MAX_ITER)
        .and_then(|schur| schur.eigenvalues())
        .ok_or_else(|| Error::VariationalData("companion eigenvalue iteration did not converge".into()))?;
    if let Some(w) = roots.iter().find(|w| w.re.abs() <= NORMAL_MODE_TOL * w.norm()) {
        return Err(Error::NormalMode(*w));
    }
    let mut modes: Vec<Mode> = roots
        .iter()
        .filter(|w| w.re > 0.0)
        .map(|&omega| {
            let (mut v, _, _) = null_vector(sym.pencil(omega, tau));
            canonical_phase(&mut v);
            Mode { omega, v }
        })
        .collect();
    if modes.len() != n {
        return Err(Error::ModeCount { expected: n, found: modes.len() });
    }
    modes.sort_by(|a, b| a.omega.re.total_cmp(&b.omega.re).then(a.omega.im.total_cmp(&b.omega.im)));
    let stacked = DMatrix::from_fn(2 * n, n, |r, c| {
        let m = &modes[c];
        if r < n {
            m.v[r]
        } else {
            m.omega * m.v[r - n]
        }
    });
    let s = stacked.singular_values();
    let (smax, smin) = (s.max(), s.min());
    let cond = if smin > 0.0 { smax / smin } else { f64::INFINITY };
    if cond > JORDAN_COND {
        return Err(Error::JordanDegeneracy(cond));
    }
    Ok(modes)
}

/// Columns are the boundary tractions of the stable modes.
pub fn lopatinskii_matrix(data: &VariationalData, nu: &[f64], eta: &[f64], modes: &[Mode]) -> Result<DMatrix<Complex64>> {
    let sym = SymbolMatrices::new(data, nu, eta)?;
    let n = data.n();
    let mut m = DMatrix::from_element(n, n, czero());
    for (i, mode) in modes.iter().enumerate() {
        m.set_column(i, &sym.traction(mode.omega, &mode.v));
    }
    Ok(m)
}

/// Determinant of the Lopatinskii matrix built from unit mode vectors.
pub fn lopatinskii_det(data: &VariationalData, nu: &[f64], eta: &[f64], tau: f64) -> Result<Complex64> {
    let modes = stable_modes(data, nu, eta, tau)?;
    Ok(lopatinskii_matrix(data, nu, eta, &modes)?.determinant())
}

/// `sqrt(min over s of lambda_min(A(eta + s nu)))`: the upper end of the elliptic band in `tau`.
pub fn elliptic_band_limit(data: &VariationalData, nu: &[f64], eta: &[f64]) -> Result<f64> {
    check_geometry(data, nu, eta)?;
    let lowest = |theta: f64| {
        let s = theta.tan();
        let xi: Vec<f64> = eta.iter().zip(nu).map(|(e, n)| e + s * n).collect();
        SymmetricEigen::new(data.acoustic_tensor(&xi)).eigenvalues.min()
    };
    let half = std::f64::consts::FRAC_PI_2 * (1.0 - 1e-9);
    let grid = 4001;
    let (mut best, mut best_val) = (0.0, f64::INFINITY);
    for i in 0..grid {
        let t = -half + 2.0 * half * i as f64 / (grid - 1) as f64;
        let v = lowest(t);
        if v < best_val {
            best_val = v;
            best = t;
        }
    }
    let step = 2.0 * half / (grid - 1) as f64;
    let (_, v) = golden_min(lowest, (best - step).max(-half), (best + step).min(half));
    let v = v.min(best_val);
    if v <= 0.0 {
        return Err(Error::Geometry("acoustic tensor is not positive along eta + s nu".into()));
    }
    Ok(v.sqrt())
}

/// The open elliptic band `(0, tau_max)` shrunk by the endpoint margin.
pub fn scan_range(data: &VariationalData, nu: &[f64], eta: &[f64]) -> Result<(f64, f64)> {
    let top = elliptic_band_limit(data, nu, eta)?;
    Ok((BAND_MARGIN * top, top * (1.0 - BAND_MARGIN)))
}

#[derive(Debug, Clone, Serialize)]
pub struct LopatinskiiRoot {
    pub tau: f64,
    /// `|Delta(tau)|` at the refined root.
    pub residual: f64,
    /// Central finite-difference estimate of `|d Delta / d tau|`.
    pub derivative: f64,
    pub simple: bool,
}

#[derive(Debug, Clone)]
pub struct LopatinskiiScan {
    pub tau_grid: Vec<f64>,
    /// NaN where the stable-mode computation failed.
    pub det_values: Vec<Complex64>,
    pub roots: Vec<LopatinskiiRoot>,
    /// Largest `|Delta|` over the grid.
    pub scale: f64,
}

/// Samples `|Delta|` on a uniform grid, refines every interior local minimum by
/// golden-section search on `|Delta|`, and keeps those that reach
/// `1e-12 * scale`.
pub fn scan_and_refine_root(
    data: &VariationalData,
    nu: &[f64],
    eta: &[f64],
    tau_range: (f64, f64),
    n_grid: usize,
) -> Result<LopatinskiiScan> {
    let (lo, hi) = tau_range;
    let n_grid = n_grid.max(3);
    let tau_grid: Vec<f64> = (0..n_grid).map(|i| lo + (hi - lo) * i as f64 / (n_grid - 1) as f64).collect();
    let det_values: Vec<Complex64> = tau_grid
        .par_iter()
        .map(|&t| lopatinskii_det(data, nu, eta, t).unwrap_or(Complex64::new(f64::NAN, f64::NAN)))
        .collect();
    let mag: Vec<f64> = det_values.iter().map(|z| z.norm()).collect();
    let scale = mag.iter().copied().filter(|x| x.is_finite()).fold(0.0, f64::max);
    let abs_det = |t: f64| lopatinskii_det(data, nu, eta, t).map(|z| z.norm()).unwrap_or(f64::INFINITY);
    let mut roots = Vec::new();
    for i in 1..n_grid - 1 {
        if !(mag[i] <= mag[i - 1] && mag[i] <= mag[i + 1]) {
            continue;
        }
        let (tau, residual) = golden_min(abs_det, tau_grid[i - 1], tau_grid[i + 1]);
        if !(residual <= ROOT_TOL * scale) {
            continue;
        }
        if roots.iter().any(|r: &LopatinskiiRoot| (r.tau - tau).abs() <= 1e-12 * tau.abs().max(1.0)) {
            continue;
        }
        let h = 1e-6 * tau.abs().max(1e-3);
        let derivative = match (lopatinskii_det(data, nu, eta, tau + h), lopatinskii_det(data, nu, eta, tau - h)) {
            (Ok(p), Ok(m)) => (p - m).norm() / (2.0 * h),
            _ => f64::NAN,
        };
        let simple = derivative.is_finite() && derivative * (hi - lo).abs() > 1e-6 * scale;
        roots.push(LopatinskiiRoot { tau, residual, derivative, simple });
    }
    if roots.is_empty() {
        let best = mag.iter().copied().filter(|x| x.is_finite()).fold(f64::INFINITY, f64::min);
        return Err(Error::NoRoot(format!(
            "smallest |Delta| on ({lo}, {hi}) is {best:.3e} against scale {scale:.3e}"
        )));
    }
    Ok(LopatinskiiScan { tau_grid, det_values, roots, scale })
}
