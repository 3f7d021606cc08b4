//! Isothermal phase boundaries in compressible Euler: jump conditions, surface-wave
//! dispersion and the coefficients of the resulting amplitude equation.
//!
//! Everything is written in the frame of the front, with the normal `nu` pointing from
//! the left state to the right state and both relative normal velocities positive.

mod law;
mod surface;

use nalgebra::{Matrix3, Vector3};
use serde::{Deserialize, Serialize};

pub use law::{CubicLaw, LawSpec, PressureLaw, TableLaw, VanDerWaals};
pub use surface::{
    amplitude_coefficients, analyze, analyze_states, dispersion_lhs, dispersion_root, ellipticity_bound,
    linear_coefficients, LinearCoefficients, PhaseBoundaryData,
};

use crate::error::{Error, Result};
use crate::numerics::{bisect, integrate};

/// Relative convergence target of the jump solver.
pub const JUMP_TOL: f64 = 1e-12;
const MAX_NEWTON: usize = 100;
const SCAN_POINTS: usize = 4000;

/// `(mass, momentum, energy)` jump residuals, right minus left.
pub fn jump_residuals(law: &dyn PressureLaw, rho_l: f64, rho_r: f64, u_l: f64, u_r: f64) -> [f64; 3] {
    let (pl, pr) = (law.pressure(rho_l), law.pressure(rho_r));
    let energy = |rho: f64, u: f64, p: f64| u * (0.5 * rho * u * u + law.free_energy(rho)) + p * u;
    [
        rho_r * u_r - rho_l * u_l,
        (rho_r * u_r * u_r + pr) - (rho_l * u_l * u_l + pl),
        energy(rho_r, u_r, pr) - energy(rho_l, u_l, pl),
    ]
}

/// Magnitudes of the terms entering each residual, used to make them relative.
fn residual_scales(law: &dyn PressureLaw, rho_l: f64, rho_r: f64, u_l: f64, u_r: f64) -> [f64; 3] {
    let side = |rho: f64, u: f64| {
        let (p, f) = (law.pressure(rho), law.free_energy(rho));
        [rho * u.abs(), rho * u * u + p.abs(), u.abs() * (0.5 * rho * u * u + f.abs() + p.abs())]
    };
    let (a, b) = (side(rho_l, u_l), side(rho_r, u_r));
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// A converged (or user-supplied) pair of states across the front.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseBoundaryStates {
    pub rho_l: f64,
    pub rho_r: f64,
    /// Normal velocities relative to the front.
    pub u_l: f64,
    pub u_r: f64,
    /// Mass flux `rho_l u_l`.
    pub j: f64,
    /// Sound speeds `sqrt(p')`.
    pub c_l: f64,
    pub c_r: f64,
    /// `p''` on each side.
    pub d2p_l: f64,
    pub d2p_r: f64,
    /// Relative jump residuals at the returned states; zero for user-supplied states.
    pub residuals: [f64; 3],
    /// Signed area between the pressure curve and the chord in the specific-volume plane.
    pub equal_area_defect: f64,
    pub newton_iterations: usize,
}

impl PhaseBoundaryStates {
    /// States given directly, without a pressure law.
    #[allow(clippy::too_many_arguments)]
    pub fn from_values(
        rho_l: f64,
        rho_r: f64,
        u_l: f64,
        u_r: f64,
        c_l: f64,
        c_r: f64,
        d2p_l: f64,
        d2p_r: f64,
    ) -> Result<Self> {
        let s = Self {
            rho_l,
            rho_r,
            u_l,
            u_r,
            j: rho_l * u_l,
            c_l,
            c_r,
            d2p_l,
            d2p_r,
            residuals: [0.0; 3],
            equal_area_defect: 0.0,
            newton_iterations: 0,
        };
        s.check()?;
        Ok(s)
    }

    /// Positivity, mass-flux consistency and subsonicity.
    pub fn check(&self) -> Result<()> {
        let all = [self.rho_l, self.rho_r, self.u_l, self.u_r, self.c_l, self.c_r];
        if all.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
            return Err(Error::NoDynamicalBoundary(format!(
                "densities, velocities and sound speeds must be positive, got {all:?}"
            )));
        }
        let flux_gap = (self.rho_r * self.u_r - self.rho_l * self.u_l).abs();
        if flux_gap > JUMP_TOL * self.j.abs() {
            return Err(Error::NoDynamicalBoundary(format!(
                "mass flux differs across the front: rho_l u_l = {}, rho_r u_r = {}",
                self.rho_l * self.u_l,
                self.rho_r * self.u_r
            )));
        }
        if self.u_l >= self.c_l || self.u_r >= self.c_r {
            return Err(Error::Supersonic(format!(
                "u_l = {} vs c_l = {}, u_r = {} vs c_r = {}",
                self.u_l, self.c_l, self.u_r, self.c_r
            )));
        }
        Ok(())
    }

    /// The same front seen with the two sides exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            rho_l: self.rho_r,
            rho_r: self.rho_l,
            u_l: self.u_r,
            u_r: self.u_l,
            j: self.rho_r * self.u_r,
            c_l: self.c_r,
            c_r: self.c_l,
            d2p_l: self.d2p_r,
            d2p_r: self.d2p_l,
            residuals: self.residuals,
            equal_area_defect: -self.equal_area_defect,
            newton_iterations: self.newton_iterations,
        }
    }

    /// Relative jump residuals of these states under `law`.
    pub fn relative_residuals(&self, law: &dyn PressureLaw) -> [f64; 3] {
        let r = jump_residuals(law, self.rho_l, self.rho_r, self.u_l, self.u_r);
        let s = residual_scales(law, self.rho_l, self.rho_r, self.u_l, self.u_r);
        [r[0] / s[0], r[1] / s[1], r[2] / s[2]]
    }
}

/// `int_{v_r}^{v_l} (p(1/v) - chord(v)) dv`, the chord joining the two end points.
pub fn equal_area_defect(law: &dyn PressureLaw, rho_l: f64, rho_r: f64) -> f64 {
    let (vl, vr) = (1.0 / rho_l, 1.0 / rho_r);
    let (pl, pr) = (law.pressure(rho_l), law.pressure(rho_r));
    let chord = |v: f64| pr + (pl - pr) * (v - vr) / (vl - vr);
    integrate(|v| law.pressure(1.0 / v) - chord(v), vr, vl, 1e-14, 1e-13)
}

/// Energy jump after eliminating the velocities through mass and momentum:
/// `[mu] - [p] (v_l + v_r) / 2`, with `mu = F'`.
fn energy_gap(law: &dyn PressureLaw, rho_l: f64, rho: f64) -> f64 {
    let dmu = law.chemical_potential(rho) - law.chemical_potential(rho_l);
    let dp = law.pressure(rho) - law.pressure(rho_l);
    dmu - 0.5 * dp * (1.0 / rho + 1.0 / rho_l)
}

/// Squared mass flux `-[p]/[v]` of the chord joining the two states.
fn flux_squared(law: &dyn PressureLaw, rho_l: f64, rho_r: f64) -> f64 {
    -(law.pressure(rho_r) - law.pressure(rho_l)) / (1.0 / rho_r - 1.0 / rho_l)
}

/// Candidate partner densities: sign changes of the energy gap on an increasing branch
/// separated from `rho_l` by a decreasing one.
fn partner_candidates(law: &dyn PressureLaw, rho_l: f64) -> Result<Vec<f64>> {
    let (lo, hi) = law.density_range();
    let width = hi - lo;
    let grid: Vec<f64> = (1..SCAN_POINTS).map(|i| lo + width * i as f64 / SCAN_POINTS as f64).collect();
    let decreasing: Vec<bool> = grid.iter().map(|&r| law.dp(r) < 0.0).collect();
    if !decreasing.iter().any(|&d| d) {
        return Err(Error::NoDynamicalBoundary(format!(
            "pressure law {} is increasing on ({lo}, {hi}); energy and momentum jumps cannot both vanish",
            law.name()
        )));
    }
    // a point qualifies if a decreasing stretch lies strictly between it and rho_l
    let mut below = vec![0usize; grid.len() + 1];
    for (i, &d) in decreasing.iter().enumerate() {
        below[i + 1] = below[i] + d as usize;
    }
    let anchor = grid.partition_point(|&x| x < rho_l);
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for (i, &r) in grid.iter().enumerate() {
        let between = if i < anchor { below[anchor] - below[i + 1] } else { below[i] - below[anchor] };
        if decreasing[i] || between == 0 {
            prev = None;
            continue;
        }
        let g = energy_gap(law, rho_l, r);
        if let Some((rp, gp)) = prev {
            if g.is_finite() && gp.is_finite() && g.signum() != gp.signum() {
                if let Some(root) = bisect(|x| energy_gap(law, rho_l, x), rp, r, 200) {
                    out.push(root);
                }
            }
        }
        prev = Some((r, g));
    }
    Ok(out)
}

/// Finds the dynamical phase boundary attached to the left density `rho_l`.
///
/// Without `guess`, the right density starts from the equal-area partner of `rho_l`;
/// the three jump conditions are then solved together by damped Newton.
pub fn solve_states(law: &dyn PressureLaw, rho_l: f64, guess: Option<f64>) -> Result<PhaseBoundaryStates> {
    let (lo, hi) = law.density_range();
    if !(rho_l > lo && rho_l < hi) {
        return Err(Error::PressureLaw(format!("rho_l = {rho_l} outside the admissible range ({lo}, {hi})")));
    }
    if law.dp(rho_l) <= 0.0 {
        return Err(Error::NoDynamicalBoundary(format!("rho_l = {rho_l} lies on a decreasing branch of the pressure")));
    }
    let rho0 = match guess {
        Some(g) => g,
        None => {
            let candidates = partner_candidates(law, rho_l)?;
            let admissible = candidates.iter().copied().find(|&r| flux_squared(law, rho_l, r) > 0.0);
            match admissible {
                Some(r) => r,
                None if candidates.is_empty() => {
                    return Err(Error::NoDynamicalBoundary(format!(
                        "no state satisfies the equal-area rule with rho_l = {rho_l}"
                    )))
                }
                None => {
                    let listed: Vec<String> = candidates
                        .iter()
                        .map(|&r| format!("rho_r = {r:.10} (j^2 = {:.4e})", flux_squared(law, rho_l, r)))
                        .collect();
                    return Err(Error::NoDynamicalBoundary(format!(
                        "equal-area partners of rho_l = {rho_l} have no real mass flux: {}",
                        listed.join(", ")
                    )));
                }
            }
        }
    };
    let j2 = flux_squared(law, rho_l, rho0);
    if !(j2 > 0.0) {
        return Err(Error::NoDynamicalBoundary(format!("initial guess rho_r = {rho0} gives j^2 = {j2:e}")));
    }
    let j = j2.sqrt();
    let mut x = Vector3::new(rho0, j / rho_l, j / rho0);
    let rel = |x: &Vector3<f64>| {
        let r = jump_residuals(law, rho_l, x[0], x[1], x[2]);
        let s = residual_scales(law, rho_l, x[0], x[1], x[2]);
        Vector3::new(r[0] / s[0], r[1] / s[1], r[2] / s[2])
    };
    let mut res = rel(&x);
    let mut iterations = 0;
    while res.amax() > JUMP_TOL {
        if iterations == MAX_NEWTON {
            return Err(Error::NoDynamicalBoundary(format!(
                "Newton did not converge in {MAX_NEWTON} iterations (relative residual {:.3e})",
                res.amax()
            )));
        }
        iterations += 1;
        let (rr, ul, ur) = (x[0], x[1], x[2]);
        let (pl, pr, fl, fr) = (law.pressure(rho_l), law.pressure(rr), law.free_energy(rho_l), law.free_energy(rr));
        let dpr = law.dp(rr);
        let jac = Matrix3::new(
            ur,
            -rho_l,
            rr,
            ur * ur + dpr,
            -2.0 * rho_l * ul,
            2.0 * rr * ur,
            ur * (0.5 * ur * ur + law.chemical_potential(rr)) + dpr * ur,
            -(1.5 * rho_l * ul * ul + fl + pl),
            1.5 * rr * ur * ur + fr + pr,
        );
        let raw = Vector3::from(jump_residuals(law, rho_l, rr, ul, ur));
        let step = jac.lu().solve(&-raw).ok_or_else(|| {
            Error::NoDynamicalBoundary(format!("singular jump Jacobian at rho_r = {rr}, u_l = {ul}, u_r = {ur}"))
        })?;
        let mut t = 1.0;
        loop {
            let trial = x + step * t;
            if trial.iter().all(|v| *v > 0.0) && trial[0] < hi {
                let r = rel(&trial);
                if r.amax() < res.amax() || t < 1e-6 {
                    x = trial;
                    res = r;
                    break;
                }
            }
            t *= 0.5;
            if t < 1e-12 {
                return Err(Error::NoDynamicalBoundary("Newton step could not reduce the residual".into()));
            }
        }
    }
    let (rho_r, u_l, u_r) = (x[0], x[1], x[2]);
    let j = rho_l * u_l;
    if (rho_r - rho_l).abs() <= 1e-10 * rho_l || j <= 0.0 {
        return Err(Error::NoDynamicalBoundary(format!("converged to a trivial front (rho_r = {rho_r}, j = {j})")));
    }
    let states = PhaseBoundaryStates {
        rho_l,
        rho_r,
        u_l,
        u_r,
        j,
        c_l: law.dp(rho_l).sqrt(),
        c_r: law.dp(rho_r).sqrt(),
        d2p_l: law.d2p(rho_l),
        d2p_r: law.d2p(rho_r),
        residuals: [res[0], res[1], res[2]],
        equal_area_defect: equal_area_defect(law, rho_l, rho_r),
        newton_iterations: iterations,
    };
    states.check()?;
    Ok(states)
}
