//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfwave::euler::PressureLaw;
use surfwave::kernel::{Kernel, ZeroSumTriple};
use surfwave::numerics::integrate_complex;
use surfwave::spectral::SpectralState;
use surfwave::variational::{SurfaceWaveProfile, VariationalData};

/// Rayleigh speed from `(2 - x^2)^2 = 4 sqrt(1 - x^2 cs^2/cp^2) sqrt(1 - x^2)`, `x = c/cs`, by bisection.
pub fn rayleigh_speed(cs: f64, cp: f64) -> f64 {
    let r = (cs / cp).powi(2);
    let f = |x: f64| (2.0 - x * x).powi(2) - 4.0 * (1.0 - x * x * r).sqrt() * (1.0 - x * x).sqrt();
    let (mut a, mut b) = (0.5, 1.0);
    assert!(f(a) < 0.0 && f(b) > 0.0);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if f(m) < 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    cs * 0.5 * (a + b)
}

/// Zero-sum triples with the first two magnitudes log-uniform in `[lo, hi]`.
pub fn triples_in(count: usize, seed: u64, lo: f64, hi: f64) -> Vec<ZeroSumTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xA5A5);
    let mut out = Vec::new();
    while out.len() < count {
        let mut draw = || {
            let m = (lo.ln() + (hi.ln() - lo.ln()) * rng.gen::<f64>()).exp();
            if rng.gen::<bool>() {
                m
            } else {
                -m
            }
        };
        let (a, b) = (draw(), draw());
        if let Ok(t) = ZeroSumTriple::from_pair(a, b) {
            if t.min_abs() > 1e-3 * lo {
                out.push(t);
            }
        }
    }
    out
}

/// The kernel as z-integrals of triple products of the profile, integrated numerically.
pub fn synthesis_quadrature(data: &VariationalData, profile: &SurfaceWaveProfile, t: &ZeroSumTriple) -> Complex64 {
    let (n, d) = (data.n(), data.d());
    let (x1, x2, x3) = (t.xi1, t.xi2, t.xi3);
    let nu = &profile.nu;
    let eta = &profile.eta;
    let i = Complex64::new(0.0, 1.0);
    let integrand = |z: f64| {
        let (r1, r2, r3) = (profile.rho(x1, z), profile.rho(x2, z), profile.rho(x3, z));
        let (r1z, r2z, r3z) = (profile.rho_z(x1, z), profile.rho_z(x2, z), profile.rho_z(x3, z));
        let mut second = Complex64::new(0.0, 0.0);
        for a in 0..n {
            for j in 0..d {
                let f1 = r1z[a] * nu[j] + i * x1 * eta[j] * r1[a];
                for b in 0..n {
                    for l in 0..d {
                        let f2 = r2z[b] * nu[l] + i * x2 * eta[l] * r2[b];
                        for g in 0..n {
                            for m in 0..d {
                                let f3 = r3z[g] * nu[m] + i * x3 * eta[m] * r3[g];
                                second += data.d3(a, j, b, l, g, m) * f1 * f2 * f3;
                            }
                        }
                    }
                }
            }
        }
        let mut first = Complex64::new(0.0, 0.0);
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    for j in 0..d {
                        for l in 0..d {
                            let (nj, nl, ej, el) = (nu[j], nu[l], eta[j], eta[l]);
                            first += data.e(a, b, j, g, l)
                                * (nj * nl * r1[a] * r2z[b] * r3z[g]
                                    + i * x2 * ej * nl * r1[a] * r2[b] * r3z[g]
                                    + i * x3 * el * nj * r1[a] * r2z[b] * r3[g]
                                    - x2 * x3 * ej * el * r1[a] * r2[b] * r3[g]);
                            first += data.e(b, a, j, g, l)
                                * (nj * nl * r1z[a] * r2[b] * r3z[g]
                                    + i * x1 * ej * nl * r1[a] * r2[b] * r3z[g]
                                    + i * x3 * el * nj * r1z[a] * r2[b] * r3[g]
                                    - x1 * x3 * ej * el * r1[a] * r2[b] * r3[g]);
                            first += data.e(g, a, j, b, l)
                                * (nj * nl * r1z[a] * r2z[b] * r3[g]
                                    + i * x1 * ej * nl * r1[a] * r2z[b] * r3[g]
                                    + i * x2 * el * nj * r1z[a] * r2[b] * r3[g]
                                    - x2 * x1 * ej * el * r1[a] * r2[b] * r3[g]);
                        }
                    }
                }
            }
        }
        first + second
    };
    let slowest = profile.modes.iter().map(|m| m.omega.re).fold(f64::INFINITY, f64::min);
    let rate = slowest * (x1.abs() + x2.abs() + x3.abs());
    let z_max = 14.0 * 10f64.ln() / rate * 1.5;
    let scale = integrand(0.0).norm() / rate;
    integrate_complex(integrand, 0.0, z_max, 1e-13 * scale, 1e-12) / (4.0 * PI)
}

/// Van der Waals phase boundary by sweeping the mass flux: for each `j`, find the
/// dense state on the Rankine–Hugoniot line and bisect on the sign of the energy jump.
/// Returns the dense density.
pub fn vdw_bisection_on_flux(law: &dyn PressureLaw, rho_l: f64, rho_lo: f64, rho_hi: f64) -> Option<f64> {
    let pl = law.pressure(rho_l);
    let vl = 1.0 / rho_l;
    // dense state for flux j: p(rho) + j^2 / rho = p_l + j^2 v_l on the dense branch
    let dense = |j2: f64| -> Option<f64> {
        let f = |r: f64| law.pressure(r) + j2 / r - pl - j2 * vl;
        let (mut a, mut b) = (rho_lo, rho_hi);
        if f(a).signum() == f(b).signum() {
            return None;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if f(m).signum() == f(a).signum() {
                a = m;
            } else {
                b = m;
            }
        }
        Some(0.5 * (a + b))
    };
    let energy = |j2: f64| -> Option<f64> {
        let r = dense(j2)?;
        let j = j2.sqrt();
        let (ul, ur) = (j / rho_l, j / r);
        let e = |rho: f64, u: f64| u * (0.5 * rho * u * u + law.free_energy(rho)) + law.pressure(rho) * u;
        Some(e(r, ur) - e(rho_l, ul))
    };
    let grid: Vec<f64> = (1..400).map(|k| 1e-4 * 1.03f64.powi(k)).collect();
    for w in grid.windows(2) {
        let (ea, eb) = (energy(w[0])?, energy(w[1])?);
        if ea.signum() != eb.signum() {
            let (mut a, mut b) = (w[0], w[1]);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if energy(m)?.signum() == ea.signum() {
                    a = m;
                } else {
                    b = m;
                }
            }
            return dense(0.5 * (a + b));
        }
    }
    None
}

/// Exhaustive enumeration of `B(k) = sum_{l + m = k} b(-k, l, m) w(l) w(m)` over in-band legs.
pub fn brute_force_bilinear(state: &SpectralState, b: &Kernel) -> Vec<Complex64> {
    let kmax = state.n_modes() as i64;
    let w = |k: i64| state.coeff(k);
    let mut out = vec![Complex64::new(0.0, 0.0); (2 * kmax + 1) as usize];
    for k in -kmax..=kmax {
        for l in -kmax..=kmax {
            for m in -kmax..=kmax {
                if k == 0 || l == 0 || m == 0 || -k + l + m != 0 {
                    continue;
                }
                out[(k + kmax) as usize] += b.eval_unchecked(-k as f64, l as f64, m as f64) * w(l) * w(m);
            }
        }
    }
    out
}

/// Exhaustive `T = 1/3 sum_{k + l + m = 0} b(k, l, m) w(k) w(l) w(m)` over in-band triples.
pub fn brute_force_hamiltonian(state: &SpectralState, b: &Kernel) -> Complex64 {
    let kmax = state.n_modes() as i64;
    let mut s = Complex64::new(0.0, 0.0);
    for k in -kmax..=kmax {
        for l in -kmax..=kmax {
            for m in -kmax..=kmax {
                if k == 0 || l == 0 || m == 0 || k + l + m != 0 {
                    continue;
                }
                s += b.eval_unchecked(k as f64, l as f64, m as f64) * state.coeff(k) * state.coeff(l) * state.coeff(m);
            }
        }
    }
    s / 3.0
}

/// A seeded random state with coefficients decaying like `1/k^2`.
pub fn random_state(n_modes: usize, seed: u64) -> SpectralState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (1..=n_modes)
        .map(|k| {
            let s = 1.0 / (k as f64).powi(2);
            Complex64::new(rng.gen_range(-1.0..1.0) * s, rng.gen_range(-1.0..1.0) * s)
        })
        .collect();
    SpectralState::from_coeffs(coeffs)
}
