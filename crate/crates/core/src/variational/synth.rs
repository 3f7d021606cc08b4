use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use super::{SurfaceWaveProfile, VariationalData};
use crate::error::Result;
use crate::kernel::{Kernel, ZeroSumTriple};

/// Mode data of one leg of a triple: amplitude vector `g`, decay rate `lambda`,
/// and gradient `G_{a j} = (-lambda nu_j + i xi eta_j) g_a`.
struct Leg {
    g: Vec<Vec<Complex64>>,
    rate: Vec<Complex64>,
    grad: Vec<Vec<Complex64>>,
}

/// Closed-form evaluation of the degree-one and degree-two kernel parts.
#[derive(Clone)]
pub struct SynthesizedKernel {
    inner: Arc<Inner>,
}

struct Inner {
    n: usize,
    d: usize,
    e: Vec<f64>,
    d3: Vec<f64>,
    e_zero: bool,
    d3_zero: bool,
    omega: Vec<Complex64>,
    amp: Vec<Vec<Complex64>>,
    nu: Vec<f64>,
    eta: Vec<f64>,
}

impl Inner {
    fn leg(&self, xi: f64) -> Leg {
        let i = Complex64::new(0.0, 1.0);
        let m = self.omega.len();
        let (mut g, mut rate, mut grad) = (Vec::with_capacity(m), Vec::with_capacity(m), Vec::with_capacity(m));
        for k in 0..m {
            let (amp, lam) = if xi > 0.0 {
                (self.amp[k].clone(), self.omega[k] * xi)
            } else {
                (self.amp[k].iter().map(|x| x.conj()).collect(), self.omega[k].conj() * xi.abs())
            };
            let mut gk = vec![Complex64::new(0.0, 0.0); self.n * self.d];
            for a in 0..self.n {
                for j in 0..self.d {
                    gk[a * self.d + j] = (-lam * self.nu[j] + i * xi * self.eta[j]) * amp[a];
                }
            }
            g.push(amp);
            rate.push(lam);
            grad.push(gk);
        }
        Leg { g, rate, grad }
    }

    /// `sum e_{a q r} g_a G_q H_r` over slot indices `q`, `r`.
    fn e_form(&self, g: &[Complex64], gq: &[Complex64], hr: &[Complex64]) -> Complex64 {
        let w = self.n * self.d;
        let mut s = Complex64::new(0.0, 0.0);
        for (a, &ga) in g.iter().enumerate() {
            let block = &self.e[a * w * w..(a + 1) * w * w];
            let mut inner = Complex64::new(0.0, 0.0);
            for q in 0..w {
                let row = &block[q * w..(q + 1) * w];
                let mut t = Complex64::new(0.0, 0.0);
                for r in 0..w {
                    t += hr[r] * row[r];
                }
                inner += gq[q] * t;
            }
            s += ga * inner;
        }
        s
    }

    /// `sum d3_{p q r} F_p G_q H_r`.
    fn d3_form(&self, f: &[Complex64], gq: &[Complex64], hr: &[Complex64]) -> Complex64 {
        let w = self.n * self.d;
        let mut s = Complex64::new(0.0, 0.0);
        for p in 0..w {
            let block = &self.d3[p * w * w..(p + 1) * w * w];
            let mut inner = Complex64::new(0.0, 0.0);
            for q in 0..w {
                let row = &block[q * w..(q + 1) * w];
                let mut t = Complex64::new(0.0, 0.0);
                for r in 0..w {
                    t += hr[r] * row[r];
                }
                inner += gq[q] * t;
            }
            s += f[p] * inner;
        }
        s
    }

    fn parts(&self, xi1: f64, xi2: f64, xi3: f64, want_first: bool, want_second: bool) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let want_first = want_first && !self.e_zero;
        let want_second = want_second && !self.d3_zero;
        if !want_first && !want_second {
            return (zero, zero);
        }
        let (l1, l2, l3) = (self.leg(xi1), self.leg(xi2), self.leg(xi3));
        let m = self.omega.len();
        let (mut first, mut second) = (zero, zero);
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let denom = l1.rate[a] + l2.rate[b] + l3.rate[c];
                    if want_first {
                        let s = self.e_form(&l1.g[a], &l2.grad[b], &l3.grad[c])
                            + self.e_form(&l2.g[b], &l1.grad[a], &l3.grad[c])
                            + self.e_form(&l3.g[c], &l1.grad[a], &l2.grad[b]);
                        first += s / denom;
                    }
                    if want_second {
                        second += self.d3_form(&l1.grad[a], &l2.grad[b], &l3.grad[c]) / denom;
                    }
                }
            }
        }
        (first / (4.0 * PI), second / (4.0 * PI))
    }
}

impl SynthesizedKernel {
    /// The degree-one part.
    pub fn first(&self, t: &ZeroSumTriple) -> Complex64 {
        self.inner.parts(t.xi1, t.xi2, t.xi3, true, false).0
    }

    /// The degree-two part.
    pub fn second(&self, t: &ZeroSumTriple) -> Complex64 {
        self.inner.parts(t.xi1, t.xi2, t.xi3, false, true).1
    }

    pub fn total(&self, t: &ZeroSumTriple) -> Complex64 {
        let (a, b) = self.inner.parts(t.xi1, t.xi2, t.xi3, true, true);
        a + b
    }

    /// The full kernel; it has no single homogeneity degree unless one part vanishes.
    pub fn kernel(&self) -> Kernel {
        let inner = self.inner.clone();
        let degree = match (inner.e_zero, inner.d3_zero) {
            (true, false) => Some(2.0),
            (false, true) => Some(1.0),
            (true, true) => Some(0.0),
            _ => None,
        };
        Kernel::new("synthesized", degree, move |a, b, c| {
            let (x, y) = inner.parts(a, b, c, true, true);
            x + y
        })
    }

    pub fn first_kernel(&self) -> Kernel {
        let inner = self.inner.clone();
        Kernel::new("synthesized-degree-1", Some(1.0), move |a, b, c| inner.parts(a, b, c, true, false).0)
    }

    pub fn second_kernel(&self) -> Kernel {
        let inner = self.inner.clone();
        Kernel::new("synthesized-degree-2", Some(2.0), move |a, b, c| inner.parts(a, b, c, false, true).1)
    }
}

/// Closed-form kernel of the amplitude equation for the given data and normalized profile.
///
/// Each z-integral of a product of three exponentials reduces to the inverse of
/// the sum of their decay rates.
pub fn synthesize_kernel(data: &VariationalData, profile: &SurfaceWaveProfile) -> Result<SynthesizedKernel> {
    data.validate()?;
    let inner = Inner {
        n: data.n(),
        d: data.d(),
        e: data.e_flat().to_vec(),
        d3: data.d3_flat().to_vec(),
        e_zero: data.e_is_zero(),
        d3_zero: data.d3_is_zero(),
        omega: profile.modes.iter().map(|m| m.omega).collect(),
        amp: profile.modes.iter().map(|m| m.v.iter().map(|x| x * m.coeff).collect()).collect(),
        nu: profile.nu.clone(),
        eta: profile.eta.clone(),
    };
    Ok(SynthesizedKernel { inner: Arc::new(inner) })
}
