use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::integrate;

/// A barotropic pressure law with free energy density `F`, `p = rho F' - F`.
pub trait PressureLaw: Send + Sync {
    fn name(&self) -> String;
    fn pressure(&self, rho: f64) -> f64;
    /// `p'`, the squared sound speed.
    fn dp(&self, rho: f64) -> f64;
    fn d2p(&self, rho: f64) -> f64;
    fn free_energy(&self, rho: f64) -> f64;
    /// Open interval of admissible densities.
    fn density_range(&self) -> (f64, f64);

    /// `F'(rho) = (F + p) / rho`.
    fn chemical_potential(&self, rho: f64) -> f64 {
        (self.free_energy(rho) + self.pressure(rho)) / rho
    }
}

/// Reduced van der Waals law `p = 8 theta rho / (3 - rho) - 3 rho^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VanDerWaals {
    pub theta: f64,
}

impl PressureLaw for VanDerWaals {
    fn name(&self) -> String {
        format!("vdw(theta={})", self.theta)
    }

    fn pressure(&self, rho: f64) -> f64 {
        8.0 * self.theta * rho / (3.0 - rho) - 3.0 * rho * rho
    }

    fn dp(&self, rho: f64) -> f64 {
        24.0 * self.theta / (3.0 - rho).powi(2) - 6.0 * rho
    }

    fn d2p(&self, rho: f64) -> f64 {
        48.0 * self.theta / (3.0 - rho).powi(3) - 6.0
    }

    fn free_energy(&self, rho: f64) -> f64 {
        8.0 * self.theta * rho / 3.0 * (rho / (3.0 - rho)).ln() - 3.0 * rho * rho
    }

    fn density_range(&self) -> (f64, f64) {
        (0.0, 3.0)
    }
}

/// `p = c1 rho + c2 rho^2 + c3 rho^3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicLaw {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// Largest density considered.
    pub rho_max: f64,
}

impl PressureLaw for CubicLaw {
    fn name(&self) -> String {
        format!("cubic({},{},{})", self.c1, self.c2, self.c3)
    }

    fn pressure(&self, rho: f64) -> f64 {
        rho * (self.c1 + rho * (self.c2 + rho * self.c3))
    }

    fn dp(&self, rho: f64) -> f64 {
        self.c1 + rho * (2.0 * self.c2 + 3.0 * self.c3 * rho)
    }

    fn d2p(&self, rho: f64) -> f64 {
        2.0 * self.c2 + 6.0 * self.c3 * rho
    }

    fn free_energy(&self, rho: f64) -> f64 {
        self.c1 * rho * rho.ln() + self.c2 * rho * rho + 0.5 * self.c3 * rho.powi(3)
    }

    fn density_range(&self) -> (f64, f64) {
        (0.0, self.rho_max)
    }
}

/// Natural cubic spline through tabulated `(rho, p)`.
///
/// `F(rho) = rho * int_{rho_0}^{rho} p(s)/s^2 ds` with `rho_0` the first table density.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableLaw {
    rho: Vec<f64>,
    p: Vec<f64>,
    /// Second derivatives at the knots.
    m: Vec<f64>,
    /// `int_{rho_0}^{rho_i} p/s^2` at the knots.
    cumulative: Vec<f64>,
}

impl TableLaw {
    pub fn new(rho: Vec<f64>, p: Vec<f64>) -> Result<Self> {
        let n = rho.len();
        if n < 3 || p.len() != n {
            return Err(Error::PressureLaw("a table needs at least 3 (rho, p) pairs of equal length".into()));
        }
        if rho[0] <= 0.0 || rho.windows(2).any(|w| !(w[1] > w[0])) || p.iter().any(|x| !x.is_finite()) {
            return Err(Error::PressureLaw("table densities must be positive and strictly increasing".into()));
        }
        // natural spline: tridiagonal system for interior second derivatives
        let h: Vec<f64> = rho.windows(2).map(|w| w[1] - w[0]).collect();
        let mut m = vec![0.0; n];
        let mut diag = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        for i in 1..n - 1 {
            diag[i] = 2.0 * (h[i - 1] + h[i]);
            rhs[i] = 6.0 * ((p[i + 1] - p[i]) / h[i] - (p[i] - p[i - 1]) / h[i - 1]);
        }
        for i in 2..n - 1 {
            let w = h[i - 1] / diag[i - 1];
            diag[i] -= w * h[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for i in (1..n - 1).rev() {
            let upper = if i + 1 < n - 1 { h[i] * m[i + 1] } else { 0.0 };
            m[i] = (rhs[i] - upper) / diag[i];
        }
        let mut law = Self { rho, p, m, cumulative: vec![0.0; n] };
        for i in 1..n {
            let (a, b) = (law.rho[i - 1], law.rho[i]);
            let piece = integrate(|s| law.pressure(s) / (s * s), a, b, 1e-16, 1e-14);
            law.cumulative[i] = law.cumulative[i - 1] + piece;
        }
        Ok(law)
    }

    fn segment(&self, rho: f64) -> usize {
        match self.rho.binary_search_by(|x| x.total_cmp(&rho)) {
            Ok(i) => i.min(self.rho.len() - 2),
            Err(i) => i.clamp(1, self.rho.len() - 1) - 1,
        }
    }

    /// Value, first and second derivative of the spline.
    fn eval(&self, x: f64) -> (f64, f64, f64) {
        let i = self.segment(x);
        let (x0, x1) = (self.rho[i], self.rho[i + 1]);
        let h = x1 - x0;
        let (a, b) = ((x1 - x) / h, (x - x0) / h);
        let (m0, m1) = (self.m[i], self.m[i + 1]);
        let (y0, y1) = (self.p[i], self.p[i + 1]);
        let value = a * y0 + b * y1 + ((a * a * a - a) * m0 + (b * b * b - b) * m1) * h * h / 6.0;
        let slope = (y1 - y0) / h + ((1.0 - 3.0 * a * a) * m0 + (3.0 * b * b - 1.0) * m1) * h / 6.0;
        let curvature = a * m0 + b * m1;
        (value, slope, curvature)
    }
}

impl PressureLaw for TableLaw {
    fn name(&self) -> String {
        format!("table({} points)", self.rho.len())
    }

    fn pressure(&self, rho: f64) -> f64 {
        self.eval(rho).0
    }

    fn dp(&self, rho: f64) -> f64 {
        self.eval(rho).1
    }

    fn d2p(&self, rho: f64) -> f64 {
        self.eval(rho).2
    }

    fn free_energy(&self, rho: f64) -> f64 {
        let i = self.segment(rho);
        let start = self.rho[i];
        let piece = integrate(|s| self.pressure(s) / (s * s), start, rho, 1e-16, 1e-14);
        rho * (self.cumulative[i] + piece)
    }

    fn density_range(&self) -> (f64, f64) {
        (self.rho[0], self.rho[self.rho.len() - 1])
    }
}

/// Serializable law selector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", deny_unknown_fields)]
pub enum LawSpec {
    #[serde(rename = "vdw")]
    VanDerWaals { theta: f64 },
    #[serde(rename = "cubic")]
    Cubic {
        c1: f64,
        c2: f64,
        c3: f64,
        #[serde(default = "default_rho_max")]
        rho_max: f64,
    },
    #[serde(rename = "table")]
    Table { rho: Vec<f64>, p: Vec<f64> },
}

fn default_rho_max() -> f64 {
    10.0
}

impl LawSpec {
    pub fn build(&self) -> Result<Box<dyn PressureLaw>> {
        Ok(match self {
            LawSpec::VanDerWaals { theta } => {
                if !(*theta > 0.0) {
                    return Err(Error::Config(format!("vdw: theta must be positive, got {theta}")));
                }
                Box::new(VanDerWaals { theta: *theta })
            }
            LawSpec::Cubic { c1, c2, c3, rho_max } => Box::new(CubicLaw { c1: *c1, c2: *c2, c3: *c3, rho_max: *rho_max }),
            LawSpec::Table { rho, p } => Box::new(TableLaw::new(rho.clone(), p.clone())?),
        })
    }
}
