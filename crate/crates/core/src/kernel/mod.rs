//! Trilinear kernels on zero-sum frequency triples, two-argument pair kernels,
//! and the rescalings between them.

mod certify;
mod spec;

pub use certify::{
    check_bound_c1, check_bound_c2, check_crucial_estimate, check_crucialsym, check_homogeneity,
    check_hunter, check_symmetry_conjugation, sample_pairs, sample_triples, BoundCertificate,
    Property, SampleRange, DOUBLING_RATIO, IDENTITY_TOL,
};
pub use spec::KernelSpec;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Three nonzero real frequencies summing to zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSumTriple {
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl ZeroSumTriple {
    pub fn new(xi1: f64, xi2: f64, xi3: f64) -> Result<Self> {
        if !(xi1.is_finite() && xi2.is_finite() && xi3.is_finite()) {
            return Err(Error::InvalidTriple(xi1, xi2, xi3, "non-finite entry"));
        }
        let scale = xi1.abs().max(xi2.abs()).max(xi3.abs());
        if (xi1 + xi2 + xi3).abs() > 1e-14 * scale {
            return Err(Error::InvalidTriple(xi1, xi2, xi3, "entries do not sum to zero"));
        }
        if xi1 == 0.0 || xi2 == 0.0 || xi3 == 0.0 {
            return Err(Error::InvalidTriple(xi1, xi2, xi3, "entry on the excluded set"));
        }
        Ok(Self { xi1, xi2, xi3 })
    }

    /// The triple `(a, b, -a-b)`.
    pub fn from_pair(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, -a - b)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.xi1, self.xi2, self.xi3]
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        Self { xi1: lambda * self.xi1, xi2: lambda * self.xi2, xi3: lambda * self.xi3 }
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1.0)
    }

    pub fn min_abs(&self) -> f64 {
        self.xi1.abs().min(self.xi2.abs()).min(self.xi3.abs())
    }

    /// All six orderings, identity first.
    pub fn permutations(&self) -> [Self; 6] {
        let [a, b, c] = self.as_array();
        let mk = |x1, x2, x3| Self { xi1: x1, xi2: x2, xi3: x3 };
        [mk(a, b, c), mk(a, c, b), mk(b, a, c), mk(b, c, a), mk(c, a, b), mk(c, b, a)]
    }
}

type TripleFn = dyn Fn(f64, f64, f64) -> Complex64 + Send + Sync;
type PairFn = dyn Fn(f64, f64) -> Complex64 + Send + Sync;

/// A symmetric trilinear symbol `b(xi1, xi2, xi3)` defined off the excluded set.
#[derive(Clone)]
pub struct Kernel {
    name: String,
    degree: Option<f64>,
    eval: Arc<TripleFn>,
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Kernel").field("name", &self.name).field("degree", &self.degree).finish()
    }
}

impl Kernel {
    pub fn new<F>(name: impl Into<String>, degree: Option<f64>, eval: F) -> Self
    where
        F: Fn(f64, f64, f64) -> Complex64 + Send + Sync + 'static,
    {
        Self { name: name.into(), degree, eval: Arc::new(eval) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> Option<f64> {
        self.degree
    }

    pub fn eval(&self, t: &ZeroSumTriple) -> Complex64 {
        (self.eval)(t.xi1, t.xi2, t.xi3)
    }

    /// Validating evaluation.
    pub fn try_eval(&self, xi1: f64, xi2: f64, xi3: f64) -> Result<Complex64> {
        ZeroSumTriple::new(xi1, xi2, xi3).map(|t| self.eval(&t))
    }

    /// Evaluation without domain checks, for hot loops whose indices are known to be valid.
    #[inline]
    pub fn eval_unchecked(&self, xi1: f64, xi2: f64, xi3: f64) -> Complex64 {
        (self.eval)(xi1, xi2, xi3)
    }

    /// Pointwise sum; the degree survives only if both agree.
    pub fn add(&self, other: &Kernel) -> Kernel {
        let (f, g) = (self.eval.clone(), other.eval.clone());
        let degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        Kernel {
            name: format!("{}+{}", self.name, other.name),
            degree,
            eval: Arc::new(move |a, b, c| f(a, b, c) + g(a, b, c)),
        }
    }

    pub fn scale(&self, factor: f64) -> Kernel {
        let f = self.eval.clone();
        Kernel {
            name: format!("{factor}*{}", self.name),
            degree: self.degree,
            eval: Arc::new(move |a, b, c| f(a, b, c) * factor),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// The degree-two kernel `|k l m| / (|k| + |l| + |m|)`.
pub fn hiz_kernel() -> Kernel {
    Kernel::new("hiz", Some(2.0), |a, b, c| {
        Complex64::new((a * b * c).abs() / (a.abs() + b.abs() + c.abs()), 0.0)
    })
}

/// The degree-one four-parameter family.
pub fn austria_hunter_kernel(a: f64, b: f64, c: f64, d: f64) -> Kernel {
    Kernel::new(format!("austria({a},{b},{c},{d})"), Some(1.0), move |x, y, z| {
        let sum_abs = x.abs() + y.abs() + z.abs();
        let s = (x * y * z).signum();
        let abs_pairs = (x * y).abs() + (y * z).abs() + (z * x).abs();
        let pairs = x * y + y * z + z * x;
        Complex64::new(a, -b * s) * (abs_pairs / sum_abs) + Complex64::new(c, -d * s) * (pairs / sum_abs)
    })
}

/// A constant kernel; conjugation symmetry requires a real value.
pub fn constant_kernel(value: f64) -> Kernel {
    Kernel::new(format!("constant({value})"), Some(0.0), move |_, _, _| Complex64::new(value, 0.0))
}

/// `p = b / |xi1 xi2 xi3|^(1/2)`.
pub fn rescale_to_p(b: &Kernel) -> Kernel {
    let f = b.eval.clone();
    Kernel {
        name: format!("p[{}]", b.name),
        degree: b.degree.map(|h| h - 1.5),
        eval: Arc::new(move |x, y, z| f(x, y, z) / (x * y * z).abs().sqrt()),
    }
}

/// Inverse of [`rescale_to_p`].
pub fn rescale_from_p(p: &Kernel) -> Kernel {
    let f = p.eval.clone();
    Kernel {
        name: format!("b[{}]", p.name),
        degree: p.degree.map(|h| h + 1.5),
        eval: Arc::new(move |x, y, z| f(x, y, z) * (x * y * z).abs().sqrt()),
    }
}

/// A two-argument kernel `q(k, l)` defined off `k l (k + l) = 0`.
#[derive(Clone)]
pub struct PairKernel {
    name: String,
    gamma: Option<Complex64>,
    eval: Arc<PairFn>,
}

impl fmt::Debug for PairKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PairKernel").field("name", &self.name).field("gamma", &self.gamma).finish()
    }
}

impl PairKernel {
    pub fn new<F>(name: impl Into<String>, gamma: Option<Complex64>, eval: F) -> Self
    where
        F: Fn(f64, f64) -> Complex64 + Send + Sync + 'static,
    {
        Self { name: name.into(), gamma, eval: Arc::new(eval) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The sector constant, for phase-boundary kernels.
    pub fn gamma(&self) -> Option<Complex64> {
        self.gamma
    }

    pub fn eval(&self, k: f64, l: f64) -> Result<Complex64> {
        if !(k.is_finite() && l.is_finite()) || k * l * (k + l) == 0.0 {
            return Err(Error::SectorBoundary(k, l));
        }
        Ok((self.eval)(k, l))
    }

    #[inline]
    pub fn eval_unchecked(&self, k: f64, l: f64) -> Complex64 {
        (self.eval)(k, l)
    }

    /// The trilinear kernel `b(-a-l, a, l) = q(a, l) |a| |l|` this pair kernel represents.
    pub fn to_trilinear(&self) -> Kernel {
        let f = self.eval.clone();
        Kernel {
            name: format!("b[{}]", self.name),
            degree: Some(2.0),
            eval: Arc::new(move |_x, y, z| f(y, z) * (y.abs() * z.abs())),
        }
    }
}

/// The six-sector piecewise kernel of a reversible phase boundary.
pub fn phase_boundary_pair_kernel(gamma: Complex64) -> PairKernel {
    let g = gamma;
    let gc = gamma.conj();
    PairKernel::new(format!("phase-boundary({},{})", gamma.re, gamma.im), Some(gamma), move |k, l| {
        let s = k + l;
        match (k > 0.0, l > 0.0) {
            (true, true) => g,
            (false, false) => gc,
            // s / k rather than 1 + l / k avoids cancellation near the sector edges
            (true, false) if s > 0.0 => gc * (s / k),
            (true, false) => g * (s / l),
            (false, true) if s < 0.0 => g * (s / k),
            (false, true) => gc * (s / l),
        }
    })
}

/// A constant pair kernel.
pub fn constant_pair_kernel(value: f64) -> PairKernel {
    PairKernel::new(format!("constant({value})"), None, move |_, _| Complex64::new(value, 0.0))
}

/// `q(a, l) = b(-a-l, a, l) / (|a| |l|)`, defined for degree-two kernels.
pub fn reduce_to_q(b: &Kernel) -> Result<PairKernel> {
    if b.degree != Some(2.0) {
        return Err(Error::NotDegreeTwo(b.name.clone()));
    }
    let f = b.eval.clone();
    Ok(PairKernel::new(format!("q[{}]", b.name), None, move |a, l| {
        f(-a - l, a, l) / (a.abs() * l.abs())
    }))
}
