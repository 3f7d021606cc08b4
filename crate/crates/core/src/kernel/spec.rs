use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{
    austria_hunter_kernel, constant_kernel, constant_pair_kernel, hiz_kernel, phase_boundary_pair_kernel,
    reduce_to_q, Kernel, PairKernel,
};
use crate::error::{Error, Result};

/// Serializable kernel selector: `{name, parameters}`.
///
/// | name             | parameters      | kind      |
/// |------------------|-----------------|-----------|
/// | `hiz`            | none            | trilinear |
/// | `austria`        | `A, B, C, D`    | trilinear |
/// | `constant`       | `value`         | both      |
/// | `phase-boundary` | `re, im` of γ   | pair      |
/// | `hiz-q`          | none            | pair      |
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelSpec {
    pub name: String,
    #[serde(default)]
    pub parameters: Vec<f64>,
}

impl KernelSpec {
    pub fn new(name: impl Into<String>, parameters: Vec<f64>) -> Self {
        Self { name: name.into(), parameters }
    }

    fn expect(&self, n: usize) -> Result<()> {
        if self.parameters.len() != n {
            return Err(Error::KernelParams { name: self.name.clone(), expected: n, got: self.parameters.len() });
        }
        if let Some(bad) = self.parameters.iter().find(|x| !x.is_finite()) {
            return Err(Error::Config(format!("kernel `{}`: non-finite parameter {bad}", self.name)));
        }
        Ok(())
    }

    /// Whether this spec names a pair kernel.
    pub fn is_pair(&self) -> bool {
        matches!(self.name.as_str(), "phase-boundary" | "hiz-q")
    }

    pub fn trilinear(&self) -> Result<Kernel> {
        match self.name.as_str() {
            "hiz" => self.expect(0).map(|_| hiz_kernel()),
            "austria" => {
                self.expect(4)?;
                let p = &self.parameters;
                Ok(austria_hunter_kernel(p[0], p[1], p[2], p[3]))
            }
            "constant" => self.expect(1).map(|_| constant_kernel(self.parameters[0])),
            _ if self.is_pair() => Ok(self.pair()?.to_trilinear()),
            other => Err(Error::UnknownKernel(other.to_string())),
        }
    }

    pub fn pair(&self) -> Result<PairKernel> {
        match self.name.as_str() {
            "phase-boundary" => {
                self.expect(2)?;
                Ok(phase_boundary_pair_kernel(Complex64::new(self.parameters[0], self.parameters[1])))
            }
            "hiz-q" => self.expect(0).and_then(|_| reduce_to_q(&hiz_kernel())),
            "constant" => self.expect(1).map(|_| constant_pair_kernel(self.parameters[0])),
            _ => reduce_to_q(&self.trilinear()?),
        }
    }
}
