//! Run configuration. One TOML file may hold a section per command; unknown keys are rejected.
//!
//! ```toml
//! out_dir = "out"
//!
//! [kernel]
//! name = "austria"
//! parameters = [2.0, 0.0, -2.0, 0.0]
//! samples = 10000
//! seed = 1
//!
//! [solve]
//! form = "V_FORM"
//! kernel = { name = "hiz-q" }
//! n_modes = 128
//! dt = 1e-3
//! s_end = 0.5
//! initial = { kind = "cosine" }
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euler::{LawSpec, PhaseBoundaryStates};
use crate::kernel::KernelSpec;
use crate::spectral::{read_spectrum_csv, FormTag, GalerkinBand, SpectralState};
use crate::variational::{load_variational_data, VariationalData};

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub out_dir: Option<PathBuf>,
    pub kernel: Option<KernelSection>,
    pub dispersion: Option<DispersionSection>,
    pub phase_boundary: Option<PhaseBoundarySection>,
    pub solve: Option<SolveSection>,
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
    }
}

fn default_samples() -> usize {
    10_000
}

fn default_seed() -> u64 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelSection {
    pub name: String,
    #[serde(default)]
    pub parameters: Vec<f64>,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Half-width of the `kernel table` grid.
    #[serde(default = "default_table_range")]
    pub table_range: f64,
    /// Points per axis of the `kernel table` grid.
    #[serde(default = "default_table_points")]
    pub table_points: usize,
}

fn default_table_range() -> f64 {
    4.0
}

fn default_table_points() -> usize {
    101
}

impl KernelSection {
    pub fn spec(&self) -> KernelSpec {
        KernelSpec::new(self.name.clone(), self.parameters.clone())
    }
}

/// Variational data source.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum DataSource {
    IsotropicElasticity {
        lambda: f64,
        mu: f64,
        #[serde(default = "default_dim")]
        dim: usize,
    },
    OseenFrank {
        splay: f64,
        twist: f64,
        bend: f64,
        #[serde(default)]
        saddle_splay: f64,
        director: [f64; 3],
    },
    Randomized {
        dim: usize,
        seed: u64,
    },
    File {
        path: PathBuf,
    },
}

fn default_dim() -> usize {
    2
}

impl DataSource {
    pub fn build(&self) -> Result<VariationalData> {
        let data = match self {
            DataSource::IsotropicElasticity { lambda, mu, dim } => {
                if !(2..=3).contains(dim) {
                    return Err(Error::Config(format!("isotropic-elasticity: dim must be 2 or 3, got {dim}")));
                }
                VariationalData::isotropic_elasticity(*lambda, *mu, *dim)
            }
            DataSource::OseenFrank { splay, twist, bend, saddle_splay, director } => {
                VariationalData::oseen_frank(*splay, *twist, *bend, *saddle_splay, *director)
            }
            DataSource::Randomized { dim, seed } => {
                if !(2..=3).contains(dim) {
                    return Err(Error::Config(format!("randomized: dim must be 2 or 3, got {dim}")));
                }
                VariationalData::randomized(*dim, *seed)
            }
            DataSource::File { path } => load_variational_data(path)?,
        };
        data.validate()?;
        Ok(data)
    }
}

fn default_grid() -> usize {
    400
}

fn default_eta_norm() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum DispersionSection {
    Variational {
        data: DataSource,
        nu: Vec<f64>,
        eta: Vec<f64>,
        #[serde(default = "default_grid")]
        grid: usize,
        /// Write the sampled `Delta(tau)` to `delta_scan.csv`.
        #[serde(default)]
        scan_csv: bool,
    },
    Euler {
        #[serde(default = "default_eta_norm")]
        eta_norm: f64,
        /// States given directly...
        states: Option<StateValues>,
        /// ...or solved from a law and a left density.
        law: Option<LawSpec>,
        rho_l: Option<f64>,
        rho_r_guess: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateValues {
    pub rho_l: f64,
    pub rho_r: f64,
    pub u_l: f64,
    pub u_r: f64,
    pub c_l: f64,
    pub c_r: f64,
    #[serde(default)]
    pub d2p_l: f64,
    #[serde(default)]
    pub d2p_r: f64,
}

impl StateValues {
    pub fn build(&self) -> Result<PhaseBoundaryStates> {
        PhaseBoundaryStates::from_values(
            self.rho_l, self.rho_r, self.u_l, self.u_r, self.c_l, self.c_r, self.d2p_l, self.d2p_r,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseBoundarySection {
    pub law: LawSpec,
    pub rho_l: f64,
    pub rho_r_guess: Option<f64>,
    #[serde(default = "default_eta_norm")]
    pub eta_norm: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Optional evolution of the resulting amplitude equation.
    pub solve: Option<PipelineSolve>,
}

/// Evolution settings for the phase-boundary pipeline; form, kernel and sign are implied.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineSolve {
    pub n_modes: usize,
    pub dt: f64,
    pub s_end: f64,
    #[serde(default = "default_log_every")]
    pub log_every: usize,
    #[serde(default)]
    pub initial: InitialData,
}

fn default_log_every() -> usize {
    10
}

fn default_sign() -> f64 {
    1.0
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveSection {
    pub form: FormTag,
    pub kernel: KernelSpec,
    #[serde(default = "default_sign")]
    pub sign: f64,
    pub n_modes: usize,
    pub dt: f64,
    pub s_end: f64,
    #[serde(default = "default_log_every")]
    pub log_every: usize,
    #[serde(default)]
    pub band: GalerkinBand,
    #[serde(default)]
    pub initial: InitialData,
}

/// Initial `w`; mapped to the form's unknown before integration.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InitialData {
    #[default]
    Cosine,
    GaussianSpectrum {
        alpha: f64,
    },
    /// `(k, amplitude, phase)` triples of `sum a cos(k y + phase)`.
    Modes {
        modes: Vec<(usize, f64, f64)>,
    },
    /// Spectrum CSV with columns `k,re,im`.
    Spectrum {
        path: PathBuf,
    },
}

impl InitialData {
    pub fn build(&self, n_modes: usize) -> Result<SpectralState> {
        if n_modes == 0 {
            return Err(Error::Config("n_modes must be positive".into()));
        }
        match self {
            InitialData::Cosine => Ok(SpectralState::cosine(n_modes)),
            InitialData::GaussianSpectrum { alpha } => {
                if !(*alpha > 0.0) {
                    return Err(Error::Config(format!("gaussian-spectrum: alpha must be positive, got {alpha}")));
                }
                Ok(SpectralState::gaussian_spectrum(n_modes, *alpha))
            }
            InitialData::Modes { modes } => {
                SpectralState::from_modes(n_modes, modes).map_err(|e| Error::Config(e.to_string()))
            }
            InitialData::Spectrum { path } => read_spectrum_csv(path, n_modes),
        }
    }
}

/// Number of steps covering `[0, s_end]` with step `dt`.
pub fn step_count(dt: f64, s_end: f64) -> Result<usize> {
    if !(dt > 0.0 && dt.is_finite()) || !(s_end > 0.0 && s_end.is_finite()) {
        return Err(Error::Config(format!("dt and s_end must be positive, got dt = {dt}, s_end = {s_end}")));
    }
    let n = (s_end / dt).round();
    if (n * dt - s_end).abs() > 1e-9 * s_end {
        return Err(Error::Config(format!("s_end = {s_end} is not a whole number of steps dt = {dt}")));
    }
    Ok(n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_sections() {
        let text = r#"
            [kernel]
            name = "hiz"

            [dispersion]
            model = "variational"
            data = { kind = "isotropic-elasticity", lambda = 1.0, mu = 1.0 }
            nu = [0.0, 1.0]
            eta = [1.0, 0.0]

            [solve]
            form = "V_FORM"
            kernel = { name = "hiz-q" }
            n_modes = 16
            dt = 1e-3
            s_end = 0.01
            initial = { kind = "modes", modes = [[1, 1.0, 0.0]] }
        "#;
        let cfg = RunConfig::parse(text).unwrap();
        assert_eq!(cfg.kernel.unwrap().samples, 10_000);
        assert!(matches!(cfg.dispersion, Some(DispersionSection::Variational { grid: 400, .. })));
        let solve = cfg.solve.unwrap();
        assert_eq!(solve.form, FormTag::V);
        assert_eq!(step_count(solve.dt, solve.s_end).unwrap(), 10);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(RunConfig::parse("[kernel]\nname = \"hiz\"\nbogus = 1\n").is_err());
        assert!(RunConfig::parse("[dispersion]\nmodel = \"euler\"\nfoo = 2\n").is_err());
        assert!(RunConfig::parse("[solve]\nform = \"X_FORM\"\n").is_err());
    }

    #[test]
    fn step_count_requires_whole_steps() {
        assert_eq!(step_count(5e-4, 0.5).unwrap(), 1000);
        assert!(step_count(0.3, 1.0).is_err());
        assert!(step_count(-1.0, 1.0).is_err());
    }
}
