use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("triple ({0}, {1}, {2}) is not a valid zero-sum triple: {3}")]
    InvalidTriple(f64, f64, f64, &'static str),

    #[error("pair ({0}, {1}) lies on a sector boundary k*l*(k+l) = 0")]
    SectorBoundary(f64, f64),

    #[error("kernel `{0}` does not declare degree 2; the pair reduction would be unbounded")]
    NotDegreeTwo(String),

    #[error("unknown kernel `{0}`")]
    UnknownKernel(String),

    #[error("kernel `{name}` expects {expected} parameters, got {got}")]
    KernelParams {
        name: String,
        expected: usize,
        got: usize,
    },

    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error("variational data: {0}")]
    VariationalData(String),

    #[error("normal mode present: eigenvalue {0} has vanishing real part")]
    NormalMode(num_complex::Complex64),

    #[error("Jordan-like degeneracy: stable eigenvector matrix condition number {0:.3e}")]
    JordanDegeneracy(f64),

    #[error("expected {expected} stable modes, found {found}")]
    ModeCount { expected: usize, found: usize },

    #[error("no root found: {0}")]
    NoRoot(String),

    #[error("non-simple surface wave space: singular value ratio {0:.3e}")]
    NonSimpleSurfaceWave(f64),

    #[error("no dynamical phase boundary: {0}")]
    NoDynamicalBoundary(String),

    #[error("supersonic state: {0}")]
    Supersonic(String),

    #[error("pressure law: {0}")]
    PressureLaw(String),

    #[error("spectral: {0}")]
    Spectral(String),

    #[error("configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
