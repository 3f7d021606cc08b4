//! Linear surface waves of a variational boundary-value problem and the
//! closed-form synthesis of their amplitude-equation kernels.
//!
//! Derivative tensors of the energy density at the reference state are stored
//! flat. A gradient slot `u_{a,j}` is addressed by the pair index `a * d + j`.

mod file;
mod modes;
mod presets;
mod profile;
mod synth;

pub use file::{load_variational_data, parse_variational_data};
pub use modes::{
    elliptic_band_limit, lopatinskii_det, lopatinskii_matrix, scan_and_refine_root, scan_range, stable_modes,
    LopatinskiiRoot, LopatinskiiScan, Mode, SymbolMatrices,
};
pub use profile::{build_profile, ProfileMode, SurfaceWaveProfile};
pub use synth::{synthesize_kernel, SynthesizedKernel};

use nalgebra::{DMatrix, SymmetricEigen};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::kernel::{BoundCertificate, Property};

const SYMMETRY_TOL: f64 = 1e-12;

/// Second and third derivatives of an energy density `W(u, grad u)` at `(u_ref, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VariationalData {
    n: usize,
    d: usize,
    c: Vec<f64>,
    e: Vec<f64>,
    d3: Vec<f64>,
}

impl VariationalData {
    /// All-zero tensors for `n` unknowns in `d` space dimensions.
    pub fn zeros(n: usize, d: usize) -> Self {
        let m = n * d;
        Self { n, d, c: vec![0.0; m * m], e: vec![0.0; n * m * m], d3: vec![0.0; m * m * m] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    fn pair(&self, a: usize, j: usize) -> usize {
        a * self.d + j
    }

    #[inline]
    pub fn c(&self, a: usize, j: usize, b: usize, l: usize) -> f64 {
        self.c[self.pair(a, j) * self.n * self.d + self.pair(b, l)]
    }

    #[inline]
    pub fn e(&self, a: usize, b: usize, j: usize, g: usize, l: usize) -> f64 {
        let m = self.n * self.d;
        self.e[(a * m + self.pair(b, j)) * m + self.pair(g, l)]
    }

    #[inline]
    pub fn d3(&self, a: usize, j: usize, b: usize, l: usize, g: usize, m: usize) -> f64 {
        let w = self.n * self.d;
        self.d3[(self.pair(a, j) * w + self.pair(b, l)) * w + self.pair(g, m)]
    }

    /// `c` flattened by gradient slot pairs: `c[p * nd + q]`.
    pub fn c_flat(&self) -> &[f64] {
        &self.c
    }

    /// `e` flattened as `e[(a * nd + q) * nd + r]`.
    pub fn e_flat(&self) -> &[f64] {
        &self.e
    }

    /// `d3` flattened as `d3[(p * nd + q) * nd + r]`.
    pub fn d3_flat(&self) -> &[f64] {
        &self.d3
    }

    pub fn set_c(&mut self, a: usize, j: usize, b: usize, l: usize, v: f64) {
        let i = self.pair(a, j) * self.n * self.d + self.pair(b, l);
        self.c[i] = v;
    }

    pub fn set_e(&mut self, a: usize, b: usize, j: usize, g: usize, l: usize, v: f64) {
        let m = self.n * self.d;
        let i = (a * m + self.pair(b, j)) * m + self.pair(g, l);
        self.e[i] = v;
    }

    pub fn set_d3(&mut self, a: usize, j: usize, b: usize, l: usize, g: usize, m: usize, v: f64) {
        let w = self.n * self.d;
        let i = (self.pair(a, j) * w + self.pair(b, l)) * w + self.pair(g, m);
        self.d3[i] = v;
    }

    pub fn e_is_zero(&self) -> bool {
        self.e.iter().all(|&x| x == 0.0)
    }

    pub fn d3_is_zero(&self) -> bool {
        self.d3.iter().all(|&x| x == 0.0)
    }

    /// Drops the third-derivative tensors.
    pub fn quadratic_part(&self) -> Self {
        let mut out = self.clone();
        out.e.iter_mut().for_each(|x| *x = 0.0);
        out.d3.iter_mut().for_each(|x| *x = 0.0);
        out
    }

    /// Keeps only `e` (drops `d3`) or only `d3` (drops `e`).
    pub fn with_third_order(&self, keep_e: bool, keep_d3: bool) -> Self {
        let mut out = self.clone();
        if !keep_e {
            out.e.iter_mut().for_each(|x| *x = 0.0);
        }
        if !keep_d3 {
            out.d3.iter_mut().for_each(|x| *x = 0.0);
        }
        out
    }

    /// Multiplies every tensor by `s`.
    pub fn scaled(&self, s: f64) -> Self {
        let f = |v: &Vec<f64>| v.iter().map(|x| x * s).collect();
        Self { n: self.n, d: self.d, c: f(&self.c), e: f(&self.e), d3: f(&self.d3) }
    }

    /// Checks Hessian symmetry of `c`, the pair swap of `e`, and full pair symmetry of `d3`.
    pub fn validate(&self) -> Result<()> {
        let m = self.n * self.d;
        let scale = |v: &[f64]| v.iter().fold(0.0f64, |a, x| a.max(x.abs())).max(f64::MIN_POSITIVE);
        let (sc, se, sd) = (scale(&self.c), scale(&self.e), scale(&self.d3));
        for p in 0..m {
            for q in 0..m {
                if (self.c[p * m + q] - self.c[q * m + p]).abs() > SYMMETRY_TOL * sc {
                    return Err(Error::VariationalData(format!("c is not symmetric at slots ({p}, {q})")));
                }
            }
        }
        for a in 0..self.n {
            for q in 0..m {
                for r in 0..m {
                    if (self.e[(a * m + q) * m + r] - self.e[(a * m + r) * m + q]).abs() > SYMMETRY_TOL * se {
                        return Err(Error::VariationalData(format!("e is not symmetric in its last two slots at ({a}, {q}, {r})")));
                    }
                }
            }
        }
        for p in 0..m {
            for q in 0..m {
                for r in 0..m {
                    let v = self.d3[(p * m + q) * m + r];
                    for (x, y, z) in [(p, r, q), (q, p, r), (q, r, p), (r, p, q), (r, q, p)] {
                        if (self.d3[(x * m + y) * m + z] - v).abs() > SYMMETRY_TOL * sd {
                            return Err(Error::VariationalData(format!("d3 is not symmetric at slots ({p}, {q}, {r})")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Acoustic tensor `A(xi)_{ab} = c_{a j b l} xi_j xi_l`.
    pub fn acoustic_tensor(&self, xi: &[f64]) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |a, b| {
            let mut s = 0.0;
            for j in 0..self.d {
                for l in 0..self.d {
                    s += self.c(a, j, b, l) * xi[j] * xi[l];
                }
            }
            s
        })
    }
}

/// Unit vectors on a deterministic grid of the sphere in `d` dimensions.
fn sphere_grid(d: usize, count: usize) -> Vec<Vec<f64>> {
    match d {
        1 => vec![vec![1.0]],
        2 => (0..count)
            .map(|i| {
                let t = std::f64::consts::PI * i as f64 / count as f64;
                vec![t.cos(), t.sin()]
            })
            .collect(),
        3 => {
            let golden = std::f64::consts::PI * (3.0 - 5f64.sqrt());
            (0..count)
                .map(|i| {
                    let z = 1.0 - 2.0 * (i as f64 + 0.5) / count as f64;
                    let r = (1.0 - z * z).sqrt();
                    let phi = golden * i as f64;
                    vec![r * phi.cos(), r * phi.sin(), z]
                })
                .collect()
        }
        _ => Vec::new(),
    }
}

fn random_unit(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-8 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Strict rank-one convexity: positivity of `c(v ⊗ xi, v ⊗ xi)` for unit `v`, `xi`.
///
/// Combines `n_dirs` random pairs with the smallest acoustic-tensor eigenvalue on a
/// sphere grid. The certificate constant is the smallest value found.
pub fn check_rank_one_convexity(data: &VariationalData, n_dirs: usize, seed: u64) -> BoundCertificate {
    let (n, d) = (data.n, data.d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::INFINITY;
    let mut witness = Vec::new();
    let mut consider = |value: f64, v: &[f64], xi: &[f64]| {
        if value < worst || value.is_nan() {
            worst = if value.is_nan() { f64::NEG_INFINITY } else { value };
            witness = v.iter().chain(xi.iter()).copied().collect();
        }
    };
    for _ in 0..n_dirs {
        let v = random_unit(&mut rng, n);
        let xi = random_unit(&mut rng, d);
        let a = data.acoustic_tensor(&xi);
        let value = (0..n).map(|i| (0..n).map(|k| v[i] * a[(i, k)] * v[k]).sum::<f64>()).sum();
        consider(value, &v, &xi);
    }
    let grid = sphere_grid(d, 64 * d * d);
    for xi in &grid {
        let eig = SymmetricEigen::new(data.acoustic_tensor(xi));
        let (k, &min) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("non-empty spectrum");
        let v: Vec<f64> = eig.eigenvectors.column(k).iter().copied().collect();
        consider(min, &v, xi);
    }
    BoundCertificate {
        property: Property::RankOneConvexity,
        constant: worst,
        samples_checked: n_dirs + grid.len(),
        worst_ratio: worst,
        worst_point: witness,
        passed: worst > 0.0,
        detail: Some("worst_triple lists (v, xi) at the smallest value".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isotropic_acoustic_eigenvalues() {
        let data = VariationalData::isotropic_elasticity(1.0, 1.0, 2);
        let eig = SymmetricEigen::new(data.acoustic_tensor(&[0.6, 0.8]));
        let mut ev: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
        let cert = check_rank_one_convexity(&data, 200, 1);
        assert!(cert.passed);
        assert!((cert.constant - 1.0).abs() < 1e-12);
    }

    #[test]
    fn negative_lame_fails() {
        let data = VariationalData::isotropic_elasticity(-3.0, 1.0, 2);
        let cert = check_rank_one_convexity(&data, 200, 1);
        assert!(!cert.passed);
        assert_eq!(cert.worst_point.len(), 4);
    }

    #[test]
    fn identity_pairing_min_is_one() {
        let mut data = VariationalData::zeros(2, 2);
        for a in 0..2 {
            for j in 0..2 {
                data.set_c(a, j, a, j, 1.0);
            }
        }
        let cert = check_rank_one_convexity(&data, 100, 3);
        assert!(cert.passed && (cert.constant - 1.0).abs() < 1e-12);
    }

    #[test]
    fn validation_catches_asymmetry() {
        let mut data = VariationalData::isotropic_elasticity(1.0, 1.0, 2);
        assert!(data.validate().is_ok());
        data.set_c(0, 0, 1, 1, 7.0);
        assert!(data.validate().is_err());
    }

    #[test]
    fn presets_validate() {
        assert!(VariationalData::isotropic_elasticity(1.0, 1.0, 3).validate().is_ok());
        assert!(VariationalData::oseen_frank(1.0, 2.0, 3.0, 0.5, [0.0, 0.0, 1.0]).validate().is_ok());
        assert!(VariationalData::randomized(2, 11).validate().is_ok());
    }
}
