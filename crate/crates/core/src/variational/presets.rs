use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{check_rank_one_convexity, VariationalData};

impl VariationalData {
    /// Fills `c` from a quadratic form in the gradient by polarization.
    fn fill_c_from_quadratic(&mut self, form: impl Fn(&[f64]) -> f64) {
        let m = self.n * self.d;
        let unit = |p: usize, q: usize| {
            let mut f = vec![0.0; m];
            f[p] += 1.0;
            f[q] += 1.0;
            f
        };
        for p in 0..m {
            for q in 0..m {
                self.c[p * m + q] = form(&unit(p, q)) - form(&unit_single(m, p)) - form(&unit_single(m, q));
            }
        }
    }

    /// Fills `d3` from a cubic form in the gradient by polarization.
    fn fill_d3_from_cubic(&mut self, form: impl Fn(&[f64]) -> f64) {
        let m = self.n * self.d;
        let sum = |idx: &[usize]| {
            let mut f = vec![0.0; m];
            for &i in idx {
                f[i] += 1.0;
            }
            form(&f)
        };
        for p in 0..m {
            for q in 0..m {
                for r in 0..m {
                    let v = sum(&[p, q, r]) - sum(&[p, q]) - sum(&[p, r]) - sum(&[q, r]) + sum(&[p]) + sum(&[q]) + sum(&[r]);
                    self.d3[(p * m + q) * m + r] = v;
                }
            }
        }
    }

    /// Isotropic elasticity with Lamé constants `lambda`, `mu` in `dim` dimensions.
    ///
    /// `c` is the linear stiffness. `d3` carries the cubic part of the
    /// Saint Venant–Kirchhoff energy (geometric nonlinearity); `e` vanishes.
    pub fn isotropic_elasticity(lambda: f64, mu: f64, dim: usize) -> Self {
        let mut data = Self::zeros(dim, dim);
        let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
        for a in 0..dim {
            for j in 0..dim {
                for b in 0..dim {
                    for l in 0..dim {
                        let v = lambda * delta(a, j) * delta(b, l) + mu * (delta(a, b) * delta(j, l) + delta(a, l) * delta(j, b));
                        data.set_c(a, j, b, l, v);
                    }
                }
            }
        }
        data.fill_d3_from_cubic(|f| {
            let g = |a: usize, j: usize| f[a * dim + j];
            let trace: f64 = (0..dim).map(|i| g(i, i)).sum();
            let norm2: f64 = f.iter().map(|x| x * x).sum();
            let mut strain_work = 0.0;
            for i in 0..dim {
                for j in 0..dim {
                    let sym = 0.5 * (g(i, j) + g(j, i));
                    let gram: f64 = (0..dim).map(|a| g(a, i) * g(a, j)).sum();
                    strain_work += sym * gram;
                }
            }
            0.5 * lambda * trace * norm2 + mu * strain_work
        });
        data
    }

    /// Unconstrained Oseen–Frank energy about the director `director` (`n = d = 3`).
    ///
    /// `W = splay/2 (div u)^2 + twist/2 (u . curl u)^2 + bend/2 |u x curl u|^2
    ///    + saddle_splay/2 (tr(grad u)^2 - (div u)^2)`. The energy is quadratic in
    /// the gradient, so `d3` vanishes; `e` is the director derivative of `c`.
    pub fn oseen_frank(splay: f64, twist: f64, bend: f64, saddle_splay: f64, director: [f64; 3]) -> Self {
        let energy = move |u: [f64; 3], f: &[f64]| {
            let g = |a: usize, j: usize| f[a * 3 + j];
            let div = g(0, 0) + g(1, 1) + g(2, 2);
            let curl = [g(2, 1) - g(1, 2), g(0, 2) - g(2, 0), g(1, 0) - g(0, 1)];
            let dot = u[0] * curl[0] + u[1] * curl[1] + u[2] * curl[2];
            let cross = [
                u[1] * curl[2] - u[2] * curl[1],
                u[2] * curl[0] - u[0] * curl[2],
                u[0] * curl[1] - u[1] * curl[0],
            ];
            let cross2: f64 = cross.iter().map(|x| x * x).sum();
            let tr_sq: f64 = (0..3).flat_map(|a| (0..3).map(move |j| (a, j))).map(|(a, j)| g(a, j) * g(j, a)).sum();
            0.5 * splay * div * div + 0.5 * twist * dot * dot + 0.5 * bend * cross2 + 0.5 * saddle_splay * (tr_sq - div * div)
        };
        let stiffness = |u: [f64; 3]| {
            let mut d = Self::zeros(3, 3);
            d.fill_c_from_quadratic(|f| energy(u, f));
            d.c
        };
        let mut data = Self::zeros(3, 3);
        data.c = stiffness(director);
        let m = 9;
        for a in 0..3 {
            let (mut up, mut down) = (director, director);
            up[a] += 1.0;
            down[a] -= 1.0;
            let (cp, cm) = (stiffness(up), stiffness(down));
            for q in 0..m {
                for r in 0..m {
                    data.e[(a * m + q) * m + r] = 0.5 * (cp[q * m + r] - cm[q * m + r]);
                }
            }
        }
        data
    }

    /// A seeded, generically anisotropic data set in `dim` dimensions.
    ///
    /// Isotropic stiffness with random Lamé constants plus a small symmetric
    /// perturbation, random `e` and `d3` with the required index symmetries.
    /// Draws are repeated until the stiffness is strictly rank-one convex.
    pub fn randomized(dim: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let lambda = rng.gen_range(0.5..2.0);
            let mu = rng.gen_range(0.5..2.0);
            let mut data = Self::isotropic_elasticity(lambda, mu, dim);
            let m = dim * dim;
            let mut normal = || -> f64 { StandardNormal.sample(&mut rng) };
            let raw: Vec<f64> = (0..m * m).map(|_| normal()).collect();
            for p in 0..m {
                for q in 0..m {
                    data.c[p * m + q] += 0.05 * 0.5 * (raw[p * m + q] + raw[q * m + p]);
                }
            }
            let raw: Vec<f64> = (0..dim * m * m).map(|_| normal()).collect();
            for a in 0..dim {
                for q in 0..m {
                    for r in 0..m {
                        data.e[(a * m + q) * m + r] = 0.5 * (raw[(a * m + q) * m + r] + raw[(a * m + r) * m + q]);
                    }
                }
            }
            let raw: Vec<f64> = (0..m * m * m).map(|_| normal()).collect();
            let at = |p: usize, q: usize, r: usize| raw[(p * m + q) * m + r];
            for p in 0..m {
                for q in 0..m {
                    for r in 0..m {
                        let s = at(p, q, r) + at(p, r, q) + at(q, p, r) + at(q, r, p) + at(r, p, q) + at(r, q, p);
                        data.d3[(p * m + q) * m + r] = s / 6.0;
                    }
                }
            }
            if check_rank_one_convexity(&data, 100, seed).passed {
                return data;
            }
        }
    }
}

fn unit_single(m: usize, p: usize) -> Vec<f64> {
    let mut f = vec![0.0; m];
    f[p] = 1.0;
    f
}
