//! Sampled certificates for kernel identities and bounds.
//!
//! Samples come from a `ChaCha8Rng` seeded with `seed`. Magnitudes are drawn
//! log-uniformly from a [`SampleRange`] and signs uniformly. A bound "passes"
//! when its sampled supremum is finite and grows by less than [`DOUBLING_RATIO`]
//! when the sample set is doubled, the extra half being drawn from a range one
//! decade wider on each side.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Kernel, PairKernel, ZeroSumTriple};

/// Relative tolerance for exact identities.
pub const IDENTITY_TOL: f64 = 1e-12;
/// Largest admissible growth of a sampled supremum under doubling.
pub const DOUBLING_RATIO: f64 = 1.1;
const FLOOR: f64 = 1e-300;
const HOMOGENEITY_SCALES: [f64; 3] = [0.5, 2.0, 10.0];
const HUNTER_STEP: f64 = 1e-6;
const HUNTER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "symmetry")]
    Symmetry,
    #[serde(rename = "homogeneity")]
    Homogeneity,
    C1,
    C2,
    #[serde(rename = "crucial")]
    Crucial,
    #[serde(rename = "crucialsym")]
    CrucialSym,
    #[serde(rename = "hunterH")]
    HunterH,
    #[serde(rename = "rank-one-convexity")]
    RankOneConvexity,
}

/// Outcome of a sampled check.
///
/// For identities `constant` is the tolerance and `worst_ratio` the largest
/// relative deviation seen. For bounds `worst_ratio` is the supremum over the
/// base sample and `constant` the supremum over the doubled sample.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub property: Property,
    pub constant: f64,
    #[serde(rename = "samples")]
    pub samples_checked: usize,
    pub worst_ratio: f64,
    #[serde(rename = "worst_triple")]
    pub worst_point: Vec<f64>,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRange {
    pub lo: f64,
    pub hi: f64,
}

impl Default for SampleRange {
    fn default() -> Self {
        Self { lo: 1e-3, hi: 1e3 }
    }
}

impl SampleRange {
    fn widened(&self) -> Self {
        Self { lo: self.lo / 10.0, hi: self.hi * 10.0 }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> f64 {
        let (a, b) = (self.lo.ln(), self.hi.ln());
        let mag = (a + (b - a) * rng.gen::<f64>()).exp();
        if rng.gen::<bool>() {
            mag
        } else {
            -mag
        }
    }
}

/// Random zero-sum triples `(x, y, -x-y)`, with the sum exact in floating point.
pub fn sample_triples(n: usize, seed: u64, range: SampleRange) -> Vec<ZeroSumTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (x, y) = snap_pair(range.draw(&mut rng), range.draw(&mut rng));
        if let Ok(t) = ZeroSumTriple::from_pair(x, y) {
            out.push(t);
        }
    }
    out
}

/// Rounds both entries to a common binary grid keeping 48 bits of the larger
/// one. Sums like `-l - k` and products with the homogeneity scales are then
/// exact, so zero-sum triples stay zero-sum.
fn snap_pair(k: f64, l: f64) -> (f64, f64) {
    let e = k.abs().max(l.abs()).log2().floor() as i32 + 1;
    let u = 2f64.powi(e - 48);
    ((k / u).round() * u, (l / u).round() * u)
}

/// Random pairs off the sector boundaries, with `k + l` exact in floating point.
/// With `ordered`, `|l| < |k|`.
pub fn sample_pairs(n: usize, seed: u64, range: SampleRange, ordered: bool) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (mut k, mut l) = snap_pair(range.draw(&mut rng), range.draw(&mut rng));
        if ordered && l.abs() > k.abs() {
            std::mem::swap(&mut k, &mut l);
        }
        if k != 0.0 && l != 0.0 && k + l != 0.0 && (!ordered || l.abs() < k.abs()) {
            out.push((k, l));
        }
    }
    out
}

/// Largest value and its index; NaN counts as infinite. Ties go to the lower index.
fn sup_by<T: Sync>(items: &[T], f: impl Fn(&T) -> f64 + Sync) -> (f64, usize) {
    items
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let v = f(x);
            (if v.is_nan() { f64::INFINITY } else { v }, i)
        })
        .reduce(
            || (f64::NEG_INFINITY, usize::MAX),
            |a, b| if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) { b } else { a },
        )
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / (a.norm().max(b.norm()) + FLOOR)
}

fn identity_certificate(property: Property, n: usize, worst: f64, point: Vec<f64>) -> BoundCertificate {
    BoundCertificate {
        property,
        constant: IDENTITY_TOL,
        samples_checked: n,
        worst_ratio: worst,
        worst_point: point,
        passed: worst <= IDENTITY_TOL,
        detail: None,
    }
}

fn doubling_certificate(property: Property, base: (f64, Vec<f64>), doubled: (f64, Vec<f64>), n: usize) -> BoundCertificate {
    let (s1, p1) = base;
    let (s2, p2) = doubled;
    let stable = s2.is_finite() && (s2 == 0.0 || (s1 > 0.0 && s2 / s1 < DOUBLING_RATIO));
    BoundCertificate {
        property,
        constant: s2,
        samples_checked: n,
        worst_ratio: s1,
        worst_point: if s2 > s1 { p2 } else { p1 },
        passed: stable,
        detail: None,
    }
}

/// Permutation invariance and conjugation symmetry.
pub fn check_symmetry_conjugation(b: &Kernel, n_samples: usize, seed: u64) -> BoundCertificate {
    let triples = sample_triples(n_samples.max(1), seed, SampleRange::default());
    let (worst, i) = sup_by(&triples, |t| {
        let base = b.eval(t);
        let perm = t.permutations()[1..]
            .iter()
            .map(|p| rel(b.eval(p), base))
            .fold(0.0, f64::max);
        perm.max(rel(b.eval(&t.negated()), base.conj()))
    });
    identity_certificate(Property::Symmetry, triples.len(), worst, triples[i].as_array().to_vec())
}

/// `b(s xi) = s^h b(xi)` for the declared degree `h`; `None` when no degree is declared.
pub fn check_homogeneity(b: &Kernel, n_samples: usize, seed: u64) -> Option<BoundCertificate> {
    let h = b.degree()?;
    let triples = sample_triples(n_samples.max(1), seed, SampleRange::default());
    let (worst, i) = sup_by(&triples, |t| {
        let base = b.eval(t);
        HOMOGENEITY_SCALES
            .iter()
            .map(|&s| {
                let expect = base * s.powf(h);
                (b.eval(&t.scaled(s)) - expect).norm() / (expect.norm() + FLOOR)
            })
            .fold(0.0, f64::max)
    });
    Some(identity_certificate(Property::Homogeneity, triples.len(), worst, triples[i].as_array().to_vec()))
}

fn bound_check(p: &Kernel, n: usize, seed: u64, property: Property, weight: impl Fn(f64) -> f64 + Sync) -> BoundCertificate {
    let n = n.max(1);
    let range = SampleRange::default();
    let base = sample_triples(n, seed, range);
    let extra = sample_triples(n, seed.wrapping_add(0x9E37_79B9_7F4A_7C15), range.widened());
    let f = |t: &ZeroSumTriple| p.eval(t).norm() * weight(t.min_abs());
    let (s1, i1) = sup_by(&base, f);
    let (s_extra, i2) = sup_by(&extra, f);
    let doubled = if s_extra > s1 { (s_extra, extra[i2].as_array().to_vec()) } else { (s1, base[i1].as_array().to_vec()) };
    doubling_certificate(property, (s1, base[i1].as_array().to_vec()), doubled, 2 * n)
}

/// `sup |p(xi)| min|xi_i|^(1/2)`.
pub fn check_bound_c1(p: &Kernel, n_samples: usize, seed: u64) -> BoundCertificate {
    bound_check(p, n_samples, seed, Property::C1, f64::sqrt)
}

/// `sup |p(xi)| / min|xi_i|^(1/2)`.
pub fn check_bound_c2(p: &Kernel, n_samples: usize, seed: u64) -> BoundCertificate {
    bound_check(p, n_samples, seed, Property::C2, |m| 1.0 / m.sqrt())
}

/// `sup |q(k,l) - q(-l-k,l)| |k/l|` over `0 < |l| < |k|`.
pub fn check_crucial_estimate(q: &PairKernel, n_samples: usize, seed: u64) -> BoundCertificate {
    let n = n_samples.max(1);
    let range = SampleRange::default();
    let base = sample_pairs(n, seed, range, true);
    let extra = sample_pairs(n, seed.wrapping_add(0x9E37_79B9_7F4A_7C15), range.widened(), true);
    let f = |&(k, l): &(f64, f64)| (q.eval_unchecked(k, l) - q.eval_unchecked(-l - k, l)).norm() * (k / l).abs();
    let (s1, i1) = sup_by(&base, f);
    let (s_extra, i2) = sup_by(&extra, f);
    let p1 = vec![base[i1].0, base[i1].1];
    let doubled = if s_extra > s1 { (s_extra, vec![extra[i2].0, extra[i2].1]) } else { (s1, p1.clone()) };
    doubling_certificate(Property::Crucial, (s1, p1), doubled, 2 * n)
}

/// `|k| q(k,l) = |k+l| q(-l-k, l)`.
pub fn check_crucialsym(q: &PairKernel, n_samples: usize, seed: u64) -> BoundCertificate {
    let pairs = sample_pairs(n_samples.max(1), seed, SampleRange::default(), false);
    let (worst, i) = sup_by(&pairs, |&(k, l)| {
        rel(q.eval_unchecked(k, l) * k.abs(), q.eval_unchecked(-l - k, l) * (k + l).abs())
    });
    identity_certificate(Property::CrucialSym, pairs.len(), worst, vec![pairs[i].0, pairs[i].1])
}

/// Compares the one-sided limits `q(1, 0+)` and `q(-1, 0+)`.
///
/// Each limit is estimated from steps `h` and `2h` by linear extrapolation
/// `2 q(h) - q(2h)`, which removes the first-order term in `h`.
pub fn check_hunter(q: &PairKernel) -> BoundCertificate {
    let h = HUNTER_STEP;
    let limit = |k: f64| q.eval_unchecked(k, h) * 2.0 - q.eval_unchecked(k, 2.0 * h);
    let (plus, minus) = (limit(1.0), limit(-1.0));
    let worst = (plus - minus).norm();
    let raw = (q.eval_unchecked(1.0, h) - q.eval_unchecked(-1.0, h)).norm();
    BoundCertificate {
        property: Property::HunterH,
        constant: HUNTER_TOL,
        samples_checked: 4,
        worst_ratio: worst,
        worst_point: vec![1.0, h],
        passed: worst.is_finite() && worst <= HUNTER_TOL,
        detail: Some(format!(
            "q(1,0+) ~ {:.12}{:+.12}i, q(-1,0+) ~ {:.12}{:+.12}i, unextrapolated mismatch {:.3e}",
            plus.re, plus.im, minus.re, minus.im, raw
        )),
    }
}
