mod common;

use num_complex::Complex64;
use surfwave::kernel::*;

use common::triples_in;

fn hiz_oracle(t: [f64; 3]) -> f64 {
    (t[0] * t[1] * t[2]).abs() / (t[0].abs() + t[1].abs() + t[2].abs())
}

fn austria_oracle(p: [f64; 4], t: [f64; 3]) -> Complex64 {
    let [k, l, m] = t;
    let s = (k * l * m).signum();
    let den = k.abs() + l.abs() + m.abs();
    Complex64::new(p[0], -p[1] * s) * ((k * l).abs() + (l * m).abs() + (m * k).abs()) / den
        + Complex64::new(p[2], -p[3] * s) * (k * l + l * m + m * k) / den
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1e-300)
}

#[test]
fn hiz_matches_formula() {
    let b = hiz_kernel();
    for t in triples_in(2000, 3, 1e-2, 1e2) {
        let v = b.eval(&t);
        assert!(close(v, Complex64::new(hiz_oracle(t.as_array()), 0.0), 1e-14), "{t:?}");
    }
    assert_eq!(b.try_eval(2.0, 2.0, -4.0).unwrap(), Complex64::new(2.0, 0.0));
    assert_eq!(b.try_eval(1.0, -2.0, 1.0).unwrap(), Complex64::new(0.5, 0.0));
    assert!(b.try_eval(1.0, 1.0, -1.0).is_err());
}

#[test]
fn austria_matches_formula() {
    let params = [[1.0, 2.0, 3.0, 4.0], [-0.5, 0.3, 1.1, -2.0], [2.0, 0.0, -2.0, 0.0]];
    for p in params {
        let b = austria_hunter_kernel(p[0], p[1], p[2], p[3]);
        for t in triples_in(500, 5, 1e-2, 1e2) {
            assert!(close(b.eval(&t), austria_oracle(p, t.as_array()), 1e-13));
        }
    }
    let b = austria_hunter_kernel(2.0, 0.0, -2.0, 0.0);
    assert!((b.try_eval(3.0, -1.0, -2.0).unwrap() - Complex64::new(6.0, 0.0)).norm() < 1e-14);
}

#[test]
fn phase_boundary_sector_table() {
    let g = Complex64::new(2.0, 1.0);
    let q = phase_boundary_pair_kernel(g);
    assert_eq!(q.eval(1.0, 2.0).unwrap(), g);
    assert!((q.eval(1.0, -0.25).unwrap() - g.conj() * 0.75).norm() < 1e-15);
    assert!((q.eval(-2.0, 1.0).unwrap() - g * 0.5).norm() < 1e-15);
    assert!(q.eval(1.0, -1.0).is_err());
    assert!(q.eval(0.0, 3.0).is_err());

    // |k| q(k, l) = |k + l| q(-l - k, l) at the worked point
    let lhs = q.eval(1.0, -0.25).unwrap();
    let rhs = q.eval(-0.75, -0.25).unwrap() * 0.75;
    assert!((lhs - rhs).norm() < 1e-14, "{lhs} {rhs}");
    // same sector, real gamma: both sides real
    let qr = phase_boundary_pair_kernel(Complex64::new(1.5, 0.0));
    let (a, b) = (qr.eval(3.0, 2.0).unwrap() * 3.0, qr.eval(-5.0, 2.0).unwrap() * 5.0);
    assert_eq!(a.im, 0.0);
    assert!((a - b).norm() < 1e-14);
}

#[test]
fn phase_boundary_kernel_is_bounded_by_gamma() {
    for (i, g) in [Complex64::new(1.0, 0.0), Complex64::new(0.3, -2.0), Complex64::new(-1.5, 0.7)].into_iter().enumerate() {
        let q = phase_boundary_pair_kernel(g);
        let sup = sample_pairs(5000, i as u64, SampleRange::default(), false)
            .iter()
            .map(|&(k, l)| q.eval(k, l).unwrap().norm())
            .fold(0.0, f64::max);
        assert!(sup <= g.norm() * (1.0 + 1e-15));
        // attained on the first quadrant
        assert_eq!(q.eval(0.5, 3.0).unwrap().norm(), g.norm());
    }
}

#[test]
fn rescalings_and_reduction() {
    let hiz = hiz_kernel();
    let p = rescale_to_p(&hiz);
    assert!((p.try_eval(1.0, 1.0, -2.0).unwrap().re - 0.5 / 2f64.sqrt()).abs() < 1e-15);
    assert_eq!(p.degree(), Some(0.5));
    let ratio = p.try_eval(2.0, 2.0, -4.0).unwrap() / p.try_eval(1.0, 1.0, -2.0).unwrap();
    assert!((ratio.re - 2f64.powf(0.5)).abs() < 1e-14);

    let pa = rescale_to_p(&austria_hunter_kernel(2.0, 0.0, -2.0, 0.0));
    assert!((pa.try_eval(1.0, 1.0, -2.0).unwrap().re - 4.0 / 2f64.sqrt()).abs() < 1e-14);

    let q = reduce_to_q(&hiz).unwrap();
    assert!((q.eval(1.0, 1.0).unwrap().re - 0.5).abs() < 1e-15);
    assert!((q.eval(2.0, -1.0).unwrap().re - 0.25).abs() < 1e-15);
    assert!(matches!(reduce_to_q(&austria_hunter_kernel(1.0, 0.0, 0.0, 0.0)), Err(surfwave::Error::NotDegreeTwo(_))));

    let back = rescale_from_p(&p);
    for t in triples_in(200, 8, 1e-2, 1e2) {
        assert!(close(back.eval(&t), hiz.eval(&t), 1e-14));
    }
}

#[test]
fn hunter_limits_of_hiz() {
    let q = reduce_to_q(&hiz_kernel()).unwrap();
    for k in [1.0, -1.0] {
        let v = q.eval(k, 1e-9).unwrap();
        assert!((v.re - 0.5).abs() < 1e-8, "{k} {v}");
    }
    let cert = check_hunter(&q);
    assert!(cert.passed && cert.worst_ratio <= 1e-8);
}

#[test]
fn certificates_on_built_in_kernels() {
    let c2 = check_bound_c2(&rescale_to_p(&hiz_kernel()), 10_000, 1);
    assert!(c2.passed && c2.constant <= 0.5 + 1e-9, "{c2:?}");
    let c1 = check_bound_c1(&rescale_to_p(&austria_hunter_kernel(2.0, 0.0, -2.0, 0.0)), 10_000, 2);
    assert!(c1.passed && c1.constant.is_finite());

    let gamma = Complex64::new(1.0, 0.0);
    let crucial = check_crucial_estimate(&phase_boundary_pair_kernel(gamma), 10_000, 3);
    assert!(crucial.passed && crucial.constant <= 2.0, "{crucial:?}");
    let hiz_crucial = check_crucial_estimate(&reduce_to_q(&hiz_kernel()).unwrap(), 10_000, 4);
    assert!(hiz_crucial.passed && hiz_crucial.constant.is_finite());

    for q in [phase_boundary_pair_kernel(Complex64::new(2.0, 1.0)), reduce_to_q(&hiz_kernel()).unwrap()] {
        let c = check_crucialsym(&q, 10_000, 5);
        assert!(c.passed, "{c:?}");
    }
}

#[test]
fn singular_kernel_fails_c1() {
    let p = Kernel::new("inverse", Some(-3.0), |a, b, c| Complex64::new(1.0 / (a * b * c).abs(), 0.0));
    let cert = check_bound_c1(&p, 2000, 1);
    assert!(!cert.passed, "{cert:?}");
}

#[test]
fn certificates_are_reproducible() {
    let a = check_symmetry_conjugation(&austria_hunter_kernel(1.0, 2.0, 3.0, 4.0), 3000, 42);
    let b = check_symmetry_conjugation(&austria_hunter_kernel(1.0, 2.0, 3.0, 4.0), 3000, 42);
    assert_eq!(a.worst_ratio.to_bits(), b.worst_ratio.to_bits());
    assert_eq!(a.worst_point, b.worst_point);
}
