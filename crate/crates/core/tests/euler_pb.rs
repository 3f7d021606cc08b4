mod common;

use surfwave::euler::*;
use surfwave::kernel::{check_crucial_estimate, check_crucialsym, sample_pairs, SampleRange};
use surfwave::Error;

use common::vdw_bisection_on_flux;

const VDW: VanDerWaals = VanDerWaals { theta: 0.85 };

#[test]
fn vdw_states_match_flux_bisection() {
    let s = solve_states(&VDW, 0.31, None).unwrap();
    let oracle = vdw_bisection_on_flux(&VDW, 0.31, 1.2, 2.9).expect("oracle brackets a root");
    assert!((s.rho_r - oracle).abs() <= 1e-6, "{} vs {oracle}", s.rho_r);
    let r = s.relative_residuals(&VDW);
    assert!(r.iter().all(|x| x.abs() <= 1e-12), "{r:?}");
    assert!(s.equal_area_defect.abs() <= 1e-8);
    assert!(s.j > 0.0 && s.u_l < s.c_l && s.u_r < s.c_r);
}

#[test]
fn reversibility() {
    let s = solve_states(&VDW, 0.30, None).unwrap();
    let back = s.swapped();
    assert!(back.relative_residuals(&VDW).iter().all(|x| x.abs() <= 1e-12));
    let t1 = dispersion_root(&s, 1.0).unwrap();
    let t2 = dispersion_root(&back, 1.0).unwrap();
    assert!((t1 - t2).abs() <= 1e-12 * t1);
}

#[test]
fn convex_law_violates_energy_jump() {
    let law = CubicLaw { c1: 0.0, c2: 1.0, c3: 0.0, rho_max: 10.0 };
    let (rl, rr) = (1.0, 2.0);
    let j = ((law.pressure(rr) - law.pressure(rl)) / (1.0 / rl - 1.0 / rr)).sqrt();
    let r = jump_residuals(&law, rl, rr, j / rl, j / rr);
    assert!(r[0].abs() < 1e-14 && r[1].abs() < 1e-13);
    assert!(r[2].abs() > 1e-3, "{r:?}");
    assert!(matches!(solve_states(&law, rl, None), Err(Error::NoDynamicalBoundary(_))));
}

#[test]
fn tabulated_vdw_reproduces_closed_form() {
    let rho: Vec<f64> = (0..=2400).map(|i| 0.05 + 2.85 * i as f64 / 2400.0).collect();
    let p: Vec<f64> = rho.iter().map(|&r| VDW.pressure(r)).collect();
    let table = TableLaw::new(rho, p).unwrap();
    let a = solve_states(&VDW, 0.31, None).unwrap();
    let b = solve_states(&table, 0.31, Some(a.rho_r)).unwrap();
    assert!((a.rho_r - b.rho_r).abs() <= 1e-6, "{} {}", a.rho_r, b.rho_r);
    assert!((a.j - b.j).abs() <= 1e-6);
}

#[test]
fn symmetric_dispersion_closed_form() {
    let s = PhaseBoundaryStates::from_values(1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 0.0, 0.0).unwrap();
    let tau = dispersion_root(&s, 1.0).unwrap();
    // tau^2 = u^2 (c^2 - u^2) / (c^2 + u^2)
    assert!((tau - (0.25f64 * 0.75 / 1.25).sqrt()).abs() <= 1e-10);
    assert!((dispersion_root(&s, 2.0).unwrap() - 2.0 * tau).abs() <= 1e-12);
    assert!(tau < 0.75f64.sqrt());
    assert!(dispersion_lhs(&s, 1.0, tau).abs() <= 1e-12 * ellipticity_bound(&s, 1.0).powi(2));
}

#[test]
fn alpha0_against_finite_difference() {
    for rho_l in [0.29, 0.31] {
        let data = analyze(&VDW, rho_l, None, 1.0).unwrap();
        let h = 1e-6;
        let fd = (dispersion_lhs(&data.states, 1.0, data.tau + h) - dispersion_lhs(&data.states, 1.0, data.tau - h)) / (2.0 * h);
        assert!((data.alpha0 + fd).abs() <= 1e-6 * fd.abs(), "{} {fd}", data.alpha0);
        assert!(data.alpha0 != 0.0);
    }
}

#[test]
fn pipeline_kernel_properties() {
    let data = analyze(&VDW, 0.31, None, 1.0).unwrap();
    let c = &data.coefficients;
    assert!(c.a_l < 0.0 && c.a_r > 0.0);
    for z in [-3.0, -0.5, 0.5, 3.0] {
        assert!(data.mode_residual(z) <= 1e-10);
    }
    let q = data.pair_kernel();
    let g = data.gamma.norm();
    assert!(check_crucialsym(&q, 5000, 1).passed);
    let crucial = check_crucial_estimate(&q, 5000, 2);
    assert!(crucial.passed && crucial.constant <= 2.0 * g);
    let sup = sample_pairs(5000, 3, SampleRange::default(), false)
        .iter()
        .map(|&(k, l)| q.eval(k, l).unwrap().norm())
        .fold(0.0, f64::max);
    assert!(sup <= g * (1.0 + 1e-15));
    assert!((q.eval(1.0, 1.0).unwrap().norm() - g).abs() <= 1e-15 * g);
}

#[test]
fn supersonic_and_degenerate_inputs() {
    assert!(matches!(
        PhaseBoundaryStates::from_values(1.0, 2.0, 1.5, 0.75, 1.0, 1.0, 0.0, 0.0),
        Err(Error::Supersonic(_))
    ));
    // inconsistent mass flux
    assert!(PhaseBoundaryStates::from_values(1.0, 2.0, 0.5, 0.5, 1.0, 1.0, 0.0, 0.0).is_err());
}
