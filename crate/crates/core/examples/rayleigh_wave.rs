//! Rayleigh waves on an isotropic elastic half-plane: Lopatinskii root, profile
//! residuals and the Poisson-ratio dependence of the wave speed.

use surfwave::variational::{build_profile, scan_and_refine_root, scan_range, VariationalData};

fn main() -> surfwave::Result<()> {
    let (nu, eta) = ([0.0, 1.0], [1.0, 0.0]);
    println!("{:>8} {:>8} {:>14} {:>12} {:>12}", "lambda", "mu", "c_R / c_s", "boundary", "interior");
    for lambda in [0.0, 0.5, 1.0, 2.0, 5.0] {
        let data = VariationalData::isotropic_elasticity(lambda, 1.0, 2);
        let range = scan_range(&data, &nu, &eta)?;
        let scan = scan_and_refine_root(&data, &nu, &eta, range, 400)?;
        let tau = scan.roots[0].tau;
        let profile = build_profile(&data, &nu, &eta, tau)?;
        println!(
            "{lambda:>8.2} {:>8.2} {tau:>14.10} {:>12.3e} {:>12.3e}",
            1.0,
            profile.boundary_residual(&data)?,
            profile.interior_residual(&data, 0.7)?
        );
    }
    Ok(())
}
