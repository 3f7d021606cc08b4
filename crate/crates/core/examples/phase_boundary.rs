//! Van der Waals fluid: subsonic phase boundary states, surface-wave speed and
//! the coefficients of the resulting pair kernel.

use surfwave::euler::{analyze, equal_area_defect, VanDerWaals};
use surfwave::kernel::{check_crucial_estimate, check_crucialsym};

fn main() -> surfwave::Result<()> {
    let law = VanDerWaals { theta: 0.85 };
    for rho_l in [0.29, 0.30, 0.31] {
        let data = match analyze(&law, rho_l, None, 1.0) {
            Ok(d) => d,
            Err(e) => {
                println!("rho_l = {rho_l}: {e}");
                continue;
            }
        };
        let s = &data.states;
        println!(
            "rho_l = {rho_l}: rho_r = {:.10} j = {:.4e} equal-area defect {:.1e}",
            s.rho_r,
            s.j,
            equal_area_defect(&law, s.rho_l, s.rho_r)
        );
        println!("  tau = {:.10}  gamma = {:.6e}", data.tau, data.gamma);
        let q = data.pair_kernel();
        let sym = check_crucialsym(&q, 2000, 1);
        let est = check_crucial_estimate(&q, 2000, 2);
        println!("  crucialsym {:.1e}, crucial constant {:.4e} (2|gamma| = {:.4e})", sym.worst_ratio, est.constant, 2.0 * data.gamma.norm());
    }
    Ok(())
}
