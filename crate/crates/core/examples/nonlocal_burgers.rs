//! Nonlocal Burgers equation with the HIZ pair kernel, started from cos y.
//! Prints the conserved quantities and the growth of the high modes.

use surfwave::kernel::{hiz_kernel, reduce_to_q};
use surfwave::spectral::{integrate, EvolutionForm, FormTag, SpectralState};

fn main() -> surfwave::Result<()> {
    let form = EvolutionForm::V { kernel: reduce_to_q(&hiz_kernel())?, sign: 1.0 };
    let w0 = SpectralState::cosine(128);
    let run = integrate(&form, &FormTag::V.from_w(&w0), 2e-4, 2500, 250)?;
    println!("{:>6} {:>12} {:>14} {:>12} {:>12}", "s", "M", "T", "L2", "H^2.5");
    let log = &run.log;
    for i in 0..log.len() {
        println!(
            "{:>6.3} {:>12.6e} {:>14.6e} {:>12.6e} {:>12.6e}",
            log.times[i], log.m_values[i], log.t_values[i], log.l2_values[i], log.hsigma_values[i]
        );
    }
    let w = FormTag::V.to_w(&run.state);
    let tail: f64 = w.coeffs()[64..].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    println!("upper-half spectral mass {tail:.3e}; M drift {:.2e}", log.relative_m_drift());
    Ok(())
}
