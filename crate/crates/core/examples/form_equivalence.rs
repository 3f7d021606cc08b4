//! The same HIZ evolution written three ways: for w directly, for the
//! half-derivative unknown and through the pair kernel. The results agree.

use surfwave::kernel::{hiz_kernel, reduce_to_q, rescale_to_p};
use surfwave::spectral::{integrate, EvolutionForm, SpectralState};

fn main() -> surfwave::Result<()> {
    let b = hiz_kernel();
    let forms = [
        EvolutionForm::W { kernel: b.clone(), sign: 1.0 },
        EvolutionForm::U { kernel: rescale_to_p(&b), sign: 1.0 },
        EvolutionForm::V { kernel: reduce_to_q(&b)?, sign: 1.0 },
    ];
    let w0 = SpectralState::from_modes(32, &[(1, 1.0, 0.0), (2, 0.5, 0.3)])?;
    let mut finals = Vec::new();
    for form in &forms {
        let run = integrate(form, &form.tag().from_w(&w0), 1e-3, 100, 100)?;
        let w = form.tag().to_w(&run.state);
        println!("{:?}: |w| = {:.12e}, T drift {:.1e}", form.tag(), w.l2_norm(), run.log.t_drift());
        finals.push(w);
    }
    println!("W vs U {:.2e}", finals[0].l2_distance(&finals[1]));
    println!("W vs V {:.2e}", finals[0].l2_distance(&finals[2]));
    Ok(())
}
