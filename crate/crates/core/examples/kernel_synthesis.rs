//! Builds the cubic-order kernel of a randomized hyperelastic material and
//! checks its symmetry and the degree of its two pieces.

use surfwave::kernel::{check_homogeneity, check_symmetry_conjugation, ZeroSumTriple};
use surfwave::variational::{build_profile, scan_and_refine_root, scan_range, synthesize_kernel, VariationalData};

fn main() -> surfwave::Result<()> {
    let data = VariationalData::randomized(2, 11);
    let (nu, eta) = ([0.0, 1.0], [1.0, 0.0]);
    let range = scan_range(&data, &nu, &eta)?;
    let scan = scan_and_refine_root(&data, &nu, &eta, range, 400)?;
    let root = &scan.roots[0];
    println!("tau = {:.12}  simple = {}", root.tau, root.simple);

    let profile = build_profile(&data, &nu, &eta, root.tau)?;
    let synth = synthesize_kernel(&data, &profile)?;
    for (x, y) in [(1.0, 1.0), (1.0, -3.0), (0.25, 2.0)] {
        let t = ZeroSumTriple::from_pair(x, y)?;
        println!("b{:?} = {:.6e}", t.as_array(), synth.total(&t));
    }
    let sym = check_symmetry_conjugation(&synth.kernel(), 1000, 3);
    println!("symmetry: worst {:.3e} passed {}", sym.worst_ratio, sym.passed);
    for (label, k) in [("first", synth.first_kernel()), ("second", synth.second_kernel())] {
        if let Some(h) = check_homogeneity(&k, 1000, 4) {
            println!("{label} piece, degree {:?}: worst {:.3e}", k.degree(), h.worst_ratio);
        }
    }
    Ok(())
}
