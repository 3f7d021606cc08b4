//! Runs the sampled certificates on the built-in kernels and prints a table.

use surfwave::cli::certify_kernel;
use surfwave::kernel::KernelSpec;

fn main() -> surfwave::Result<()> {
    let specs = [
        KernelSpec::new("hiz", vec![]),
        KernelSpec::new("austria", vec![2.0, 0.0, -2.0, 0.0]),
        KernelSpec::new("austria", vec![1.0, 0.5, 0.0, 0.0]),
        KernelSpec::new("phase-boundary", vec![0.3, -0.1]),
        KernelSpec::new("hiz-q", vec![]),
    ];
    for spec in &specs {
        println!("{} {:?}", spec.name, spec.parameters);
        for c in certify_kernel(spec, 4000, 7)? {
            println!(
                "  {:<12} {:<5} worst {:.3e}  constant {:.3e}",
                format!("{:?}", c.property),
                if c.passed { "ok" } else { "FAIL" },
                c.worst_ratio,
                c.constant
            );
        }
    }
    Ok(())
}
