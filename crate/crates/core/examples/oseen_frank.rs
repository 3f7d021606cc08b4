//! Surface waves of a nematic liquid crystal with Oseen-Frank energy, for a few
//! director orientations relative to the boundary. Without saddle-splay the
//! static problem has traction-free gradient solutions and no subsonic root.

use surfwave::variational::{check_rank_one_convexity, scan_and_refine_root, scan_range, VariationalData};

fn main() -> surfwave::Result<()> {
    let (nu, eta) = ([0.0, 0.0, 1.0], [1.0, 0.0, 0.0]);
    for (angle, saddle) in [0.0f64, 0.4, 0.8, 1.2].iter().flat_map(|&a| [(a, 0.0), (a, 0.5)]) {
        let director = [angle.cos(), angle.sin(), 0.0];
        let data = VariationalData::oseen_frank(1.0, 0.6, 1.4, saddle, director);
        let convex = check_rank_one_convexity(&data, 500, 1);
        match scan_range(&data, &nu, &eta).and_then(|r| scan_and_refine_root(&data, &nu, &eta, r, 400)) {
            Ok(scan) => {
                let taus: Vec<String> = scan.roots.iter().map(|r| format!("{:.8}", r.tau)).collect();
                println!("angle {angle:.1} saddle {saddle:+.1}: convex {} roots [{}]", convex.passed, taus.join(", "));
            }
            Err(e) => println!("angle {angle:.1} saddle {saddle:+.1}: convex {} {e}", convex.passed),
        }
    }
    Ok(())
}
