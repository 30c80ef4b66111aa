//! The reduced matrices M_k for each base point, and their common determinant.
//!
//! cargo run --example reduced_matrices

use nbody_det::builders::{cayley_menger, reduced_edm};
use nbody_det::linalg::det_bareiss;
use nbody_det::random::{rational_configuration, rng};

fn main() -> nbody_det::Result<()> {
    let cfg = rational_configuration(&mut rng(5), 4, 3);
    let r = cfg.distances();
    let delta = det_bareiss(&cayley_menger(&r))?;
    println!("delta = {delta}");
    for k in 0..r.n() {
        let m = reduced_edm(&r, k)?;
        println!("k = {}: det M_k = {}", k + 1, det_bareiss(&m)?);
    }
    let m = reduced_edm(&r, 0)?;
    println!("\nM_1 =");
    for i in 0..m.rows() {
        println!("  {:?}", m.row(i).iter().map(|v| v.to_string()).collect::<Vec<_>>());
    }
    Ok(())
}
