//! Points from pairwise distances, in the smallest dimension that fits.
//!
//! cargo run --example embedding

use nbody_det::analysis::embed;
use nbody_det::random::{float_configuration_of_rank, rng};

fn main() -> nbody_det::Result<()> {
    let mut r = rng(42);
    // Six points on a plane, placed in 5 dimensions.
    let cfg = float_configuration_of_rank(&mut r, 6, 2, 5);
    let d = cfg.distances();
    let e = embed(&d, 1e-10)?;
    println!("ambient dimension {}, affine rank {}, embedded in {}", cfg.d(), cfg.affine_rank(1e-10), e.d);
    println!("eigenvalues: {:?}", e.eigenvalues.iter().map(|v| format!("{v:.3e}")).collect::<Vec<_>>());
    for (i, p) in e.points.points().iter().enumerate() {
        println!("  p{} = {:?}", i + 1, p.iter().map(|v| format!("{v:+.6}")).collect::<Vec<_>>());
    }
    println!("largest relative distance error {:.2e}", e.residual);
    Ok(())
}
