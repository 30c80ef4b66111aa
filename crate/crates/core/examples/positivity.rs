//! The n-body matrix on nonsingular and nearly singular configurations:
//! its spectrum and the signs of the determinant's factors.
//!
//! cargo run --example positivity

use nalgebra::SymmetricEigen;
use nbody_det::builders::{cayley_menger, nbody_matrix};
use nbody_det::domain::{MassParams, PointConfiguration};
use nbody_det::linalg::det_bareiss;
use nbody_det::random::{nonsingular_rational_configuration, positive_masses, rng};
use nbody_det::scalar::{rat, Rational, RealField};

fn main() -> nbody_det::Result<()> {
    let mut r = rng(11);
    for n in 2..=5 {
        let cfg = nonsingular_rational_configuration(&mut r, n);
        let alpha = positive_masses(&mut r, n);
        let dist = cfg.distances();
        let b = nbody_matrix(&alpha, &dist)?;
        let det = det_bareiss(&b)?;
        let e = alpha.elementary_symmetric(n - 1)?;
        let delta = det_bareiss(&cayley_menger(&dist))?;
        let sigma = &det / (&e * &delta);
        let eig = SymmetricEigen::new(b.map(RealField::to_f64).to_nalgebra()).eigenvalues;
        println!(
            "n = {n}: min eigenvalue {:.3e}, Delta {:+.3e}, e {:+.3e}, delta {:+.3e}, sigma {:+.3e}",
            eig.min(),
            det.to_f64(),
            e.to_f64(),
            delta.to_f64(),
            sigma.to_f64()
        );
    }

    println!("\nthird point approaching the line through the first two:");
    let alpha = MassParams::new(vec![Rational::from_integer(1.into()); 3]);
    for k in 0..6 {
        let h = rat(1, 10i64.pow(k));
        let cfg = PointConfiguration::new(vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 1), rat(0, 1)], vec![rat(1, 2), h.clone()]])?;
        let det = det_bareiss(&nbody_matrix(&alpha, &cfg.distances())?)?;
        println!("  height {:>8}: Delta = {:.3e}", h.to_string(), det.to_f64());
    }
    Ok(())
}
