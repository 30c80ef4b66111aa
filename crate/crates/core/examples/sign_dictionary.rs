//! W_(R,A) against the n-body matrix, symbolically for small n.
//!
//! cargo run --release --example sign_dictionary

use nbody_det::random::{positive_masses, rational_configuration, rng};
use nbody_det::symbolic::{sign_dictionary, w_equals_minus_b, SymbolicLimits};

fn main() -> nbody_det::Result<()> {
    let limits = SymbolicLimits::default();
    for n in 2..=4 {
        let report = sign_dictionary(n, &limits)?;
        println!(
            "n = {n}: (-1)^C(n,2) = {:+}, det W_(R,A) {} terms, sigma {} terms, Z_(R,A) via {:?}",
            report.sign,
            report.det_w.len(),
            report.sigma.len(),
            report.z_route
        );
    }
    let mut r = rng(13);
    for n in 5..=6 {
        let alpha = positive_masses(&mut r, n);
        let dist = rational_configuration(&mut r, n, n - 1).distances();
        println!("n = {n}: W_(R,A) = -B at a random rational point: {}", w_equals_minus_b(&alpha, &dist)?);
    }
    Ok(())
}
