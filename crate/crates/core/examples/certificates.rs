//! Factorization certificates for the n-body and W determinants.
//!
//! cargo run --release --example certificates [-- --long-running]

use std::time::Instant;

use nbody_det::symbolic::{
    factor_nbody, factor_nbody_equal_masses, factor_w, factor_w_diagonal_t, FactorizationCertificate, SymbolicLimits,
};

fn show(cert: &FactorizationCertificate, started: Instant) {
    println!(
        "{:<20} n = {}: lhs {:>6} terms, factors {:?} terms, quotient {:>5} terms, verified {} ({:.2} s)",
        cert.kind.to_string(),
        cert.n,
        cert.lhs.len(),
        cert.factors.iter().map(|f| f.len()).collect::<Vec<_>>(),
        cert.quotient.len(),
        cert.verified,
        started.elapsed().as_secs_f64()
    );
}

fn main() -> nbody_det::Result<()> {
    let long = std::env::args().any(|a| a == "--long-running");
    let limits = SymbolicLimits::from_env(long)?;
    for n in 2..=4 {
        let t = Instant::now();
        show(&factor_nbody(n, &limits)?, t);
    }
    for n in 2..=limits.nbody {
        let t = Instant::now();
        show(&factor_nbody_equal_masses(n, &limits)?, t);
    }
    for n in 2..=3 {
        let t = Instant::now();
        show(&factor_w(n, &limits)?, t);
    }
    let t = Instant::now();
    show(&factor_w_diagonal_t(4, &limits)?, t);

    match factor_nbody(limits.nbody + 1, &limits) {
        Err(e) => println!("\nn = {}: {e}", limits.nbody + 1),
        Ok(_) => println!("\nn = {} unexpectedly ran", limits.nbody + 1),
    }
    Ok(())
}
