//! Quadratic, biquadratic and quartic forms on the hyperplane sum(x) = 0.
//!
//! cargo run --example forms

use nbody_det::analysis::{
    biquadratic_qw, configuration_form, mass_form, quadratic_form_q, quadratic_form_qk, quartic_qb, reduced_form_split,
};
use nbody_det::builders::nbody_matrix;
use nbody_det::random::{
    positive_masses, rational_configuration, rational_hyperplane_vector, rational_table, rational_vector, rng,
};
use nbody_det::scalar::int;

fn main() -> nbody_det::Result<()> {
    let mut r = rng(8);
    let n = 4;
    let cfg = rational_configuration(&mut r, n, 3);
    let dist = cfg.distances();
    let alpha = positive_masses(&mut r, n);
    let x = rational_hyperplane_vector(&mut r, n);
    let y = rational_hyperplane_vector(&mut r, n);

    println!("x = {:?}", x.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    println!("x^T D x = {}", quadratic_form_q(&dist, &x)?);
    for k in 0..n {
        println!("  q_{}(x) = {}", k + 1, quadratic_form_qk(&dist, k, &x)?);
    }

    let (s, t) = (rational_table(&mut r, n), rational_table(&mut r, n));
    println!("\nQ_W(x, y)       = {}", biquadratic_qw(&s, &t, &x, &y)?);
    println!("(xSy)(xTy)      = {}", s.bilinear(&x, &y)? * t.bilinear(&x, &y)?);

    println!("\nQ_B(x)          = {}", quartic_qb(&alpha, &dist, &x)?);
    println!("2 a(x) p(x)     = {}", int(2) * mass_form(&alpha, &x)? * configuration_form(&cfg, &x)?);

    let z = rational_vector(&mut r, n * (n - 1) / 2);
    println!("\nz^T B z         = {}", nbody_matrix(&alpha, &dist)?.bilinear(&z, &z)?);
    println!("sum of M_k parts = {}", reduced_form_split(&alpha, &dist, &z)?);
    Ok(())
}
