//! A vector killed by W_(S,T) for every T, built from a null vector of a
//! singular bordered table C_S.
//!
//! cargo run --example kernel_witness

use nbody_det::builders::w_matrix;
use nbody_det::matrix::GenericEntryTable;
use nbody_det::random::{rational_table, rng};
use nbody_det::scalar::int;
use nbody_det::symbolic::kernel_witness;

fn main() -> nbody_det::Result<()> {
    // Squared distances of the collinear points 0, 1, 2.
    let s = GenericEntryTable::from_fn(3, |i, j| {
        let d = i as i64 - j as i64;
        int(d * d)
    });
    let w = kernel_witness(&s)?;
    println!("x = {:?}, v = {}", w.x.iter().map(|q| q.to_string()).collect::<Vec<_>>(), w.v);
    println!("z = {:?}", w.z.iter().map(|q| q.to_string()).collect::<Vec<_>>());

    let mut r = rng(3);
    for trial in 1..=3 {
        let t = rational_table(&mut r, 3);
        let wz = w_matrix(&s, &t)?.apply(&w.z)?;
        println!("random T #{trial}: W z = {:?}", wz.iter().map(|q| q.to_string()).collect::<Vec<_>>());
    }

    let regular = GenericEntryTable::from_fn(3, |i, j| if i == j { int(0) } else { int(1) });
    match kernel_witness(&regular) {
        Err(e) => println!("\nequilateral table: {e}"),
        Ok(_) => println!("\nequilateral table: unexpected witness"),
    }
    Ok(())
}
