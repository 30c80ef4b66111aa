//! Symbolic three-body determinant and its factorization.
//!
//! cargo run --example three_body

use nbody_det::builders::nbody_matrix;
use nbody_det::symbolic::{factor_nbody, NbodySymbols, SymbolicLimits};

fn main() -> nbody_det::Result<()> {
    let sym = NbodySymbols::new(3);
    let b = nbody_matrix(&sym.alpha, &sym.r)?;
    println!("B (rows and columns 1,2  1,3  2,3):");
    for i in 0..b.rows() {
        let row: Vec<String> = b.row(i).iter().map(|p| p.to_string()).collect();
        println!("  [{}]", row.join(" | "));
    }

    let cert = factor_nbody(3, &SymbolicLimits::default())?;
    println!("\ndet B has {} terms", cert.lhs.len());
    println!("e_2(alpha) = {}", cert.factors[0]);
    println!("delta      = {}", cert.factors[1]);
    println!("sigma      = {}", cert.quotient);
    println!("re-multiplied: {}", cert.recheck()?);
    Ok(())
}
