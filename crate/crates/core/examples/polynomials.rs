//! Sparse polynomial arithmetic over the rationals.
//!
//! cargo run --example polynomials

use std::sync::Arc;

use nbody_det::poly::{exact_divide, parse_poly, VarTable};
use nbody_det::scalar::{int, rat};

fn main() -> nbody_det::Result<()> {
    let t = Arc::new(VarTable::new(["x", "y", "z"])?);
    let p = parse_poly("x^2 - y^2", &t)?;
    let q = parse_poly("x - y", &t)?;
    println!("({p}) / ({q}) = {}", exact_divide(&p, &q)?);

    let a = parse_poly("1/2*x*y + 3*z - 1", &t)?;
    let b = parse_poly("x + y + z", &t)?;
    let ab = &a * &b;
    println!("\na*b = {ab}");
    println!("degree {:?}, {} terms, content {}", ab.degree(), ab.len(), ab.content());
    println!("a*b / b == a: {}", exact_divide(&ab, &b)? == a);

    match exact_divide(&parse_poly("x^2", &t)?, &parse_poly("y", &t)?) {
        Err(e) => println!("\nx^2 / y: {e}"),
        Ok(q) => println!("\nx^2 / y = {q}"),
    }

    let at = [int(2), rat(-1, 3), int(5)];
    println!("\na*b at (2, -1/3, 5) = {}", ab.evaluate(&at)?);
    let images = [parse_poly("y + z", &t)?, parse_poly("y", &t)?, parse_poly("z", &t)?];
    println!("a with x -> y + z: {}", a.substitute(&images)?);
    Ok(())
}
