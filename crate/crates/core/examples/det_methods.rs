//! Times the three polynomial determinant algorithms on the symbolic
//! n-body, Cayley-Menger and W matrices.
//!
//! cargo run --release --example det_methods

use std::time::Instant;

use nbody_det::builders::{bordered, cayley_menger, nbody_matrix, w_matrix};
use nbody_det::matrix::Matrix;
use nbody_det::poly::{poly_det, DetMethod, SparsePoly};
use nbody_det::symbolic::{NbodySymbols, TableSymbols};

fn time(label: &str, m: &Matrix<SparsePoly>, methods: &[DetMethod]) {
    let mut reference: Option<SparsePoly> = None;
    for &method in methods {
        let start = Instant::now();
        let det = poly_det(m, method).expect("square");
        let secs = start.elapsed().as_secs_f64();
        let same = reference.get_or_insert_with(|| det.clone()) == &det;
        println!("{label:<28} {:<16} {secs:>9.4} s  {:>6} terms  agrees: {same}", format!("{method:?}"), det.len());
    }
}

fn main() {
    let all = [DetMethod::MinorExpansion, DetMethod::Bareiss, DetMethod::Cofactor];
    let fast = [DetMethod::MinorExpansion, DetMethod::Bareiss];
    for n in 3..=4 {
        let sym = NbodySymbols::new(n);
        let b = nbody_matrix(&sym.alpha, &sym.r).unwrap();
        time(&format!("n-body, n = {n}"), &b, if n == 3 { &all } else { &fast });
        time(&format!("Cayley-Menger, n = {n}"), &cayley_menger(&sym.r), &all);
    }
    for n in 2..=3 {
        let sym = TableSymbols::new(n);
        time(&format!("W_(S,T), n = {n}"), &w_matrix(&sym.s, &sym.t).unwrap(), &all);
        time(&format!("C_S, n = {n}"), &bordered(&sym.s), &all);
    }
    let sym = NbodySymbols::new(5);
    time("Cayley-Menger, n = 5", &cayley_menger(&sym.r), &fast);
}
