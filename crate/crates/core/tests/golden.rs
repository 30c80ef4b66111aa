//! Recomputed quotients must match the stored text byte for byte.

use std::fs;
use std::path::PathBuf;

use nbody_det::symbolic::{
    factor_nbody, factor_nbody_equal_masses, factor_w, factor_w_diagonal_t, FactorizationCertificate, SymbolicLimits,
};

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden/v1").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(cert: FactorizationCertificate, name: &str) {
    assert!(cert.verified);
    assert_eq!(format!("{}\n", cert.quotient), golden(name), "{name}");
}

#[test]
fn sigma_three() {
    assert_golden(factor_nbody(3, &SymbolicLimits::default()).unwrap(), "sigma_3.txt");
}

#[test]
fn sigma_four() {
    assert_golden(factor_nbody(4, &SymbolicLimits::default()).unwrap(), "sigma_4.txt");
}

#[test]
fn sigma_equal_masses() {
    assert_golden(
        factor_nbody_equal_masses(4, &SymbolicLimits::default()).unwrap(),
        "sigma_4_equal_masses.txt",
    );
    assert_golden(
        factor_nbody_equal_masses(5, &SymbolicLimits::long_running()).unwrap(),
        "sigma_5_equal_masses.txt",
    );
}

#[test]
fn z_two_and_three() {
    assert_golden(factor_w(2, &SymbolicLimits::default()).unwrap(), "z_2.txt");
    assert_golden(factor_w(3, &SymbolicLimits::default()).unwrap(), "z_3.txt");
}

#[test]
fn z_four_diagonal_t() {
    assert_golden(
        factor_w_diagonal_t(4, &SymbolicLimits::default()).unwrap(),
        "z_4_diagonal_t.txt",
    );
}
