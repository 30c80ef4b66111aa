//! Seeded samplers for configurations, masses, tables and vectors.
//!
//! Exact samplers draw small fractions `p/q` with `|p| ≤ 9` and
//! `1 ≤ q ≤ 4`, so exact determinants stay cheap. All samplers take the
//! caller's generator; [`rng`] builds the deterministic one used everywhere.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::domain::{MassParams, PointConfiguration};
use crate::matrix::{GenericEntryTable, Matrix};
use crate::scalar::{rat, Rational, Ring};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut SampleRng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn positive_rational(rng: &mut SampleRng) -> Rational {
    rat(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

pub fn rational_vector(rng: &mut SampleRng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small_rational(rng)).collect()
}

/// Random vector with zero sum (the last entry balances the others).
pub fn rational_hyperplane_vector(rng: &mut SampleRng, n: usize) -> Vec<Rational> {
    let mut x = rational_vector(rng, n.saturating_sub(1));
    let total = Rational::sum(x.iter());
    x.push(total.negated());
    x
}

pub fn float_hyperplane_vector(rng: &mut SampleRng, n: usize) -> Vec<f64> {
    let mut x: Vec<f64> = (0..n.saturating_sub(1)).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let total: f64 = x.iter().sum();
    x.push(-total);
    x
}

pub fn positive_masses(rng: &mut SampleRng, n: usize) -> MassParams<Rational> {
    MassParams::new((0..n).map(|_| positive_rational(rng)).collect())
}

pub fn rational_table(rng: &mut SampleRng, n: usize) -> GenericEntryTable<Rational> {
    GenericEntryTable::from_fn(n, |_, _| small_rational(rng))
}

pub fn rational_configuration(rng: &mut SampleRng, n: usize, d: usize) -> PointConfiguration<Rational> {
    PointConfiguration::with_dimension(d, (0..n).map(|_| rational_vector(rng, d)).collect())
        .expect("rows share the dimension")
}

/// `n` points in `n − 1` dimensions whose affine hull is full, checked exactly.
pub fn nonsingular_rational_configuration(rng: &mut SampleRng, n: usize) -> PointConfiguration<Rational> {
    loop {
        let cfg = rational_configuration(rng, n, n.saturating_sub(1));
        if !cfg.is_singular(0.0) {
            return cfg;
        }
    }
}

/// `n ≥ 2` points in `n − 1` dimensions lying exactly in an affine subspace
/// of dimension `n − 2`.
pub fn singular_rational_configuration(rng: &mut SampleRng, n: usize) -> PointConfiguration<Rational> {
    assert!(n >= 2, "singular configurations need at least 2 points");
    let d = n - 1;
    let mut points: Vec<Vec<Rational>> = (0..n - 1).map(|_| rational_vector(rng, d)).collect();
    // Weights summing to one keep the last point in the affine hull of the
    // other n − 1 points, which has dimension at most n − 2.
    let mut w = rational_vector(rng, n - 2);
    let rest = <Rational as Ring>::one().minus(&Rational::sum(w.iter()));
    w.push(rest);
    let p = (0..d)
        .map(|c| w.iter().zip(&points).fold(<Rational as Ring>::zero(), |acc, (wi, pi)| acc.plus(&wi.times(&pi[c]))))
        .collect();
    points.push(p);
    PointConfiguration::with_dimension(d, points).expect("rows share the dimension")
}

/// Uniform points in `[−1, 1]^d`.
pub fn float_configuration(rng: &mut SampleRng, n: usize, d: usize) -> PointConfiguration<f64> {
    PointConfiguration::with_dimension(
        d,
        (0..n).map(|_| (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect(),
    )
    .expect("rows share the dimension")
}

/// `n` points spanning an affine subspace of dimension `k`, placed in
/// `d ≥ k` dimensions by a random orthogonal map and translation.
pub fn float_configuration_of_rank(rng: &mut SampleRng, n: usize, k: usize, d: usize) -> PointConfiguration<f64> {
    assert!(k <= d, "rank exceeds ambient dimension");
    let flat = float_configuration(rng, n, k);
    let padded: Vec<Vec<f64>> = flat
        .points()
        .iter()
        .map(|p| p.iter().copied().chain(std::iter::repeat(0.0)).take(d).collect())
        .collect();
    let padded = PointConfiguration::with_dimension(d, padded).expect("rows share the dimension");
    let q = random_orthogonal(rng, d);
    let b: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
    padded.transformed(&q, &b).expect("square map of matching size")
}

/// Orthogonal `d × d` matrix from the QR factorization of a Gaussian-like matrix.
pub fn random_orthogonal(rng: &mut SampleRng, d: usize) -> Matrix<f64> {
    if d == 0 {
        return Matrix::zeros(0, 0);
    }
    let g = DMatrix::from_fn(d, d, |_, _| rng.gen_range(-1.0..1.0));
    let q = g.qr().q();
    Matrix::from_fn(d, d, |i, j| q[(i, j)])
}

/// A uniformly random permutation of `0..n`.
pub fn permutation(rng: &mut SampleRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructed_singularity_is_exact() {
        let mut r = rng(3);
        for n in 2..=6 {
            let cfg = singular_rational_configuration(&mut r, n);
            assert!(cfg.is_singular(0.0));
            assert_eq!(cfg.d(), n - 1);
            assert!(!nonsingular_rational_configuration(&mut r, n).is_singular(0.0));
        }
    }

    #[test]
    fn hyperplane_vectors_sum_to_zero() {
        let mut r = rng(5);
        let x = rational_hyperplane_vector(&mut r, 5);
        assert!(Ring::is_zero(&Rational::sum(x.iter())));
        assert!(float_hyperplane_vector(&mut r, 4).iter().sum::<f64>().abs() < 1e-12);
    }

    #[test]
    fn ranked_float_configurations() {
        let mut r = rng(9);
        let cfg = float_configuration_of_rank(&mut r, 6, 2, 4);
        assert_eq!(cfg.affine_rank(1e-10), 2);
        let q = random_orthogonal(&mut r, 3);
        let qtq = q.transpose().product(&q).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((qtq.get(i, j) - e).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn same_seed_same_samples() {
        let a = rational_vector(&mut rng(11), 8);
        let b = rational_vector(&mut rng(11), 8);
        assert_eq!(a, b);
    }
}
