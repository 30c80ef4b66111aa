use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, RealField, Ring};

/// Default relative zero threshold for eigenvalues and singular values.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    PositiveDefinite,
    PositiveSemidefinite,
    Indefinite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PositiveDefinite => "positive-definite",
            Verdict::PositiveSemidefinite => "positive-semidefinite",
            Verdict::Indefinite => "indefinite",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DefinitenessReport {
    pub verdict: Verdict,
    /// Smallest eigenvalue (a double-precision estimate for exact input).
    pub min_eigenvalue: f64,
    pub rank: usize,
    /// Absolute eigenvalue threshold actually applied (0 for exact input).
    pub tolerance: f64,
}

/// Symmetric definiteness classification.
///
/// For doubles the verdict comes from a symmetric eigendecomposition with
/// eigenvalues below `tol × max(max|λ|, 1)` treated as zero. For rationals it
/// is exact: symmetric Gaussian elimination with diagonal pivots, which
/// decides semidefiniteness without forming irrational eigenvalues.
pub trait Definiteness: RealField {
    fn definiteness(m: &Matrix<Self>, tol: f64) -> Result<DefinitenessReport>;
}

fn symmetric_eigenvalues(m: &Matrix<f64>) -> Vec<f64> {
    if m.rows() == 0 {
        return Vec::new();
    }
    nalgebra::SymmetricEigen::new(m.to_nalgebra())
        .eigenvalues
        .iter()
        .copied()
        .collect()
}

impl Definiteness for f64 {
    fn definiteness(m: &Matrix<f64>, tol: f64) -> Result<DefinitenessReport> {
        let n = m.ensure_square()?;
        let scale = m.max_abs().max(1.0);
        for i in 0..n {
            for j in i + 1..n {
                let gap = (m.get(i, j) - m.get(j, i)).abs();
                if gap > tol * scale {
                    return Err(Error::NotSymmetric { i, j, gap });
                }
            }
        }
        let eig = symmetric_eigenvalues(m);
        let max_abs = eig.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let threshold = tol * max_abs.max(1.0);
        let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
        let rank = eig.iter().filter(|v| v.abs() > threshold).count();
        let verdict = if n > 0 && min < -threshold {
            Verdict::Indefinite
        } else if rank == n {
            Verdict::PositiveDefinite
        } else {
            Verdict::PositiveSemidefinite
        };
        Ok(DefinitenessReport {
            verdict,
            min_eigenvalue: if n == 0 { 0.0 } else { min },
            rank,
            tolerance: threshold,
        })
    }
}

impl Definiteness for Rational {
    fn definiteness(m: &Matrix<Rational>, _tol: f64) -> Result<DefinitenessReport> {
        let n = m.ensure_square()?;
        for i in 0..n {
            for j in i + 1..n {
                if m.get(i, j) != m.get(j, i) {
                    let gap = m.get(i, j).minus(m.get(j, i)).abs().to_f64();
                    return Err(Error::NotSymmetric { i, j, gap });
                }
            }
        }
        let (semidefinite, rank) = exact_semidefinite_rank(m);
        let verdict = match (semidefinite, rank == n) {
            (false, _) => Verdict::Indefinite,
            (true, true) => Verdict::PositiveDefinite,
            (true, false) => Verdict::PositiveSemidefinite,
        };
        let eig = symmetric_eigenvalues(&m.map(RealField::to_f64));
        let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
        Ok(DefinitenessReport {
            verdict,
            min_eigenvalue: if n == 0 { 0.0 } else { min },
            rank,
            tolerance: 0.0,
        })
    }
}

/// Returns `(is_psd, rank)`; the rank is only meaningful when `is_psd`.
///
/// Each step picks a positive diagonal pivot and replaces the remainder by
/// its Schur complement, which preserves both semidefiniteness and rank. A
/// negative diagonal entry, or a zero diagonal beside a nonzero off-diagonal
/// entry, exhibits a negative quadratic form value.
fn exact_semidefinite_rank(m: &Matrix<Rational>) -> (bool, usize) {
    let mut a = m.row_vecs();
    let mut active: Vec<usize> = (0..m.rows()).collect();
    let mut rank = 0;
    while !active.is_empty() {
        if active.iter().any(|&i| a[i][i] < <Rational as Zero>::zero()) {
            return (false, rank);
        }
        let pivot = active
            .iter()
            .copied()
            .filter(|&i| !Ring::is_zero(&a[i][i]))
            .max_by(|&x, &y| a[x][x].cmp(&a[y][y]));
        let Some(p) = pivot else {
            let all_zero = active
                .iter()
                .all(|&i| active.iter().all(|&j| Ring::is_zero(&a[i][j])));
            return (all_zero, rank);
        };
        active.retain(|&i| i != p);
        let inv = <Rational as One>::one() / &a[p][p];
        for &i in &active {
            if Ring::is_zero(&a[i][p]) {
                continue;
            }
            let f = &a[i][p] * &inv;
            for &j in &active {
                let delta = &f * &a[p][j];
                a[i][j] -= delta;
            }
        }
        rank += 1;
    }
    (true, rank)
}
