use super::definiteness::Definiteness;
use super::determinant::Determinant;
use super::embedding::{cone_membership, ConeClass};
use crate::builders::cayley_menger;
use crate::domain::{DistanceVector, PointConfiguration};
use crate::error::{Error, Result};
use crate::scalar::{RealField, Ring};

/// `(−1)ⁿ 2ⁿ⁻¹ ((n−1)!)²`, the ratio between the Cayley–Menger determinant
/// and the squared volume of the simplex on `n` points.
pub fn simplex_volume_factor<T: Ring>(n: usize) -> T {
    let mut f = T::one();
    for k in 1..n {
        f = f.scaled((k * k) as i64);
    }
    for _ in 1..n {
        f = f.scaled(2);
    }
    if n % 2 == 1 {
        f.negated()
    } else {
        f
    }
}

/// Squared volume of the simplex spanned by realizable distances, computed
/// from the Cayley–Menger determinant.
pub fn menger_volume_sq<T: Definiteness + Determinant>(r: &DistanceVector<T>, tol: f64) -> Result<T> {
    let membership = cone_membership(r, tol)?;
    if membership.class == ConeClass::Outside {
        return Err(Error::OutsideCone {
            min_eigenvalue: membership.report.min_eigenvalue,
        });
    }
    let delta = T::determinant(&cayley_menger(r))?;
    let factor: T = simplex_volume_factor(r.n());
    delta
        .exact_quotient(&factor)
        .ok_or_else(|| Error::IdentityFailed("zero volume factor".into()))
}

/// Squared volume from coordinates: `det(AᵀA) / ((n−1)!)²` with `A` the
/// difference matrix. Independent of any distance formula.
pub fn gram_volume_sq<T: RealField + Determinant>(cfg: &PointConfiguration<T>) -> Result<T> {
    let n = cfg.n();
    if n == 0 {
        return Err(Error::DimensionMismatch("empty configuration".into()));
    }
    let a = cfg.difference_matrix(n - 1);
    let gram = a.transpose().product(&a)?;
    let det = T::determinant(&gram)?;
    let mut fact = T::one();
    for k in 1..n {
        fact = fact.scaled(k as i64);
    }
    det.exact_quotient(&fact.times(&fact))
        .ok_or_else(|| Error::IdentityFailed("zero factorial".into()))
}
