use std::fmt;

use super::definiteness::{Definiteness, DefinitenessReport, Verdict};
use crate::builders::reduced_edm;
use crate::domain::{DistanceVector, PointConfiguration};
use crate::error::{Error, Result};

/// Position of a distance vector relative to the Euclidean distance cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeClass {
    /// Realized by a nonsingular configuration.
    Interior,
    /// Realized only by singular configurations.
    Boundary,
    /// Not realizable in any dimension.
    Outside,
}

impl fmt::Display for ConeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConeClass::Interior => "interior",
            ConeClass::Boundary => "boundary",
            ConeClass::Outside => "outside",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MembershipReport {
    pub class: ConeClass,
    /// Definiteness of the reduced matrix based at the last point; its
    /// minimal eigenvalue is the certificate for `Outside`.
    pub report: DefinitenessReport,
}

/// Classifies `r` by the definiteness of `M_n` (base point = last point).
pub fn cone_membership<T: Definiteness>(r: &DistanceVector<T>, tol: f64) -> Result<MembershipReport> {
    if let Some(k) = r.squared_entries().iter().position(|v| *v < T::zero()) {
        return Err(Error::NegativeDistance {
            pair: r.pairs().unrank(k)?.to_string(),
            value: format!("{:?}", r.squared_entries()[k]),
        });
    }
    if r.n() == 0 {
        return Err(Error::DimensionMismatch("empty configuration".into()));
    }
    let m = reduced_edm(r, r.n() - 1)?;
    let report = T::definiteness(&m, tol)?;
    let class = match report.verdict {
        Verdict::PositiveDefinite => ConeClass::Interior,
        Verdict::PositiveSemidefinite => ConeClass::Boundary,
        Verdict::Indefinite => ConeClass::Outside,
    };
    Ok(MembershipReport { class, report })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingResult {
    /// Reconstructed points; the last one sits at the origin and the axes
    /// follow the eigenvectors in descending eigenvalue order.
    pub points: PointConfiguration<f64>,
    /// Minimal embedding dimension (rank of the reduced matrix).
    pub d: usize,
    /// Eigenvalues of the reduced matrix, descending.
    pub eigenvalues: Vec<f64>,
    /// Largest relative error between input and reconstructed distances.
    pub residual: f64,
}

/// Reconstructs points from distances by spectral factorization of `M_n`.
///
/// With `M_n = Q D Qᵀ`, the matrix `A = √(D/2) Qᵀ` satisfies `M_n = 2AᵀA`;
/// column `i` of `A` is `p_i − p_n`. Eigenvalues below the threshold are
/// dropped, so the dimension equals the numerical rank.
pub fn embed(r: &DistanceVector<f64>, tol: f64) -> Result<EmbeddingResult> {
    let membership = cone_membership(r, tol)?;
    if membership.class == ConeClass::Outside {
        return Err(Error::OutsideCone {
            min_eigenvalue: membership.report.min_eigenvalue,
        });
    }
    let n = r.n();
    let threshold = membership.report.tolerance;
    let m = reduced_edm(r, n - 1)?;
    let (eigenvalues, vectors) = if n > 1 {
        let eig = nalgebra::SymmetricEigen::new(m.to_nalgebra());
        let mut order: Vec<usize> = (0..n - 1).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
        let values: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let vectors: Vec<Vec<f64>> = order
            .iter()
            .map(|&k| eig.eigenvectors.column(k).iter().copied().collect())
            .collect();
        (values, vectors)
    } else {
        (Vec::new(), Vec::new())
    };
    let d = eigenvalues.iter().filter(|&&v| v > threshold).count();
    let scales: Vec<f64> = eigenvalues[..d].iter().map(|v| (v / 2.0).sqrt()).collect();
    let mut points: Vec<Vec<f64>> = (0..n - 1)
        .map(|i| (0..d).map(|a| scales[a] * vectors[a][i]).collect())
        .collect();
    points.push(vec![0.0; d]);
    let points = PointConfiguration::with_dimension(d, points)?;
    let residual = distance_residual(r, &points.distances());
    Ok(EmbeddingResult {
        points,
        d,
        eigenvalues,
        residual,
    })
}

/// Largest `|r̂_ij − r_ij| / r_ij`, with the denominator floored at
/// `1e-12 × max r` so coincident points do not divide by zero.
fn distance_residual(target: &DistanceVector<f64>, got: &DistanceVector<f64>) -> f64 {
    let max = target
        .squared_entries()
        .iter()
        .fold(0.0f64, |m, v| m.max(v.sqrt()));
    let floor = (1e-12 * max).max(f64::MIN_POSITIVE);
    target
        .squared_entries()
        .iter()
        .zip(got.squared_entries())
        .map(|(a, b)| {
            let (a, b) = (a.max(0.0).sqrt(), b.max(0.0).sqrt());
            (a - b).abs() / a.max(floor)
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::DEFAULT_TOL;
    use crate::scalar::{int, Rational};

    fn rational(r: [i64; 3]) -> DistanceVector<Rational> {
        DistanceVector::from_distances(3, r.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn triangle_classes() {
        assert_eq!(cone_membership(&rational([1, 1, 1]), 0.0).unwrap().class, ConeClass::Interior);
        assert_eq!(cone_membership(&rational([1, 1, 2]), 0.0).unwrap().class, ConeClass::Boundary);
        assert_eq!(cone_membership(&rational([1, 1, 3]), 0.0).unwrap().class, ConeClass::Outside);
        // With r_12 = 3: M_3 = [[2, -7], [-7, 2]], eigenvalues -5 and 9.
        let out = cone_membership(&rational([3, 1, 1]), 0.0).unwrap();
        assert_eq!(out.class, ConeClass::Outside);
        assert!((out.report.min_eigenvalue + 5.0).abs() < 1e-12);
        let f = rational([1, 1, 3]).to_f64();
        assert_eq!(cone_membership(&f, DEFAULT_TOL).unwrap().class, ConeClass::Outside);
    }

    #[test]
    fn embeds_unit_triangle_in_the_plane() {
        let r = DistanceVector::from_squared(3, vec![1.0; 3]).unwrap();
        let e = embed(&r, DEFAULT_TOL).unwrap();
        assert_eq!(e.d, 2);
        assert!(e.residual < 1e-12);
        assert_eq!(e.points.point(2), &[0.0, 0.0]);
    }

    #[test]
    fn degenerate_triangle_is_a_line() {
        let r = DistanceVector::from_distances(3, vec![1.0, 1.0, 2.0]).unwrap();
        let e = embed(&r, DEFAULT_TOL).unwrap();
        assert_eq!(e.d, 1);
        assert!(e.residual < 1e-12);
    }

    #[test]
    fn refuses_outside() {
        let r = DistanceVector::from_distances(3, vec![1.0, 1.0, 3.0]).unwrap();
        match embed(&r, DEFAULT_TOL) {
            Err(Error::OutsideCone { min_eigenvalue }) => assert!(min_eigenvalue < 0.0),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn negative_entries_rejected() {
        let r = DistanceVector::from_squared_unchecked(2, vec![-1.0]).unwrap();
        assert!(matches!(cone_membership(&r, DEFAULT_TOL), Err(Error::NegativeDistance { .. })));
    }

    #[test]
    fn one_and_two_points() {
        let one = DistanceVector::<f64>::from_squared(1, vec![]).unwrap();
        let e = embed(&one, DEFAULT_TOL).unwrap();
        assert_eq!((e.d, e.points.n()), (0, 1));
        let two = DistanceVector::from_distances(2, vec![3.0]).unwrap();
        let e = embed(&two, DEFAULT_TOL).unwrap();
        assert_eq!(e.d, 1);
        assert!((e.points.point(0)[0].abs() - 3.0).abs() < 1e-12);
    }
}
