//! Distances, point configurations and mass parameters.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::pairs::{PairIndex, PairSpace};
use crate::scalar::{Field, RealField, Ring};

/// Interpoint distances of an `n`-point configuration, one entry per pair in
/// [`PairSpace`] order.
///
/// Entries are stored squared: every matrix in this crate is polynomial in
/// `r_ij²`, and squaring rational coordinates keeps exact data exact.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceVector<T> {
    n: usize,
    squared: Vec<T>,
}

impl<T: Ring> DistanceVector<T> {
    /// Squared entries with no sign check, for symbolic or pre-validated data.
    pub fn from_squared_unchecked(n: usize, squared: Vec<T>) -> Result<Self> {
        let expected = PairSpace::new(n).len();
        if squared.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "{n} points need {expected} pair entries, got {}",
                squared.len()
            )));
        }
        Ok(Self { n, squared })
    }

    /// Builds the vector from a function of the (0-based) pair.
    pub fn from_pair_fn(n: usize, mut f: impl FnMut(PairIndex) -> T) -> Self {
        let squared = PairSpace::new(n).iter().map(&mut f).collect();
        Self { n, squared }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> PairSpace {
        PairSpace::new(self.n)
    }

    /// `r_ij²` for 0-based indices in either order; zero on the diagonal.
    pub fn squared(&self, i: usize, j: usize) -> T {
        if i == j {
            return T::zero();
        }
        let k = self
            .pairs()
            .rank_of(i, j)
            .expect("point index out of range for this distance vector");
        self.squared[k].clone()
    }

    pub fn squared_pair(&self, pair: PairIndex) -> &T {
        let k = self.pairs().rank(pair).expect("pair outside this distance vector");
        &self.squared[k]
    }

    /// All squared entries in pair order.
    pub fn squared_entries(&self) -> &[T] {
        &self.squared
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> DistanceVector<U> {
        DistanceVector {
            n: self.n,
            squared: self.squared.iter().map(f).collect(),
        }
    }
}

impl<T: RealField> DistanceVector<T> {
    /// From unsquared distances `r_ij ≥ 0` in pair order.
    pub fn from_distances(n: usize, distances: Vec<T>) -> Result<Self> {
        check_nonnegative(n, &distances)?;
        Self::from_squared_unchecked(n, distances.iter().map(|r| r.times(r)).collect())
    }

    /// From squared distances `r_ij² ≥ 0` in pair order.
    pub fn from_squared(n: usize, squared: Vec<T>) -> Result<Self> {
        check_nonnegative(n, &squared)?;
        Self::from_squared_unchecked(n, squared)
    }

    /// `r_ij`, when the square root exists in `T`.
    pub fn distance(&self, i: usize, j: usize) -> Option<T> {
        self.squared(i, j).sqrt_checked()
    }

    pub fn to_f64(&self) -> DistanceVector<f64> {
        self.map(RealField::to_f64)
    }

    /// Largest squared entry (zero for `n < 2`).
    pub fn max_squared(&self) -> T {
        self.squared.iter().fold(T::zero(), |m, v| if *v > m { v.clone() } else { m })
    }
}

fn check_nonnegative<T: RealField>(n: usize, values: &[T]) -> Result<()> {
    let space = PairSpace::new(n);
    for (k, v) in values.iter().enumerate() {
        if *v < T::zero() || v.to_f64().is_nan() {
            let pair = space
                .unrank(k)
                .map(|p| p.to_string())
                .unwrap_or_else(|_| format!("#{k}"));
            return Err(Error::NegativeDistance {
                pair,
                value: format!("{v:?}"),
            });
        }
    }
    Ok(())
}

/// `n` points in `d`-dimensional space.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration<T> {
    d: usize,
    points: Vec<Vec<T>>,
}

impl<T: RealField> PointConfiguration<T> {
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let d = points.first().map_or(0, Vec::len);
        if let Some(k) = points.iter().position(|p| p.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "point {} has {} coordinates, expected {d}",
                k + 1,
                points[k].len()
            )));
        }
        Ok(Self { d, points })
    }

    /// Points with an explicit dimension (allows `n = 0`).
    pub fn with_dimension(d: usize, points: Vec<Vec<T>>) -> Result<Self> {
        let mut cfg = Self::new(points)?;
        if cfg.points.is_empty() {
            cfg.d = d;
        } else if cfg.d != d {
            return Err(Error::DimensionMismatch(format!(
                "declared dimension {d}, points have {}",
                cfg.d
            )));
        }
        Ok(cfg)
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[T] {
        &self.points[i]
    }

    /// Squared Euclidean norm of `p_i − p_j`.
    pub fn squared_distance(&self, i: usize, j: usize) -> T {
        let mut acc = T::zero();
        for (a, b) in self.points[i].iter().zip(&self.points[j]) {
            let diff = a.minus(b);
            acc = acc.plus(&diff.times(&diff));
        }
        acc
    }

    pub fn distances(&self) -> DistanceVector<T> {
        DistanceVector::from_pair_fn(self.n(), |p| self.squared_distance(p.i(), p.j()))
    }

    /// The `d × (n−1)` matrix with columns `p_i − p_k`, `i ≠ k` (0-based `k`).
    pub fn difference_matrix(&self, k: usize) -> Matrix<T> {
        let others: Vec<usize> = (0..self.n()).filter(|&i| i != k).collect();
        Matrix::from_fn(self.d, others.len(), |r, c| {
            self.points[others[c]][r].minus(&self.points[k][r])
        })
    }

    /// Dimension of the affine hull of the points.
    pub fn affine_rank(&self, tol: f64) -> usize {
        if self.n() < 2 {
            return 0;
        }
        T::matrix_rank(&self.difference_matrix(self.n() - 1), tol)
    }

    /// True when the points lie in an affine subspace of dimension `≤ n−2`.
    ///
    /// Doubles judge rank against `tol ×` the largest singular value; exact
    /// scalars ignore `tol`.
    pub fn is_singular(&self, tol: f64) -> bool {
        let n = self.n();
        n >= 2 && self.affine_rank(tol) + 2 <= n
    }

    /// Applies `x ↦ Qx + b` to every point.
    pub fn transformed(&self, q: &Matrix<T>, b: &[T]) -> Result<Self> {
        if q.rows() != b.len() || q.cols() != self.d {
            return Err(Error::DimensionMismatch("affine map does not fit the points".into()));
        }
        let points = self
            .points
            .iter()
            .map(|p| {
                let qp = q.apply(p)?;
                Ok(qp.iter().zip(b).map(|(x, y)| x.plus(y)).collect())
            })
            .collect::<Result<Vec<Vec<T>>>>()?;
        Self::with_dimension(b.len(), points)
    }

    /// Same points under the relabeling `new[i] = old[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            d: self.d,
            points: perm.iter().map(|&k| self.points[k].clone()).collect(),
        }
    }

    pub fn to_f64(&self) -> PointConfiguration<f64> {
        PointConfiguration {
            d: self.d,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(RealField::to_f64).collect())
                .collect(),
        }
    }
}

/// Inverse masses `α_i = 1/m_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct MassParams<T> {
    alpha: Vec<T>,
}

impl<T: Ring> MassParams<T> {
    pub fn new(alpha: Vec<T>) -> Self {
        Self { alpha }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[T] {
        &self.alpha
    }

    pub fn get(&self, i: usize) -> &T {
        &self.alpha[i]
    }

    /// `e_k(α)`; see [`elementary_symmetric`].
    pub fn elementary_symmetric(&self, k: usize) -> Result<T> {
        elementary_symmetric(k, self)
    }
}

impl<T: Field> MassParams<T> {
    pub fn from_masses(masses: &[T]) -> Result<Self> {
        let alpha = masses
            .iter()
            .enumerate()
            .map(|(i, m)| m.inverse().ok_or(Error::ZeroMass(i)))
            .collect::<Result<Vec<T>>>()?;
        Ok(Self { alpha })
    }
}

/// Elementary symmetric polynomial `e_k(α_1, …, α_n)`, `0 ≤ k ≤ n`.
///
/// Uses the recurrence `e_k(α_1..α_m) = e_k(α_1..α_{m−1}) + α_m e_{k−1}(α_1..α_{m−1})`,
/// so it is exact in any ring (including polynomials).
pub fn elementary_symmetric<T: Ring>(k: usize, alpha: &MassParams<T>) -> Result<T> {
    let n = alpha.n();
    if k > n {
        return Err(Error::IndexOutOfRange {
            what: "elementary symmetric degree",
            index: k,
            size: n + 1,
        });
    }
    let mut e = vec![T::zero(); k + 1];
    e[0] = T::one();
    for a in alpha.alpha() {
        for j in (1..=k).rev() {
            e[j] = e[j].plus(&a.times(&e[j - 1]));
        }
    }
    Ok(e.swap_remove(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    fn rational_points(rows: &[&[i64]]) -> PointConfiguration<Rational> {
        PointConfiguration::new(rows.iter().map(|p| p.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn collinear_distances() {
        let cfg = rational_points(&[&[0], &[3], &[7]]);
        let r = cfg.distances();
        let dist: Vec<Rational> = (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .map(|(i, j)| r.distance(i, j).unwrap())
            .collect();
        assert_eq!(dist, vec![int(3), int(7), int(4)]);
        assert_eq!(r.squared(2, 0), int(49));
        assert_eq!(r.squared(1, 1), int(0));
    }

    #[test]
    fn unit_triangle_distances() {
        let h = 3f64.sqrt() / 2.0;
        let cfg = PointConfiguration::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, h]]).unwrap();
        for v in cfg.distances().squared_entries() {
            assert!((v - 1.0).abs() < 1e-15);
        }
        assert!(!cfg.is_singular(1e-10));
    }

    #[test]
    fn singularity_verdicts() {
        assert!(rational_points(&[&[0, 0], &[1, 0], &[2, 0]]).is_singular(0.0));
        // Four coplanar points in 3-space: the difference matrix has rank 2.
        let coplanar = rational_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[3, 5, 0]]);
        assert_eq!(coplanar.affine_rank(0.0), 2);
        assert!(coplanar.is_singular(0.0));
        let tetra = rational_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(!tetra.is_singular(0.0));
        // Coincident points are legal and singular.
        assert!(rational_points(&[&[2, 2], &[2, 2]]).is_singular(0.0));
        assert!(!rational_points(&[&[5]]).is_singular(0.0));
    }

    #[test]
    fn rejects_negative_and_ragged_input() {
        assert!(matches!(
            DistanceVector::from_distances(3, vec![1.0, -1.0, 1.0]),
            Err(Error::NegativeDistance { .. })
        ));
        assert!(DistanceVector::from_squared(3, vec![1.0, 1.0]).is_err());
        assert!(PointConfiguration::new(vec![vec![0.0], vec![1.0, 2.0]]).is_err());
    }

    #[test]
    fn masses_invert_exactly() {
        let m = MassParams::from_masses(&[int(2), rat(1, 3), int(-5)]).unwrap();
        assert_eq!(m.alpha(), &[rat(1, 2), int(3), rat(-1, 5)]);
        assert!(matches!(
            MassParams::from_masses(&[int(1), int(0)]),
            Err(Error::ZeroMass(1))
        ));
    }

    #[test]
    fn elementary_symmetric_values() {
        let ones = MassParams::new(vec![int(1); 3]);
        assert_eq!(ones.elementary_symmetric(2).unwrap(), int(3));
        assert_eq!(ones.elementary_symmetric(0).unwrap(), int(1));
        let a = MassParams::new(vec![int(2), int(3), int(5)]);
        // Oracle: 6 + 10 + 15.
        assert_eq!(a.elementary_symmetric(2).unwrap(), int(31));
        assert_eq!(a.elementary_symmetric(3).unwrap(), int(30));
        assert!(a.elementary_symmetric(4).is_err());
    }
}
