//! Constructors for every matrix family: distance, Cayley–Menger, reduced
//! distance, n-body, bordered and the generalized pair matrix `W_{S,T}`.
//!
//! All builders are generic over [`Ring`], so the same code produces float,
//! exact rational and symbolic polynomial matrices. Point and pair indices
//! are 0-based.

use crate::domain::{DistanceVector, MassParams};
use crate::error::{Error, Result};
use crate::matrix::{GenericEntryTable, Label, Matrix};
use crate::pairs::{PairIndex, PairSpace};
use crate::scalar::Ring;

fn point_labels(n: usize) -> Vec<Label> {
    (0..n).map(Label::Point).collect()
}

fn pair_labels(n: usize) -> Vec<Label> {
    PairSpace::new(n).iter().map(Label::Pair).collect()
}

/// The `n×n` table `R` with `R_ij = r_ij²` and zero diagonal.
pub fn edm_table<T: Ring>(r: &DistanceVector<T>) -> GenericEntryTable<T> {
    GenericEntryTable::from_fn(r.n(), |i, j| r.squared(i, j))
}

/// The diagonal table `A = diag(α)`.
pub fn mass_table<T: Ring>(alpha: &MassParams<T>) -> GenericEntryTable<T> {
    GenericEntryTable::diagonal(alpha.alpha())
}

/// Euclidean (squared) distance matrix.
pub fn edm<T: Ring>(r: &DistanceVector<T>) -> Matrix<T> {
    edm_table(r).as_matrix().with_labels(point_labels(r.n()))
}

/// `C_H`: `h` in the upper-left block, a border of ones, corner 0.
pub fn bordered<T: Ring>(h: &GenericEntryTable<T>) -> Matrix<T> {
    let n = h.n();
    let m = Matrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => h.get(i, j).clone(),
        (false, false) => T::zero(),
        _ => T::one(),
    });
    let mut labels = point_labels(n);
    labels.push(Label::Border);
    m.with_labels(labels)
}

/// Cayley–Menger matrix: the distance matrix bordered by ones.
pub fn cayley_menger<T: Ring>(r: &DistanceVector<T>) -> Matrix<T> {
    bordered(&edm_table(r))
}

/// Reduced distance matrix `M_k` based at point `k` (0-based):
/// `m_ij = r_ik² + r_jk² − r_ij²` over `i, j ≠ k`.
pub fn reduced_edm<T: Ring>(r: &DistanceVector<T>, k: usize) -> Result<Matrix<T>> {
    let n = r.n();
    if k >= n {
        return Err(Error::IndexOutOfRange {
            what: "base point",
            index: k,
            size: n,
        });
    }
    let idx: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let m = Matrix::from_fn(idx.len(), idx.len(), |a, b| {
        let (i, j) = (idx[a], idx[b]);
        r.squared(i, k).plus(&r.squared(j, k)).minus(&r.squared(i, j))
    });
    Ok(m.with_labels(idx.into_iter().map(Label::Point).collect()))
}

/// Entry of the n-body matrix at pairs `p`, `q`.
pub fn nbody_entry<T: Ring>(alpha: &MassParams<T>, r: &DistanceVector<T>, p: PairIndex, q: PairIndex) -> T {
    if p == q {
        let (i, j) = (p.i(), p.j());
        return alpha.get(i).plus(alpha.get(j)).times(r.squared_pair(p)).scaled(2);
    }
    match p.shared_with(&q) {
        Some(c) => {
            let (a, b) = (p.other(c), q.other(c));
            alpha
                .get(c)
                .times(&r.squared(c, a).plus(&r.squared(c, b)).minus(&r.squared(a, b)))
        }
        None => T::zero(),
    }
}

/// The n-body matrix `B`, rows and columns in pair order.
pub fn nbody_matrix<T: Ring>(alpha: &MassParams<T>, r: &DistanceVector<T>) -> Result<Matrix<T>> {
    let n = r.n();
    if alpha.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "{} mass parameters for {n} points",
            alpha.n()
        )));
    }
    if n < 2 {
        return Err(Error::DimensionMismatch("the n-body matrix needs at least 2 points".into()));
    }
    let pairs: Vec<PairIndex> = PairSpace::new(n).iter().collect();
    let m = Matrix::from_fn(pairs.len(), pairs.len(), |a, b| {
        nbody_entry(alpha, r, pairs[a], pairs[b])
    });
    Ok(m.with_labels(pair_labels(n)))
}

/// `(t_jk + t_il − t_ik − t_jl)(s_jk + s_il − s_ik − s_jl)` for the
/// representatives `(i, j)`, `(k, l)` exactly as given.
pub fn w_entry<T: Ring>(
    s: &GenericEntryTable<T>,
    t: &GenericEntryTable<T>,
    (i, j): (usize, usize),
    (k, l): (usize, usize),
) -> T {
    let cross = |h: &GenericEntryTable<T>| {
        h.get(j, k).plus(h.get(i, l)).minus(h.get(i, k)).minus(h.get(j, l))
    };
    cross(t).times(&cross(s))
}

/// The pair-indexed matrix `W_{S,T}` over arbitrary (not necessarily
/// symmetric or zero-diagonal) tables.
pub fn w_matrix<T: Ring>(s: &GenericEntryTable<T>, t: &GenericEntryTable<T>) -> Result<Matrix<T>> {
    let n = s.n();
    if t.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "tables of order {n} and {}",
            t.n()
        )));
    }
    if n < 2 {
        return Err(Error::DimensionMismatch("W needs tables of order at least 2".into()));
    }
    let pairs: Vec<PairIndex> = PairSpace::new(n).iter().collect();
    let m = Matrix::from_fn(pairs.len(), pairs.len(), |a, b| {
        let (p, q) = (pairs[a], pairs[b]);
        w_entry(s, t, (p.i(), p.j()), (q.i(), q.j()))
    });
    Ok(m.with_labels(pair_labels(n)))
}

/// Places `M_k` (as built by [`reduced_edm`]) into the pair-indexed matrix:
/// entry `(i, j)` of `M_k` goes to position `({i,k}, {j,k})`, everything
/// else is zero.
pub fn lift<T: Ring>(m_k: &Matrix<T>, n: usize, k: usize) -> Result<Matrix<T>> {
    if k >= n || m_k.rows() + 1 != n || !m_k.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot lift a {}x{} matrix based at {k} into {n} points",
            m_k.rows(),
            m_k.cols()
        )));
    }
    let space = PairSpace::new(n);
    let mut out = Matrix::zeros(space.len(), space.len());
    let others: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    for (a, &i) in others.iter().enumerate() {
        let row = space.rank_of(i, k)?;
        for (b, &j) in others.iter().enumerate() {
            let col = space.rank_of(j, k)?;
            out.set(row, col, m_k.get(a, b).clone());
        }
    }
    Ok(out.with_labels(pair_labels(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn unit() -> DistanceVector<Rational> {
        DistanceVector::from_squared(3, vec![int(1); 3]).unwrap()
    }

    fn ints(m: &Matrix<Rational>) -> Vec<Vec<i64>> {
        m.row_vecs()
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.to_integer().try_into().unwrap()).collect())
            .collect()
    }

    #[test]
    fn unit_triangle_family() {
        let r = unit();
        assert_eq!(ints(&edm(&r)), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(
            ints(&cayley_menger(&r)),
            vec![vec![0, 1, 1, 1], vec![1, 0, 1, 1], vec![1, 1, 0, 1], vec![1, 1, 1, 0]]
        );
        assert_eq!(ints(&reduced_edm(&r, 2).unwrap()), vec![vec![2, 1], vec![1, 2]]);
        let b = nbody_matrix(&MassParams::new(vec![int(1); 3]), &r).unwrap();
        assert_eq!(ints(&b), vec![vec![4, 1, 1], vec![1, 4, 1], vec![1, 1, 4]]);
    }

    #[test]
    fn collinear_triple_edm() {
        let r = DistanceVector::from_distances(3, vec![int(3), int(7), int(4)]).unwrap();
        assert_eq!(ints(&edm(&r)), vec![vec![0, 9, 49], vec![9, 0, 16], vec![49, 16, 0]]);
    }

    #[test]
    fn small_cases() {
        let single = DistanceVector::<Rational>::from_squared(1, vec![]).unwrap();
        assert_eq!(ints(&edm(&single)), vec![vec![0]]);
        let two = DistanceVector::from_distances(2, vec![int(2)]).unwrap();
        assert_eq!(ints(&cayley_menger(&two)), vec![vec![0, 4, 1], vec![4, 0, 1], vec![1, 1, 0]]);
        let h = GenericEntryTable::from_rows(vec![vec![int(7)]]).unwrap();
        assert_eq!(ints(&bordered(&h)), vec![vec![7, 1], vec![1, 0]]);
        assert!(reduced_edm(&two, 2).is_err());
    }

    #[test]
    fn dimension_errors() {
        let r = unit();
        assert!(nbody_matrix(&MassParams::new(vec![int(1); 2]), &r).is_err());
        let s = GenericEntryTable::from_fn(3, |_, _| int(0));
        let t = GenericEntryTable::from_fn(2, |_, _| int(0));
        assert!(w_matrix(&s, &t).is_err());
    }

    #[test]
    fn zero_tables_give_zero_w() {
        let z = GenericEntryTable::from_fn(4, |_, _| int(0));
        let w = w_matrix(&z, &z).unwrap();
        assert!(w.entries().iter().all(Ring::is_zero));
    }

    #[test]
    fn mass_table_borders_to_ca() {
        let a = MassParams::new(vec![int(2), int(3)]);
        assert_eq!(ints(&bordered(&mass_table(&a))), vec![vec![2, 0, 1], vec![0, 3, 1], vec![1, 1, 0]]);
    }
}
