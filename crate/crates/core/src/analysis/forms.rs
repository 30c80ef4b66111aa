//! Quadratic, biquadratic and quartic forms built from the matrix families.

use crate::builders::{edm, nbody_entry, reduced_edm, w_entry};
use crate::domain::{DistanceVector, MassParams, PointConfiguration};
use crate::error::{Error, Result};
use crate::matrix::GenericEntryTable;
use crate::pairs::PairSpace;
use crate::scalar::Ring;

fn check_len<T>(x: &[T], n: usize, what: &str) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{what} has length {}, expected {n}",
            x.len()
        )));
    }
    Ok(())
}

/// `q_k(x) = x̂ᵀ M_k x̂`, where `x̂` drops entry `k` (0-based).
pub fn quadratic_form_qk<T: Ring>(r: &DistanceVector<T>, k: usize, x: &[T]) -> Result<T> {
    check_len(x, r.n(), "x")?;
    let m = reduced_edm(r, k)?;
    let reduced: Vec<T> = x
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, v)| v.clone())
        .collect();
    m.bilinear(&reduced, &reduced)
}

/// `q(x) = xᵀ D x` with `D` the distance matrix.
pub fn quadratic_form_q<T: Ring>(r: &DistanceVector<T>, x: &[T]) -> Result<T> {
    check_len(x, r.n(), "x")?;
    edm(r).bilinear(x, x)
}

/// `z_{ij} = x_i x_j` in pair order.
pub fn pair_products<T: Ring>(x: &[T]) -> Vec<T> {
    PairSpace::new(x.len())
        .iter()
        .map(|p| x[p.i()].times(&x[p.j()]))
        .collect()
}

/// `Q_W(x, y) = Σ_{{i,j}} Σ_{{k,l}} w_{{i,j},{k,l}} x_i x_j y_k y_l`, summed
/// entry by entry without forming `W`.
pub fn biquadratic_qw<T: Ring>(
    s: &GenericEntryTable<T>,
    t: &GenericEntryTable<T>,
    x: &[T],
    y: &[T],
) -> Result<T> {
    let n = s.n();
    if t.n() != n {
        return Err(Error::DimensionMismatch("tables differ in order".into()));
    }
    check_len(x, n, "x")?;
    check_len(y, n, "y")?;
    let space = PairSpace::new(n);
    let mut acc = T::zero();
    for p in space.iter() {
        let xp = x[p.i()].times(&x[p.j()]);
        if xp.is_zero() {
            continue;
        }
        for q in space.iter() {
            let w = w_entry(s, t, (p.i(), p.j()), (q.i(), q.j()));
            acc = acc.plus(&w.times(&xp).times(&y[q.i()]).times(&y[q.j()]));
        }
    }
    Ok(acc)
}

/// `Q_B(x) = Σ b_{{i,j},{k,l}} x_i x_j x_k x_l` over ordered pairs of pairs.
pub fn quartic_qb<T: Ring>(alpha: &MassParams<T>, r: &DistanceVector<T>, x: &[T]) -> Result<T> {
    let n = r.n();
    if alpha.n() != n {
        return Err(Error::DimensionMismatch("mass count differs from point count".into()));
    }
    check_len(x, n, "x")?;
    let space = PairSpace::new(n);
    let mut acc = T::zero();
    for p in space.iter() {
        let xp = x[p.i()].times(&x[p.j()]);
        for q in space.iter() {
            let b = nbody_entry(alpha, r, p, q);
            if b.is_zero() {
                continue;
            }
            acc = acc.plus(&b.times(&xp).times(&x[q.i()]).times(&x[q.j()]));
        }
    }
    Ok(acc)
}

/// `a(x) = Σ α_i x_i²`.
pub fn mass_form<T: Ring>(alpha: &MassParams<T>, x: &[T]) -> Result<T> {
    check_len(x, alpha.n(), "x")?;
    Ok(T::sum(
        alpha.alpha().iter().zip(x).map(|(a, v)| a.times(v).times(v)).collect::<Vec<_>>().iter(),
    ))
}

/// `p(x) = ‖P x‖²`, `P` the matrix whose columns are the points.
pub fn configuration_form<T: crate::scalar::RealField>(cfg: &PointConfiguration<T>, x: &[T]) -> Result<T> {
    check_len(x, cfg.n(), "x")?;
    let mut acc = T::zero();
    for c in 0..cfg.d() {
        let mut comp = T::zero();
        for (i, xi) in x.iter().enumerate() {
            comp = comp.plus(&cfg.point(i)[c].times(xi));
        }
        acc = acc.plus(&comp.times(&comp));
    }
    Ok(acc)
}

/// `Σ_k α_k z_kᵀ M_k z_k`, where `z_k` collects `z_{{i,k}}` for `i ≠ k`.
/// Equals `zᵀ B z` for the n-body matrix `B`.
pub fn reduced_form_split<T: Ring>(alpha: &MassParams<T>, r: &DistanceVector<T>, z: &[T]) -> Result<T> {
    let n = r.n();
    let space = PairSpace::new(n);
    check_len(z, space.len(), "z")?;
    if alpha.n() != n {
        return Err(Error::DimensionMismatch("mass count differs from point count".into()));
    }
    let mut acc = T::zero();
    for k in 0..n {
        let zk = (0..n)
            .filter(|&i| i != k)
            .map(|i| Ok(z[space.rank_of(i, k)?].clone()))
            .collect::<Result<Vec<T>>>()?;
        let m = reduced_edm(r, k)?;
        acc = acc.plus(&alpha.get(k).times(&m.bilinear(&zk, &zk)?));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    fn unit() -> DistanceVector<Rational> {
        DistanceVector::from_squared(3, vec![int(1); 3]).unwrap()
    }

    #[test]
    fn off_hyperplane_example() {
        let r = unit();
        let e1 = vec![int(1), int(0), int(0)];
        assert_eq!(quadratic_form_q(&r, &e1).unwrap(), int(0));
        assert_eq!(quadratic_form_qk(&r, 2, &e1).unwrap(), int(2));
        let zero = vec![int(0); 3];
        assert_eq!(quadratic_form_q(&r, &zero).unwrap(), int(0));
        assert_eq!(quadratic_form_qk(&r, 0, &zero).unwrap(), int(0));
    }

    #[test]
    fn quartic_unit_triangle() {
        let alpha = MassParams::new(vec![int(1); 3]);
        let x = vec![int(1), int(-1), int(0)];
        // a = 2, p = |p1 - p2|² = 1.
        assert_eq!(quartic_qb(&alpha, &unit(), &x).unwrap(), int(4));
        assert_eq!(quartic_qb(&alpha, &unit(), &[int(0), int(0), int(0)]).unwrap(), int(0));
    }

    #[test]
    fn pair_products_order() {
        let z = pair_products(&[int(1), int(-2), int(1)]);
        assert_eq!(z, vec![int(-2), int(1), int(-2)]);
    }

    #[test]
    fn length_checks() {
        assert!(quadratic_form_q(&unit(), &[int(1)]).is_err());
        let s = GenericEntryTable::from_fn(3, |_, _| int(1));
        assert!(biquadratic_qw(&s, &s, &[int(1)], &vec![int(1); 3]).is_err());
    }
}
