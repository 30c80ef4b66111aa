//! Exact linear algebra over generic rings: three determinant algorithms,
//! rank and null space over fields.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, IntegralDomain, Ring};

/// Fraction-free (Bareiss) elimination with row pivoting.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact in an integral domain.
pub fn det_bareiss<T: IntegralDomain>(m: &Matrix<T>) -> Result<T> {
    let n = m.ensure_square()?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a: Vec<Vec<T>> = m.row_vecs();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(T::zero());
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        let results: Vec<Result<Vec<T>>> = tail
            .par_iter()
            .map(|row| {
                (k + 1..n)
                    .map(|j| {
                        let num = pivot.times(&row[j]).minus(&row[k].times(&pivot_row[j]));
                        num.exact_quotient(&prev).ok_or_else(|| {
                            Error::IdentityFailed("inexact division in fraction-free elimination".into())
                        })
                    })
                    .collect()
            })
            .collect();
        for (row, updated) in tail.iter_mut().zip(results) {
            let updated = updated?;
            for (j, v) in (k + 1..n).zip(updated) {
                row[j] = v;
            }
            row[k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.negated() } else { det })
}

/// Division-free determinant by expansion over column subsets.
///
/// Row `k` is expanded against every `k`-column minor of the rows above it, so
/// each step multiplies a single (usually small) entry by a stored minor.
/// Zero entries and zero minors are skipped, which suits the sparse pair-indexed
/// matrices of this crate.
pub fn det_minor_expansion<T: Ring>(m: &Matrix<T>) -> Result<T> {
    let n = m.ensure_square()?;
    if n > 30 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "minor expansion supports at most 30 columns",
        });
    }
    let mut level: FxHashMap<u32, T> = FxHashMap::default();
    level.insert(0, T::one());
    for k in 0..n {
        let targets: Vec<u32> = subsets_of_size(n, k + 1);
        let next: Vec<(u32, T)> = targets
            .into_par_iter()
            .filter_map(|mask| {
                let mut acc: Option<T> = None;
                let mut pos = 0usize;
                for c in 0..n {
                    if mask & (1 << c) == 0 {
                        continue;
                    }
                    let entry = m.get(k, c);
                    if !entry.is_zero() {
                        if let Some(minor) = level.get(&(mask & !(1 << c))) {
                            let mut term = entry.times(minor);
                            if (k + pos) % 2 == 1 {
                                term = term.negated();
                            }
                            acc = Some(match acc {
                                Some(a) => a.plus(&term),
                                None => term,
                            });
                        }
                    }
                    pos += 1;
                }
                acc.filter(|v| !v.is_zero()).map(|v| (mask, v))
            })
            .collect();
        level = next.into_iter().collect();
    }
    Ok(level.remove(&((1u32 << n) - 1)).unwrap_or_else(T::zero))
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack enumerates k-subsets of an n-set in increasing order.
    let mut set: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while set < limit {
        out.push(set as u32);
        let c = set & set.wrapping_neg();
        let r = set + c;
        set = (((r ^ set) >> 2) / c) | r;
    }
    out
}

/// Laplace expansion along the first row. Exponential; intended for cross-checks.
pub fn det_cofactor<T: Ring>(m: &Matrix<T>) -> Result<T> {
    let n = m.ensure_square()?;
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor_rec(m, &rows, &cols))
}

fn cofactor_rec<T: Ring>(m: &Matrix<T>, rows: &[usize], cols: &[usize]) -> T {
    match cols.len() {
        0 => T::one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = T::zero();
            for (pos, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = entry.times(&cofactor_rec(m, &rows[1..], &rest));
                acc = if pos % 2 == 0 {
                    acc.plus(&term)
                } else {
                    acc.minus(&term)
                };
            }
            acc
        }
    }
}

/// Reduced row echelon form; returns the pivot columns.
fn rref<T: Field>(a: &mut [Vec<T>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].inverse().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            *v = v.times(&inv);
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let delta = f.times(&a[r][j]);
                    a[i][j] = a[i][j].minus(&delta);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank over a field (use with rationals; floating input is not thresholded).
pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    let mut a = m.row_vecs();
    rref(&mut a, m.cols()).len()
}

/// Basis of the right null space `{x : M x = 0}`, one vector per free column.
pub fn null_space<T: Field>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let cols = m.cols();
    let mut a = m.row_vecs();
    let pivots = rref(&mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![T::zero(); cols];
            x[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = a[row][f].negated();
            }
            x
        })
        .collect()
}
