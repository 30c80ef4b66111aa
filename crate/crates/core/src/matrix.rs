//! Dense row-major matrices over any [`Ring`], with optional point or pair labels.

use std::fmt;

use crate::error::{Error, Result};
use crate::pairs::PairIndex;
use crate::scalar::Ring;

/// Row/column label of a matrix built from a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    /// 0-based point index.
    Point(usize),
    Pair(PairIndex),
    /// The row/column of ones added by bordering.
    Border,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Point(i) => write!(f, "{}", i + 1),
            Label::Pair(p) => write!(f, "{p}"),
            Label::Border => f.write_str("border"),
        }
    }
}

impl std::str::FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "border" {
            return Ok(Label::Border);
        }
        if s.contains(',') {
            return Ok(Label::Pair(s.parse()?));
        }
        let i: usize = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad matrix label {s:?}")))?;
        i.checked_sub(1)
            .map(Label::Point)
            .ok_or_else(|| Error::Parse(format!("matrix labels are 1-based, got {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
    labels: Option<Vec<Label>>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix given {} entries",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
            labels: None,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
            labels: None,
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Attaches labels; a square matrix shares them between rows and columns.
    pub fn with_labels(mut self, labels: Vec<Label>) -> Self {
        assert_eq!(labels.len(), self.rows, "one label per row");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, E>>()?,
            labels: self.labels.clone(),
        })
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix keeping the listed rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

impl<T: PartialEq> Matrix<T> {
    /// Exact symmetry: `a[i][j] == a[j][i]` for every entry.
    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn product(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc.plus(&self.get(i, k).times(other.get(k, j)))
            })
        }))
    }

    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    /// `xᵀ A y`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> Result<T> {
        let ay = self.apply(y)?;
        if x.len() != ay.len() {
            return Err(Error::DimensionMismatch("bilinear form operand length".into()));
        }
        Ok(x.iter()
            .zip(&ay)
            .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b))))
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|v| v.times(k))
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn try_add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum shapes differ".into()));
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.plus(b);
        }
        Ok(out)
    }
}

impl Matrix<f64> {
    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_row_slice(self.rows, self.cols, &self.entries)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// An `n×n` table of arbitrary entries `s_{i,j}`: no symmetry, no zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericEntryTable<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T> GenericEntryTable<T> {
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "table of order {n} needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("entry table must be square".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn as_matrix(&self) -> Matrix<T>
    where
        T: Clone,
    {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j).clone())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> GenericEntryTable<U> {
        GenericEntryTable {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl<T: Ring> GenericEntryTable<T> {
    pub fn diagonal(values: &[T]) -> Self {
        Self::from_fn(values.len(), |i, j| {
            if i == j {
                values[i].clone()
            } else {
                T::zero()
            }
        })
    }

    /// `xᵀ S y`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> Result<T> {
        if x.len() != self.n || y.len() != self.n {
            return Err(Error::DimensionMismatch("bilinear form operand length".into()));
        }
        let mut acc = T::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc = acc.plus(&x[i].times(self.get(i, j)).times(&y[j]));
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_rows(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let at = a.transpose();
        assert_eq!(at.row(0), &[1.0, 3.0]);
        let p = a.product(&at).unwrap();
        assert_eq!(p.row_vecs(), vec![vec![5.0, 11.0], vec![11.0, 25.0]]);
        assert!(p.is_symmetric());
        assert!(!a.is_symmetric());
    }

    #[test]
    fn shape_errors() {
        assert!(Matrix::new(2, 2, vec![1.0; 3]).is_err());
        assert!(Matrix::from_rows(vec![vec![1.0], vec![1.0, 2.0]]).is_err());
        let a = Matrix::<f64>::zeros(2, 3);
        assert!(a.ensure_square().is_err());
        assert!(a.product(&a).is_err());
        assert!(GenericEntryTable::new(2, vec![0.0; 3]).is_err());
    }

    #[test]
    fn label_text_round_trip() {
        for label in [
            Label::Point(0),
            Label::Pair(PairIndex::new(1, 3).unwrap()),
            Label::Border,
        ] {
            assert_eq!(label.to_string().parse::<Label>().unwrap(), label);
        }
    }
}
