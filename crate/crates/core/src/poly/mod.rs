//! Exact sparse multivariate polynomials over the rationals.

mod coeff;
mod divide;
mod monomial;
mod sparse;
mod text;
mod vars;

pub use coeff::Coeff;
pub use divide::exact_divide;
pub use monomial::Monomial;
pub use sparse::SparsePoly;
pub use text::parse_poly;
pub use vars::VarTable;

use std::str::FromStr;

use crate::error::Result;
use crate::linalg;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials use different variable tables")]
    VarTableMismatch,
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("no value supplied for variable {0}")]
    MissingVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("polynomial parse error: {0}")]
    Parse(String),
}

/// Determinant algorithm for polynomial matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetMethod {
    /// Division-free expansion over column subsets; fastest on the sparse
    /// pair-indexed matrices built here.
    #[default]
    MinorExpansion,
    /// Fraction-free elimination with exact polynomial division.
    Bareiss,
    /// Laplace expansion; only for small cross-checks.
    Cofactor,
}

impl FromStr for DetMethod {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minor" | "minor-expansion" => Ok(DetMethod::MinorExpansion),
            "bareiss" => Ok(DetMethod::Bareiss),
            "cofactor" => Ok(DetMethod::Cofactor),
            other => Err(format!("unknown determinant method {other:?}")),
        }
    }
}

/// Exact determinant of a square polynomial matrix.
pub fn poly_det(m: &Matrix<SparsePoly>, method: DetMethod) -> Result<SparsePoly> {
    let det = match method {
        DetMethod::MinorExpansion => linalg::det_minor_expansion(m)?,
        DetMethod::Bareiss => linalg::det_bareiss(m)?,
        DetMethod::Cofactor => linalg::det_cofactor(m)?,
    };
    // Attach the table of the entries so constants print with names.
    let table = m.entries().iter().find_map(|p| p.table().cloned());
    Ok(match table {
        Some(t) => det.with_table(&t)?,
        None => det,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};
    use std::collections::HashMap;
    use std::sync::Arc;

    fn vars(n: usize) -> (Arc<VarTable>, Vec<SparsePoly>) {
        let t = Arc::new(VarTable::new((0..n).map(|k| format!("x{k}"))).unwrap());
        let v = (0..n).map(|k| SparsePoly::var(&t, k)).collect();
        (t, v)
    }

    #[test]
    fn vandermonde_determinant() {
        let (_, x) = vars(4);
        let m = Matrix::from_fn(4, 4, |i, j| x[i].pow(j as u32));
        let mut expected = SparsePoly::one();
        for i in 0..4 {
            for j in i + 1..4 {
                expected = &expected * &(&x[j] - &x[i]);
            }
        }
        for method in [DetMethod::MinorExpansion, DetMethod::Bareiss, DetMethod::Cofactor] {
            assert_eq!(poly_det(&m, method).unwrap(), expected, "{method:?}");
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism() {
        let (t, x) = vars(3);
        let p = &(&x[0] * &x[1]) - &(&x[2] * &SparsePoly::constant(int(3)));
        let q = &x[0] + &x[2];
        let vals = [int(2), int(-5), Rational::new(1.into(), 3.into())];
        let pv = p.evaluate(&vals).unwrap();
        let qv = q.evaluate(&vals).unwrap();
        assert_eq!((&p * &q).evaluate(&vals).unwrap(), &pv * &qv);
        let named: HashMap<String, Rational> =
            t.names().iter().cloned().zip(vals.iter().cloned()).collect();
        assert_eq!(p.evaluate_named(&named).unwrap(), pv);
        assert!(matches!(p.evaluate(&vals[..1]), Err(PolyError::MissingVariable(_))));
    }

    #[test]
    fn substitution_composes() {
        let (_, x) = vars(2);
        let p = &(&x[0] * &x[0]) + &x[1];
        let images = vec![&x[0] + &x[1], x[0].clone()];
        let s = p.substitute(&images).unwrap();
        let expected = &(&(&x[0] + &x[1]) * &(&x[0] + &x[1])) + &x[0];
        assert_eq!(s, expected);
    }

    #[test]
    fn content_clears_denominators() {
        let (_, x) = vars(2);
        let p = &x[0].scale(&Coeff::from(6)) + &x[1].scale(&Coeff::from(-9));
        assert_eq!(p.content(), 3.into());
        let half = x[0].scale(&Coeff::from_rational(Rational::new(1.into(), 2.into())));
        let q = &half + &x[1];
        assert_eq!(q.content(), 1.into());
        assert_eq!(SparsePoly::zero().content(), 0.into());
    }

    #[test]
    fn mismatched_tables_error() {
        let (_, a) = vars(2);
        let t2 = Arc::new(VarTable::new(["y0", "y1"]).unwrap());
        let b = SparsePoly::var(&t2, 0);
        assert_eq!(a[0].try_add(&b), Err(PolyError::VarTableMismatch));
        // Constants are table-free and mix with anything.
        assert!(a[0].try_mul(&SparsePoly::constant(2)).is_ok());
    }

    #[test]
    fn degree_queries() {
        let (_, x) = vars(3);
        let p = &(&x[0].pow(3) * &x[1]) + &x[2];
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.degree_in(0), 3);
        assert_eq!(p.degree_range_in(&[0, 1]), Some((0, 4)));
        assert_eq!(SparsePoly::zero().degree(), None);
    }
}
