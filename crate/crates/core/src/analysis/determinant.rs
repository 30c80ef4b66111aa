use crate::error::Result;
use crate::linalg;
use crate::matrix::Matrix;
use crate::poly::{poly_det, DetMethod, SparsePoly};
use crate::scalar::{Rational, Ring};

/// Scalars with a preferred determinant routine.
pub trait Determinant: Ring {
    fn determinant(m: &Matrix<Self>) -> Result<Self>;
}

/// LU factorization with partial pivoting.
impl Determinant for f64 {
    fn determinant(m: &Matrix<f64>) -> Result<f64> {
        let n = m.ensure_square()?;
        if n == 0 {
            return Ok(1.0);
        }
        Ok(m.to_nalgebra().lu().determinant())
    }
}

/// Exact fraction-free elimination.
impl Determinant for Rational {
    fn determinant(m: &Matrix<Rational>) -> Result<Rational> {
        linalg::det_bareiss(m)
    }
}

impl Determinant for SparsePoly {
    fn determinant(m: &Matrix<SparsePoly>) -> Result<SparsePoly> {
        poly_det(m, DetMethod::default())
    }
}

pub fn determinant<T: Determinant>(m: &Matrix<T>) -> Result<T> {
    T::determinant(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cayley_menger, nbody_matrix};
    use crate::domain::{DistanceVector, MassParams};
    use crate::scalar::int;

    #[test]
    fn unit_triangle_values() {
        let r = DistanceVector::from_squared(3, vec![int(1); 3]).unwrap();
        // 3 - 6 from the six-term expansion.
        assert_eq!(determinant(&cayley_menger(&r)).unwrap(), int(-3));
        let b = nbody_matrix(&MassParams::new(vec![int(1); 3]), &r).unwrap();
        // -2 * 3 * 3 * (-3) from the factored form.
        assert_eq!(determinant(&b).unwrap(), int(54));
        let bf = b.map(crate::scalar::RealField::to_f64);
        assert!((determinant(&bf).unwrap() - 54.0).abs() < 1e-12);
    }

    #[test]
    fn identity_and_shape() {
        assert_eq!(determinant(&Matrix::<Rational>::identity(3)).unwrap(), int(1));
        assert_eq!(determinant(&Matrix::<f64>::identity(3)).unwrap(), 1.0);
        assert!(determinant(&Matrix::<f64>::zeros(2, 3)).is_err());
    }
}
