//! Scalar contracts shared by every builder and determinant routine.
//!
//! Three scalar regimes flow through the same generic code: IEEE doubles,
//! exact arbitrary-precision rationals, and exact sparse polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::matrix::Matrix;

pub use num_rational::BigRational as Rational;

/// Commutative ring with identity.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn scaled(&self, k: i64) -> Self {
        self.times(&Self::from_i64(k))
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self>>(items: I) -> Self {
        items.into_iter().fold(Self::zero(), |acc, x| acc.plus(x))
    }
}

/// Rings where `a / b` can be taken whenever `b` divides `a`.
///
/// Fraction-free elimination relies on this; over a field every nonzero
/// divisor succeeds.
pub trait IntegralDomain: Ring {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: IntegralDomain {
    fn inverse(&self) -> Option<Self> {
        Self::one().exact_quotient(self)
    }
}

/// Ordered fields we can analyse numerically (f64 and exact rationals).
pub trait RealField: Field + PartialOrd {
    fn to_f64(&self) -> f64;
    fn is_exact() -> bool;
    /// Square root when it exists in the field (always for nonnegative f64).
    fn sqrt_checked(&self) -> Option<Self>;
    /// Rank, exact for rationals; for doubles singular values below
    /// `tol × σ_max` count as zero.
    fn matrix_rank(m: &Matrix<Self>, tol: f64) -> usize;
    fn abs(&self) -> Self {
        if *self < Self::zero() {
            self.negated()
        } else {
            self.clone()
        }
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl IntegralDomain for f64 {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        (*divisor != 0.0).then(|| self / divisor)
    }
}

impl Field for f64 {}

impl RealField for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_exact() -> bool {
        false
    }
    fn sqrt_checked(&self) -> Option<Self> {
        (*self >= 0.0).then(|| self.sqrt())
    }
    fn matrix_rank(m: &Matrix<Self>, tol: f64) -> usize {
        if m.rows() == 0 || m.cols() == 0 {
            return 0;
        }
        let sv = m.to_nalgebra().singular_values();
        let max = sv.iter().cloned().fold(0.0, f64::max);
        if max == 0.0 {
            return 0;
        }
        sv.iter().filter(|&&s| s > tol * max).count()
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl IntegralDomain for Rational {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        (!Zero::is_zero(divisor)).then(|| self / divisor)
    }
}

impl Field for Rational {}

impl RealField for Rational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_exact() -> bool {
        true
    }
    fn sqrt_checked(&self) -> Option<Self> {
        rational_sqrt(self)
    }
    fn matrix_rank(m: &Matrix<Self>, _tol: f64) -> usize {
        crate::linalg::rank(m)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
}

/// `p/q` as an exact rational. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses `"p/q"`, an integer, or a terminating decimal such as `-1.25e-3`
/// into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    parse_decimal(text)
}

fn parse_decimal(text: &str) -> Option<Rational> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(all_digits.parse::<BigInt>().ok()?);
    let shift = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Some(if negative { -value } else { value })
}

/// Exact square root of a nonnegative rational, when it exists.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let p = value.numer().sqrt();
    let q = value.denom().sqrt();
    (&p * &p == *value.numer() && &q * &q == *value.denom()).then(|| Rational::new(p, q))
}

/// Exact conversion of a finite double (every finite double is a dyadic rational).
pub fn rational_from_f64(v: f64) -> Option<Rational> {
    Rational::from_float(v)
}
