use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::scalar::Rational;

/// Exact rational coefficient with an `i64` fast path.
///
/// Invariant: `Big` never holds an integer that fits in `i64`, so derived
/// equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coeff {
    Small(i64),
    Big(Rational),
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Small(0)
    }

    pub fn one() -> Self {
        Coeff::Small(1)
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Coeff::Small(v);
            }
        }
        Coeff::Big(r)
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Coeff::from_rational(Rational::from_integer(v))
    }

    pub fn to_rational(&self) -> Rational {
        match self {
            Coeff::Small(v) => Rational::from_integer(BigInt::from(*v)),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(_) => true,
            Coeff::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Coeff::Small(_) => BigInt::one(),
            Coeff::Big(r) => r.denom().clone(),
        }
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_rational(self.to_rational() + other.to_rational())
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_rational(self.to_rational() - other.to_rational())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_rational(self.to_rational() * other.to_rational())
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Small(v) => match v.checked_neg() {
                Some(n) => Coeff::Small(n),
                None => Coeff::from_rational(-self.to_rational()),
            },
            Coeff::Big(r) => Coeff::from_rational(-r.clone()),
        }
    }

    /// `self / other`; `None` when dividing by zero.
    pub fn div(&self, other: &Coeff) -> Option<Coeff> {
        if other.is_zero() {
            return None;
        }
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, other) {
            if a.checked_rem(*b) == Some(0) {
                if let Some(v) = a.checked_div(*b) {
                    return Some(Coeff::Small(v));
                }
            }
        }
        Some(Coeff::from_rational(self.to_rational() / other.to_rational()))
    }

    /// `self += a * b`.
    pub fn add_product(&mut self, a: &Coeff, b: &Coeff) {
        if let (Coeff::Small(s), Coeff::Small(x), Coeff::Small(y)) = (&*self, a, b) {
            if let Some(v) = x.checked_mul(*y).and_then(|p| s.checked_add(p)) {
                *self = Coeff::Small(v);
                return;
            }
        }
        *self = self.add(&a.mul(b));
    }

    pub fn add_assign(&mut self, other: &Coeff) {
        if let (Coeff::Small(s), Coeff::Small(o)) = (&*self, other) {
            if let Some(v) = s.checked_add(*o) {
                *self = Coeff::Small(v);
                return;
            }
        }
        *self = self.add(other);
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<Rational> for Coeff {
    fn from(r: Rational) -> Self {
        Coeff::from_rational(r)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Coeff::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Coeff::Small(i64::MAX).add(&Coeff::Small(1));
        assert!(matches!(big, Coeff::Big(_)));
        let back = big.sub(&Coeff::Small(1));
        assert_eq!(back, Coeff::Small(i64::MAX));
        let sq = Coeff::Small(1 << 40).mul(&Coeff::Small(1 << 40));
        assert_eq!(sq.div(&Coeff::Small(1 << 40)).unwrap(), Coeff::Small(1 << 40));
        assert_eq!(Coeff::Small(i64::MIN).neg().neg(), Coeff::Small(i64::MIN));
    }

    #[test]
    fn fractional_division() {
        let q = Coeff::Small(3).div(&Coeff::Small(6)).unwrap();
        assert_eq!(q, Coeff::Big(rat(1, 2)));
        assert_eq!(q.to_string(), "1/2");
        assert_eq!(q.mul(&Coeff::Small(2)), Coeff::one());
        assert!(Coeff::one().div(&Coeff::zero()).is_none());
    }

    #[test]
    fn fused_multiply_add() {
        let mut c = Coeff::Small(1);
        c.add_product(&Coeff::Small(2), &Coeff::Small(3));
        assert_eq!(c, Coeff::Small(7));
        c.add_product(&Coeff::Small(i64::MAX), &Coeff::Small(2));
        assert!(matches!(c, Coeff::Big(_)));
    }
}
