use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector aligned with a [`VarTable`](super::VarTable).
///
/// Trailing zero exponents are never stored, so the same monomial has exactly
/// one representation regardless of how many variables the table holds.
/// Ordering is graded lexicographic with variable 0 the most significant.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u8; 24]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(index: usize) -> Self {
        Self::power(index, 1)
    }

    pub fn power(index: usize, exponent: u8) -> Self {
        if exponent == 0 {
            return Self::one();
        }
        let mut v = SmallVec::from_elem(0, index + 1);
        v[index] = exponent;
        Monomial(v)
    }

    pub fn from_exponents(exponents: &[u8]) -> Self {
        let mut v: SmallVec<[u8; 24]> = SmallVec::from_slice(exponents);
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u8 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Largest variable index with a nonzero exponent, plus one.
    pub fn span(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(short.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow (> 255)");
        }
        Monomial(v)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        for (a, b) in v.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        Some(Monomial(v))
    }

    /// Total degree restricted to the listed variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exponent(v) as u32).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Lexicographic comparison of trimmed vectors equals comparison of the
        // zero-padded vectors.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
