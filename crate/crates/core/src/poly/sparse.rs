use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;

use super::{Coeff, Monomial, PolyError, VarTable};
use crate::scalar::{IntegralDomain, Rational, Ring};

/// Exact multivariate polynomial with rational coefficients.
///
/// Terms live in a hash map keyed by exponent vector; zero coefficients are
/// never stored, so equality is structural. The variable table is optional:
/// constants built without one combine with any table.
#[derive(Clone)]
pub struct SparsePoly {
    vars: Option<Arc<VarTable>>,
    terms: FxHashMap<Monomial, Coeff>,
}

fn merge_tables(
    a: &Option<Arc<VarTable>>,
    b: &Option<Arc<VarTable>>,
) -> Result<Option<Arc<VarTable>>, PolyError> {
    match (a, b) {
        (Some(x), Some(y)) => {
            if Arc::ptr_eq(x, y) || x == y {
                Ok(Some(x.clone()))
            } else {
                Err(PolyError::VarTableMismatch)
            }
        }
        (Some(x), None) | (None, Some(x)) => Ok(Some(x.clone())),
        (None, None) => Ok(None),
    }
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self {
            vars: None,
            terms: FxHashMap::default(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: impl Into<Coeff>) -> Self {
        let c = c.into();
        let mut terms = FxHashMap::default();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { vars: None, terms }
    }

    /// The variable at `index` of `table`.
    pub fn var(table: &Arc<VarTable>, index: usize) -> Self {
        assert!(index < table.len(), "variable index {index} out of table");
        Self::term(table, Coeff::one(), Monomial::var(index))
    }

    pub fn var_named(table: &Arc<VarTable>, name: &str) -> Result<Self, PolyError> {
        let index = table
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Self::var(table, index))
    }

    pub fn term(table: &Arc<VarTable>, c: Coeff, m: Monomial) -> Self {
        let mut terms = FxHashMap::default();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            vars: Some(table.clone()),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated terms, merging like monomials.
    pub fn from_terms(
        table: Option<Arc<VarTable>>,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Self {
        let mut map: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        for (m, c) in terms {
            map.entry(m).or_insert_with(Coeff::zero).add_assign(&c);
        }
        map.retain(|_, c| !c.is_zero());
        Self {
            vars: table,
            terms: map,
        }
    }

    pub(crate) fn from_map(vars: Option<Arc<VarTable>>, terms: FxHashMap<Monomial, Coeff>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { vars, terms }
    }

    pub fn table(&self) -> Option<&Arc<VarTable>> {
        self.vars.as_ref()
    }

    /// Same terms, attached to `table`.
    pub fn with_table(mut self, table: &Arc<VarTable>) -> Result<Self, PolyError> {
        if let Some(own) = &self.vars {
            if !(Arc::ptr_eq(own, table) || **own == **table) {
                return Err(PolyError::VarTableMismatch);
            }
        }
        if self.terms.keys().any(|m| m.span() > table.len()) {
            return Err(PolyError::VarTableMismatch);
        }
        self.vars = Some(table.clone());
        Ok(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in descending monomial order (the canonical serialization order).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Coeff> {
        self.is_constant()
            .then(|| self.coefficient(&Monomial::one()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(var) as u32)
            .max()
            .unwrap_or(0)
    }

    /// Smallest and largest total degree in a class of variables over all
    /// terms; equal bounds mean the polynomial is homogeneous in that class.
    pub fn degree_range_in(&self, vars: &[usize]) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|m| m.degree_in(vars));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| a.0.cmp(b.0))
    }

    pub fn try_add(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        let vars = merge_tables(&self.vars, &other.vars)?;
        let (mut terms, rest) = if self.terms.len() >= other.terms.len() {
            (self.terms.clone(), &other.terms)
        } else {
            (other.terms.clone(), &self.terms)
        };
        for (m, c) in rest {
            accumulate(&mut terms, m, c);
        }
        Ok(Self { vars, terms })
    }

    pub fn try_sub(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        let vars = merge_tables(&self.vars, &other.vars)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m, &c.neg());
        }
        Ok(Self { vars, terms })
    }

    pub fn try_mul(&self, other: &SparsePoly) -> Result<SparsePoly, PolyError> {
        let vars = merge_tables(&self.vars, &other.vars)?;
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut terms: FxHashMap<Monomial, Coeff> =
            FxHashMap::with_capacity_and_hasher(large.terms.len() * small.terms.len().min(4), Default::default());
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                let m = ms.mul(ml);
                terms.entry(m).or_insert_with(Coeff::zero).add_product(cs, cl);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Self { vars, terms })
    }

    pub fn neg(&self) -> SparsePoly {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &Coeff) -> SparsePoly {
        if k.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: FxHashMap::default(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        (0..e).fold(SparsePoly::one(), |acc, _| &acc * self)
    }

    /// Gcd of the integer coefficients after clearing denominators
    /// (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
        self.terms.values().fold(BigInt::zero(), |acc, c| {
            let scaled = c.numer() * (&lcm / c.denom());
            acc.gcd(&scaled)
        })
    }

    /// Exact value under `values[var]`; every variable that occurs must be covered.
    pub fn evaluate(&self, values: &[Rational]) -> Result<Rational, PolyError> {
        let mut acc = <Rational as Zero>::zero();
        for (m, c) in &self.terms {
            if m.span() > values.len() {
                let missing = m.span() - 1;
                return Err(PolyError::MissingVariable(self.var_name(missing)));
            }
            let mut t = c.to_rational();
            for (k, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(values[k].clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluation under a name → value assignment.
    pub fn evaluate_named(&self, assignment: &HashMap<String, Rational>) -> Result<Rational, PolyError> {
        let span = self.terms.keys().map(Monomial::span).max().unwrap_or(0);
        let mut values = Vec::with_capacity(span);
        for k in 0..span {
            let name = self.var_name(k);
            let used = self.terms.keys().any(|m| m.exponent(k) > 0);
            match assignment.get(&name) {
                Some(v) => values.push(v.clone()),
                None if !used => values.push(<Rational as Zero>::zero()),
                None => return Err(PolyError::MissingVariable(name)),
            }
        }
        self.evaluate(&values)
    }

    /// Replaces variable `k` by `images[k]` (a ring homomorphism).
    pub fn substitute(&self, images: &[SparsePoly]) -> Result<SparsePoly, PolyError> {
        let span = self.terms.keys().map(Monomial::span).max().unwrap_or(0);
        if span > images.len() {
            return Err(PolyError::MissingVariable(self.var_name(span - 1)));
        }
        let mut table = None;
        for img in images {
            table = merge_tables(&table, &img.vars)?;
        }
        let mut powers: Vec<Vec<SparsePoly>> = vec![vec![SparsePoly::one()]; span];
        let mut out = SparsePoly::zero();
        out.vars = table;
        let mut acc: FxHashMap<Monomial, Coeff> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(c.clone());
            for (k, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[k].len() <= e as usize {
                    let next = &powers[k][powers[k].len() - 1] * &images[k];
                    powers[k].push(next);
                }
                t = &t * &powers[k][e as usize];
                if t.is_zero() {
                    break;
                }
            }
            for (tm, tc) in t.terms {
                accumulate(&mut acc, &tm, &tc);
            }
        }
        out.terms = acc;
        Ok(out)
    }

    fn var_name(&self, k: usize) -> String {
        self.vars
            .as_ref()
            .and_then(|t| t.name(k).map(str::to_string))
            .unwrap_or_else(|| format!("x{k}"))
    }
}

fn accumulate(terms: &mut FxHashMap<Monomial, Coeff>, m: &Monomial, c: &Coeff) {
    match terms.get_mut(m) {
        Some(existing) => {
            existing.add_assign(c);
            if existing.is_zero() {
                terms.remove(m);
            }
        }
        None => {
            if !c.is_zero() {
                terms.insert(m.clone(), c.clone());
            }
        }
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        merge_tables(&self.vars, &other.vars).is_ok() && self.terms == other.terms
    }
}

impl Eq for SparsePoly {}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl std::ops::$trait<&SparsePoly> for &SparsePoly {
            type Output = SparsePoly;
            /// Panics when the operands use different variable tables; use the
            /// `try_` form to get an error instead.
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                self.$try(rhs).expect("variable tables differ")
            }
        }
        impl std::ops::$trait<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$try(&rhs).expect("variable tables differ")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly::neg(self)
    }
}

impl std::ops::Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly::neg(&self)
    }
}

impl Ring for SparsePoly {
    fn zero() -> Self {
        SparsePoly::zero()
    }
    fn one() -> Self {
        SparsePoly::one()
    }
    fn from_i64(v: i64) -> Self {
        SparsePoly::constant(v)
    }
    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
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
        SparsePoly::neg(self)
    }
}

impl IntegralDomain for SparsePoly {
    fn exact_quotient(&self, divisor: &Self) -> Option<Self> {
        super::divide::divide_unverified(self, divisor).ok()
    }
}
