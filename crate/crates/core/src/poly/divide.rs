use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use super::{Coeff, Monomial, PolyError, SparsePoly};

/// Exact quotient `a / b`, checked by multiplying back.
pub fn exact_divide(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, PolyError> {
    let q = divide_unverified(a, b)?;
    if &q.try_mul(b)? != a {
        return Err(PolyError::NotDivisible);
    }
    Ok(q)
}

/// Long division that fails as soon as the remainder's leading term is not a
/// multiple of the divisor's leading term. In a monomial order this happens
/// exactly when `b` does not divide `a`, so a successful return is exact.
pub(crate) fn divide_unverified(a: &SparsePoly, b: &SparsePoly) -> Result<SparsePoly, PolyError> {
    let table = match (a.table(), b.table()) {
        (Some(x), Some(y)) if x != y => return Err(PolyError::VarTableMismatch),
        (Some(x), _) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    };
    let (lead_m, lead_c) = match b.leading_term() {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Err(PolyError::DivisionByZero),
    };
    if a.is_zero() {
        return Ok(SparsePoly::from_map(table, FxHashMap::default()));
    }
    if b.len() == 1 {
        let mut out = FxHashMap::default();
        for (m, c) in a.terms() {
            let qm = m.div(&lead_m).ok_or(PolyError::NotDivisible)?;
            out.insert(qm, c.div(&lead_c).expect("nonzero leading coefficient"));
        }
        return Ok(SparsePoly::from_map(table, out));
    }

    let rest: Vec<(Monomial, Coeff)> = b
        .terms()
        .filter(|(m, _)| **m != lead_m)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    let mut rem: BTreeMap<Monomial, Coeff> = a.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let mut quotient: FxHashMap<Monomial, Coeff> = FxHashMap::default();
    while let Some((m, c)) = rem.pop_last() {
        let qm = m.div(&lead_m).ok_or(PolyError::NotDivisible)?;
        let qc = c.div(&lead_c).expect("nonzero leading coefficient");
        let neg_qc = qc.neg();
        for (bm, bc) in &rest {
            let key = qm.mul(bm);
            match rem.get_mut(&key) {
                Some(existing) => {
                    existing.add_product(&neg_qc, bc);
                    if existing.is_zero() {
                        rem.remove(&key);
                    }
                }
                None => {
                    rem.insert(key, neg_qc.mul(bc));
                }
            }
        }
        quotient.insert(qm, qc);
    }
    Ok(SparsePoly::from_map(table, quotient))
}
