//! Canonical text form of polynomials.
//!
//! Terms appear in descending graded-lex order as `c * v^e * w`, joined by
//! ` + `. The coefficient is always written (possibly negative or `p/q`) and
//! exponent 1 is omitted; the zero polynomial is `0`. The parser also accepts
//! `-` between terms, implicit unit coefficients and arbitrary whitespace.

use std::fmt;
use std::sync::Arc;

use super::{Coeff, Monomial, PolyError, SparsePoly, VarTable};
use crate::scalar::parse_rational;

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = self
                    .table()
                    .and_then(|t| t.name(v).map(str::to_string))
                    .unwrap_or_else(|| format!("x{v}"));
                if e == 1 {
                    write!(f, " * {name}")?;
                } else {
                    write!(f, " * {name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the canonical form (or a looser hand-written variant) over `table`.
pub fn parse_poly(text: &str, table: &Arc<VarTable>) -> Result<SparsePoly, PolyError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(PolyError::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    for (negative, body) in split_terms(&compact)? {
        let (m, mut c) = parse_term(body, table)?;
        if negative {
            c = c.neg();
        }
        terms.push((m, c));
    }
    Ok(SparsePoly::from_terms(Some(table.clone()), terms))
}

/// Splits on top-level `+`/`-`. A sign at the start of a term, or directly
/// after `*`, `^` or `/`, belongs to the following factor.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, PolyError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let mut k = 0;
    while k < bytes.len() {
        let b = bytes[k];
        if (b == b'+' || b == b'-') && k > start && !matches!(bytes[k - 1], b'*' | b'^' | b'/') {
            out.push((negative, &s[start..k]));
            negative = b == b'-';
            start = k + 1;
        } else if (b == b'+' || b == b'-') && k == start && matches!(bytes.get(k + 1), Some(b'+' | b'-')) {
            return Err(PolyError::Parse(format!("repeated sign near {:?}", &s[k..])));
        }
        k += 1;
    }
    if start >= bytes.len() {
        return Err(PolyError::Parse("dangling sign".into()));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

fn parse_term(body: &str, table: &Arc<VarTable>) -> Result<(Monomial, Coeff), PolyError> {
    let mut coeff = Coeff::one();
    let mut exps: Vec<u8> = vec![0; table.len()];
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(PolyError::Parse(format!("empty factor in {body:?}")));
        }
        let starts_numeric = factor
            .trim_start_matches(['-', '+'])
            .starts_with(|c: char| c.is_ascii_digit() || c == '.');
        if starts_numeric {
            let r = parse_rational(factor)
                .ok_or_else(|| PolyError::Parse(format!("bad number {factor:?}")))?;
            coeff = coeff.mul(&Coeff::from_rational(r));
            continue;
        }
        let (name, exponent) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u8 = e
                    .parse()
                    .map_err(|_| PolyError::Parse(format!("bad exponent in {factor:?}")))?;
                (n, e)
            }
            None => (factor, 1),
        };
        let (name, sign) = match name.strip_prefix('-') {
            Some(rest) => (rest, true),
            None => (name, false),
        };
        if sign {
            coeff = coeff.neg();
        }
        let v = table
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        exps[v] = exps[v]
            .checked_add(exponent)
            .ok_or_else(|| PolyError::Parse("exponent overflow".into()))?;
    }
    Ok((Monomial::from_exponents(&exps), coeff))
}
