use std::fmt;

use super::{in_table, symbolic_nbody_det_from, table, var_block, NbodySymbols, SymbolicLimits, TableSymbols};
use crate::builders::{bordered, cayley_menger, mass_table, w_matrix};
use crate::domain::{elementary_symmetric, MassParams};
use crate::error::{Error, Result};
use crate::matrix::GenericEntryTable;
use crate::poly::{exact_divide, poly_det, DetMethod, PolyError, SparsePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// `Δ⁽ⁿ⁾ = e_{n−1}(α) · δ⁽ⁿ⁾ · σ⁽ⁿ⁾`.
    Nbody,
    /// Same, with all masses set to one symbol `alpha`.
    NbodyEqualMasses,
    /// `det W_{S,T} = det C_S · det C_T · Z_{S,T}`.
    W,
    /// The same with `T = diag(alpha_1 … alpha_n)` and `S` generic.
    WDiagonalT,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Nbody => "nbody",
            CertificateKind::NbodyEqualMasses => "nbody-equal-masses",
            CertificateKind::W => "w",
            CertificateKind::WDiagonalT => "w-diagonal-t",
        })
    }
}

/// A divisibility `lhs = factors[0] · … · quotient`, checked by exact
/// re-multiplication before it is handed out.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorizationCertificate {
    pub kind: CertificateKind,
    pub n: usize,
    pub lhs: SparsePoly,
    pub factors: Vec<SparsePoly>,
    pub quotient: SparsePoly,
    pub verified: bool,
}

impl FactorizationCertificate {
    /// Divides `lhs` by each factor in turn; any remainder is reported as a
    /// failed identity, since the factorization is a theorem.
    fn build(kind: CertificateKind, n: usize, lhs: SparsePoly, factors: Vec<SparsePoly>) -> Result<Self> {
        let mut quotient = lhs.clone();
        for f in &factors {
            quotient = exact_divide(&quotient, f).map_err(|e| match e {
                PolyError::NotDivisible => {
                    Error::IdentityFailed(format!("{kind} determinant for n = {n} is not divisible by {f}"))
                }
                other => other.into(),
            })?;
        }
        let mut cert = Self {
            kind,
            n,
            lhs,
            factors,
            quotient,
            verified: false,
        };
        cert.verified = cert.recheck()?;
        if !cert.verified {
            return Err(Error::IdentityFailed(format!(
                "{kind} certificate for n = {n} does not re-multiply to its determinant"
            )));
        }
        Ok(cert)
    }

    /// Recomputes `Π factors · quotient` and compares it with `lhs`.
    pub fn recheck(&self) -> Result<bool> {
        let mut product = self.quotient.clone();
        for f in &self.factors {
            product = product.try_mul(f)?;
        }
        Ok(product == self.lhs)
    }
}

/// Factors `Δ⁽ⁿ⁾` by `e_{n−1}(α)` and then by `δ⁽ⁿ⁾`.
pub fn factor_nbody(n: usize, limits: &SymbolicLimits) -> Result<FactorizationCertificate> {
    limits.check_nbody(n)?;
    nbody_certificate(CertificateKind::Nbody, NbodySymbols::new(n))
}

/// [`factor_nbody`] with every `α_i` replaced by a single symbol.
pub fn factor_nbody_equal_masses(n: usize, limits: &SymbolicLimits) -> Result<FactorizationCertificate> {
    limits.check_nbody(n)?;
    nbody_certificate(CertificateKind::NbodyEqualMasses, NbodySymbols::equal_masses(n))
}

fn nbody_certificate(kind: CertificateKind, sym: NbodySymbols) -> Result<FactorizationCertificate> {
    let n = sym.n();
    let lhs = symbolic_nbody_det_from(&sym)?;
    let e = in_table(elementary_symmetric(n - 1, &sym.alpha)?, &sym.table)?;
    let delta = in_table(poly_det(&cayley_menger(&sym.r), DetMethod::default())?, &sym.table)?;
    FactorizationCertificate::build(kind, n, lhs, vec![e, delta])
}

/// Factors `det W_{S,T}` by `det C_S` and `det C_T` over `2n²` generic entries.
pub fn factor_w(n: usize, limits: &SymbolicLimits) -> Result<FactorizationCertificate> {
    limits.check_w(n)?;
    let sym = TableSymbols::new(n);
    let lhs = in_table(poly_det(&w_matrix(&sym.s, &sym.t)?, DetMethod::default())?, &sym.table)?;
    let cs = in_table(poly_det(&bordered(&sym.s), DetMethod::default())?, &sym.table)?;
    let ct = in_table(poly_det(&bordered(&sym.t), DetMethod::default())?, &sym.table)?;
    FactorizationCertificate::build(CertificateKind::W, n, lhs, vec![cs, ct])
}

/// Factors `det W_{S,A}` with `S` generic over `s_i_j` and `A` diagonal over
/// `alpha_i`. Its `C(n,2)×C(n,2)` determinant matches the n-body matrix in
/// size, so it obeys the n-body cap; the generic `W` at `n = 4` does not fit
/// in desk-scale memory.
pub fn factor_w_diagonal_t(n: usize, limits: &SymbolicLimits) -> Result<FactorizationCertificate> {
    limits.check_nbody(n)?;
    let mut names = Vec::with_capacity(n * n + n);
    for i in 1..=n {
        for j in 1..=n {
            names.push(format!("s_{i}_{j}"));
        }
    }
    names.extend((1..=n).map(|i| format!("alpha_{i}")));
    let t = table(names);
    let s = GenericEntryTable::from_fn(n, |i, j| SparsePoly::var(&t, i * n + j));
    let a = mass_table(&MassParams::new(var_block(&t, n * n, n)));
    let lhs = in_table(poly_det(&w_matrix(&s, &a)?, DetMethod::default())?, &t)?;
    let cs = in_table(poly_det(&bordered(&s), DetMethod::default())?, &t)?;
    let ca = in_table(poly_det(&bordered(&a), DetMethod::default())?, &t)?;
    FactorizationCertificate::build(CertificateKind::WDiagonalT, n, lhs, vec![cs, ca])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn three_body_sigma() {
        let cert = factor_nbody(3, &SymbolicLimits::default()).unwrap();
        assert!(cert.verified);
        let t = NbodySymbols::new(3).table;
        let sigma = parse_poly("-2*alpha_3*r_1_2 - 2*alpha_2*r_1_3 - 2*alpha_1*r_2_3", &t).unwrap();
        assert_eq!(cert.quotient, sigma);
    }

    #[test]
    fn two_body_sigma_is_one() {
        let cert = factor_nbody(2, &SymbolicLimits::default()).unwrap();
        assert_eq!(cert.quotient, SparsePoly::one());
    }

    #[test]
    fn w_two_quotient_is_one() {
        let cert = factor_w(2, &SymbolicLimits::default()).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.quotient, SparsePoly::one());
        assert_eq!(cert.lhs.len(), 16);
    }

    #[test]
    fn tampered_certificate_fails_recheck() {
        let mut cert = factor_nbody(2, &SymbolicLimits::default()).unwrap();
        cert.quotient = SparsePoly::constant(2);
        assert!(!cert.recheck().unwrap());
    }

    #[test]
    fn non_factor_is_rejected() {
        let sym = NbodySymbols::new(2);
        let lhs = sym.r.squared(0, 1);
        let bad = sym.alpha.get(0).clone();
        let err = FactorizationCertificate::build(CertificateKind::Nbody, 2, lhs, vec![bad]).unwrap_err();
        assert!(matches!(err, Error::IdentityFailed(_)));
    }
}
