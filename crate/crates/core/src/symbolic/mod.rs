//! Symbolic determinants over generic variables and their factorizations.
//!
//! Variables are named `alpha_i` (inverse masses), `r_i_j` (the squared
//! distance `r_ij²` as one atom), `l_i_j` (unsquared distances, used only by
//! the Heron check) and `s_i_j`, `t_i_j` (generic table entries). Names use
//! 1-based indices.

mod certificate;
mod identities;

use std::sync::Arc;

pub use certificate::{
    factor_nbody, factor_nbody_equal_masses, factor_w, factor_w_diagonal_t, CertificateKind, FactorizationCertificate,
};
pub use identities::{
    heron_check, heron_product, kernel_witness, sign_dictionary, w_equals_minus_b, HeronReport,
    KernelWitness, SignDictionaryReport, ZRoute,
};

use crate::builders::{bordered, cayley_menger, mass_table, nbody_matrix};
use crate::domain::{DistanceVector, MassParams};
use crate::error::{Error, Result};
use crate::matrix::GenericEntryTable;
use crate::pairs::PairSpace;
use crate::poly::{poly_det, DetMethod, PolyError, SparsePoly, VarTable};

/// Environment variable that overrides both symbolic size caps.
pub const MAX_SYMBOLIC_N_ENV: &str = "NBODY_MAX_SYMBOLIC_N";

/// Largest `n` accepted by the symbolic n-body and `W` routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicLimits {
    pub nbody: usize,
    pub w: usize,
}

impl Default for SymbolicLimits {
    fn default() -> Self {
        Self { nbody: 4, w: 3 }
    }
}

impl SymbolicLimits {
    /// Caps with long-running sizes enabled: `n = 5` for the n-body
    /// determinant, `n = 4` for `W` (a 6×6 determinant in 32 variables).
    pub fn long_running() -> Self {
        Self { nbody: 5, w: 4 }
    }

    /// Default or long-running caps, with [`MAX_SYMBOLIC_N_ENV`] taking
    /// precedence for both when set.
    pub fn from_env(long_running: bool) -> Result<Self> {
        let base = if long_running { Self::long_running() } else { Self::default() };
        match std::env::var(MAX_SYMBOLIC_N_ENV) {
            Ok(v) => {
                let cap: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{MAX_SYMBOLIC_N_ENV}={v:?} is not an integer")))?;
                Ok(Self { nbody: cap, w: cap })
            }
            Err(_) => Ok(base),
        }
    }

    pub fn check_nbody(&self, n: usize) -> Result<()> {
        check(n, self.nbody)
    }

    pub fn check_w(&self, n: usize) -> Result<()> {
        check(n, self.w)
    }
}

fn check(n: usize, cap: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "symbolic determinants need at least 2 points",
        });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

pub(crate) fn table(names: Vec<String>) -> Arc<VarTable> {
    Arc::new(VarTable::new(names).expect("generated names are distinct and well formed"))
}

fn r_names(n: usize) -> Vec<String> {
    PairSpace::new(n)
        .iter()
        .map(|p| format!("r_{}_{}", p.i() + 1, p.j() + 1))
        .collect()
}

pub(crate) fn var_block(t: &Arc<VarTable>, offset: usize, count: usize) -> Vec<SparsePoly> {
    (offset..offset + count).map(|k| SparsePoly::var(t, k)).collect()
}

/// Generic masses and squared distances over one variable table
/// `alpha_1 … alpha_n, r_1_2 … r_{n−1}_n` (or a single `alpha` when the
/// masses are equal).
#[derive(Clone, Debug)]
pub struct NbodySymbols {
    pub table: Arc<VarTable>,
    pub alpha: MassParams<SparsePoly>,
    pub r: DistanceVector<SparsePoly>,
}

impl NbodySymbols {
    pub fn new(n: usize) -> Self {
        let mut names: Vec<String> = (1..=n).map(|i| format!("alpha_{i}")).collect();
        names.extend(r_names(n));
        let t = table(names);
        let alpha = MassParams::new(var_block(&t, 0, n));
        let r = distance_symbols(&t, n, n);
        Self { table: t, alpha, r }
    }

    pub fn equal_masses(n: usize) -> Self {
        let mut names = vec!["alpha".to_string()];
        names.extend(r_names(n));
        let t = table(names);
        let alpha = MassParams::new(vec![SparsePoly::var(&t, 0); n]);
        let r = distance_symbols(&t, 1, n);
        Self { table: t, alpha, r }
    }

    pub fn n(&self) -> usize {
        self.r.n()
    }

    /// Indices of the mass variables in the table.
    pub fn alpha_vars(&self) -> Vec<usize> {
        (0..self.table.len() - self.r.pairs().len()).collect()
    }

    /// Indices of the squared-distance atoms in the table.
    pub fn r_vars(&self) -> Vec<usize> {
        (self.table.len() - self.r.pairs().len()..self.table.len()).collect()
    }
}

fn distance_symbols(t: &Arc<VarTable>, offset: usize, n: usize) -> DistanceVector<SparsePoly> {
    let len = PairSpace::new(n).len();
    DistanceVector::from_squared_unchecked(n, var_block(t, offset, len))
        .expect("one atom per pair")
}

/// Two generic `n×n` tables over `s_1_1 … s_n_n, t_1_1 … t_n_n`.
#[derive(Clone, Debug)]
pub struct TableSymbols {
    pub table: Arc<VarTable>,
    pub s: GenericEntryTable<SparsePoly>,
    pub t: GenericEntryTable<SparsePoly>,
}

impl TableSymbols {
    pub fn new(n: usize) -> Self {
        let mut names = Vec::with_capacity(2 * n * n);
        for prefix in ["s", "t"] {
            for i in 1..=n {
                for j in 1..=n {
                    names.push(format!("{prefix}_{i}_{j}"));
                }
            }
        }
        let t = table(names);
        let s_table = GenericEntryTable::from_fn(n, |i, j| SparsePoly::var(&t, i * n + j));
        let t_table = GenericEntryTable::from_fn(n, |i, j| SparsePoly::var(&t, n * n + i * n + j));
        Self {
            table: t,
            s: s_table,
            t: t_table,
        }
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }
}

/// `Δ⁽ⁿ⁾ = det B` over generic masses and squared distances.
pub fn symbolic_nbody_det(n: usize, limits: &SymbolicLimits) -> Result<SparsePoly> {
    limits.check_nbody(n)?;
    symbolic_nbody_det_from(&NbodySymbols::new(n))
}

pub(crate) fn symbolic_nbody_det_from(sym: &NbodySymbols) -> Result<SparsePoly> {
    poly_det(&nbody_matrix(&sym.alpha, &sym.r)?, DetMethod::default())
}

/// Cayley–Menger determinant `δ⁽ⁿ⁾` over the atoms `r_i_j`.
pub fn symbolic_cm_det(n: usize) -> Result<SparsePoly> {
    if n < 2 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "the Cayley-Menger determinant needs at least 2 points",
        });
    }
    let t = table(r_names(n));
    let r = distance_symbols(&t, 0, n);
    poly_det(&cayley_menger(&r), DetMethod::default())
}

/// `det C_A` for `A = diag(alpha_1 … alpha_n)`.
pub fn symbolic_ca_det(n: usize) -> Result<SparsePoly> {
    if n < 1 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "C_A needs at least one mass",
        });
    }
    let t = table((1..=n).map(|i| format!("alpha_{i}")).collect());
    let alpha = MassParams::new(var_block(&t, 0, n));
    poly_det(&bordered(&mass_table(&alpha)), DetMethod::default())
}

/// Reattaches `p` to `table` when it came out of a computation with constant
/// entries only.
pub(crate) fn in_table(p: SparsePoly, table: &Arc<VarTable>) -> Result<SparsePoly> {
    p.with_table(table).map_err(|e: PolyError| e.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn two_body_determinant() {
        let d = symbolic_nbody_det(2, &SymbolicLimits::default()).unwrap();
        let t = NbodySymbols::new(2).table;
        assert_eq!(d, parse_poly("2*alpha_1*r_1_2 + 2*alpha_2*r_1_2", &t).unwrap());
    }

    #[test]
    fn cm_small() {
        let t2 = table(r_names(2));
        assert_eq!(symbolic_cm_det(2).unwrap(), parse_poly("2*r_1_2", &t2).unwrap());
        assert!(symbolic_cm_det(1).is_err());
    }

    #[test]
    fn ca_two() {
        let t = table(vec!["alpha_1".into(), "alpha_2".into()]);
        assert_eq!(symbolic_ca_det(2).unwrap(), parse_poly("-alpha_1 - alpha_2", &t).unwrap());
        assert_eq!(symbolic_ca_det(1).unwrap(), SparsePoly::constant(-1));
    }

    #[test]
    fn caps() {
        let limits = SymbolicLimits::default();
        assert!(matches!(limits.check_nbody(5), Err(Error::CapExceeded { n: 5, cap: 4 })));
        assert!(matches!(limits.check_w(1), Err(Error::UnsupportedSize { .. })));
        assert!(SymbolicLimits::long_running().check_nbody(5).is_ok());
    }

    #[test]
    fn variable_classes() {
        let sym = NbodySymbols::new(3);
        assert_eq!(sym.alpha_vars(), vec![0, 1, 2]);
        assert_eq!(sym.r_vars(), vec![3, 4, 5]);
        let eq = NbodySymbols::equal_masses(3);
        assert_eq!(eq.alpha_vars(), vec![0]);
        assert_eq!(eq.table.name(1), Some("r_1_2"));
    }
}
