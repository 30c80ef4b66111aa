use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{factor_nbody, factor_w, factor_w_diagonal_t, symbolic_cm_det, NbodySymbols, SymbolicLimits, TableSymbols};
use crate::analysis::pair_products;
use crate::builders::{bordered, edm_table, mass_table, nbody_matrix, w_matrix};
use crate::domain::{DistanceVector, MassParams};
use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, null_space};
use crate::matrix::GenericEntryTable;
use crate::poly::{poly_det, DetMethod, SparsePoly, VarTable};
use crate::scalar::{Rational, Ring};

/// `W_{R,A} = −B` entry by entry, with `R` the squared-distance table and
/// `A = diag(α)`. Works for symbolic and numeric scalars alike.
pub fn w_equals_minus_b<T: Ring + PartialEq>(alpha: &MassParams<T>, r: &DistanceVector<T>) -> Result<bool> {
    let w = w_matrix(&edm_table(r), &mass_table(alpha))?;
    let b = nbody_matrix(alpha, r)?;
    Ok(w.entries().iter().zip(b.entries()).all(|(w, b)| *w == b.negated()))
}

/// How `Z_{R,A}` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZRoute {
    /// Quotient of the fully generic `det W_{S,T}`, then `S → R`, `T → A`.
    Generic,
    /// Quotient of `det W_{S,A}` with generic `S`, then `S → R`.
    DiagonalT,
}

/// Outcome of the symbolic comparison between `W_{R,A}` and the n-body matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct SignDictionaryReport {
    pub n: usize,
    /// `(−1)^{C(n,2)}`.
    pub sign: i64,
    /// `det W_{R,A}`.
    pub det_w: SparsePoly,
    /// `Δ⁽ⁿ⁾`.
    pub delta: SparsePoly,
    /// `σ⁽ⁿ⁾` from the n-body factorization.
    pub sigma: SparsePoly,
    /// The quotient `Z_{S,T}` after `S → R`, `T → A`.
    pub z_ra: SparsePoly,
    pub z_route: ZRoute,
}

/// Checks `W_{R,A} = −B`, `det W_{R,A} = (−1)^{C(n,2)} Δ⁽ⁿ⁾` and
/// `σ⁽ⁿ⁾ = (−1)^{C(n,2)+1} Z_{R,A}` symbolically for `2 ≤ n ≤ 4`.
///
/// `Z_{R,A}` comes from specializing the quotient of [`factor_w`] when
/// `limits.w` admits `n`, and otherwise from [`factor_w_diagonal_t`]
/// (generic `S`, `T = A` from the start). Either way the division happens
/// before `S` is replaced by `R`, so the comparison with `σ⁽ⁿ⁾` is not a
/// restatement of the determinant identity.
pub fn sign_dictionary(n: usize, limits: &SymbolicLimits) -> Result<SignDictionaryReport> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedSize {
            n,
            reason: "the symbolic sign dictionary covers 2 <= n <= 4",
        });
    }
    let sym = NbodySymbols::new(n);
    if !w_equals_minus_b(&sym.alpha, &sym.r)? {
        return Err(Error::IdentityFailed(format!("W_(R,A) != -B for n = {n}")));
    }
    let pairs = n * (n - 1) / 2;
    let sign: i64 = if pairs.is_multiple_of(2) { 1 } else { -1 };

    let r_table = edm_table(&sym.r);
    let a_table = mass_table(&sym.alpha);
    let det_w = poly_det(&w_matrix(&r_table, &a_table)?, DetMethod::default())?;
    let nbody = factor_nbody(n, &SymbolicLimits { nbody: n, w: 0 })?;
    let delta = nbody.lhs.clone();
    if det_w != delta.scale(&sign.into()) {
        return Err(Error::IdentityFailed(format!(
            "det W_(R,A) != (-1)^{pairs} Delta for n = {n}"
        )));
    }

    let r_images = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| r_table.get(i, j).clone());
    let (z_ra, z_route) = if limits.check_w(n).is_ok() {
        let generic = factor_w(n, limits)?;
        let a_images = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| a_table.get(i, j).clone());
        let images: Vec<SparsePoly> = r_images.chain(a_images).collect();
        debug_assert_eq!(images.len(), TableSymbols::new(n).table.len());
        (generic.quotient.substitute(&images)?, ZRoute::Generic)
    } else {
        let partial = factor_w_diagonal_t(n, &SymbolicLimits { nbody: n, w: 0 })?;
        // Table order: s_1_1 … s_n_n, alpha_1 … alpha_n.
        let images: Vec<SparsePoly> = r_images.chain(sym.alpha.alpha().iter().cloned()).collect();
        (partial.quotient.substitute(&images)?, ZRoute::DiagonalT)
    };
    let sigma = nbody.quotient;
    if sigma != z_ra.scale(&(-sign).into()) {
        return Err(Error::IdentityFailed(format!(
            "sigma != (-1)^({pairs}+1) Z_(R,A) for n = {n}"
        )));
    }
    Ok(SignDictionaryReport {
        n,
        sign,
        det_w,
        delta,
        sigma,
        z_ra,
        z_route,
    })
}

/// `−(a+b+c)(−a+b+c)(a−b+c)(a+b−c)` for side lengths `a, b, c`.
pub fn heron_product<T: Ring>(a: &T, b: &T, c: &T) -> T {
    let sum = a.plus(b).plus(c);
    let f1 = b.plus(c).minus(a);
    let f2 = a.plus(c).minus(b);
    let f3 = a.plus(b).minus(c);
    sum.times(&f1).times(&f2).times(&f3).negated()
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeronReport {
    /// `δ⁽³⁾` in the atoms `r_i_j`.
    pub delta: SparsePoly,
    /// `δ⁽³⁾` after `r_i_j → l_i_j²`.
    pub delta_in_lengths: SparsePoly,
    /// The Heron product in the lengths `l_i_j`.
    pub heron: SparsePoly,
}

/// Expands the Heron product in unsquared lengths and compares it with the
/// three-point Cayley–Menger determinant.
pub fn heron_check() -> Result<HeronReport> {
    let lengths = Arc::new(VarTable::new(["l_1_2", "l_1_3", "l_2_3"])?);
    let l: Vec<SparsePoly> = (0..3).map(|k| SparsePoly::var(&lengths, k)).collect();
    let delta = symbolic_cm_det(3)?;
    let squares: Vec<SparsePoly> = l.iter().map(|v| v * v).collect();
    let delta_in_lengths = delta.substitute(&squares)?;
    let heron = heron_product(&l[0], &l[1], &l[2]);
    if delta_in_lengths != heron {
        return Err(Error::IdentityFailed(format!(
            "Heron product {heron} differs from {delta_in_lengths}"
        )));
    }
    Ok(HeronReport {
        delta,
        delta_in_lengths,
        heron,
    })
}

/// Null vector `(x, v)` of a singular `C_S` and the pair products of `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelWitness {
    /// Integer, primitive, first nonzero entry positive.
    pub x: Vec<Rational>,
    pub v: Rational,
    /// `z_{ij} = x_i x_j` in pair order.
    pub z: Vec<Rational>,
}

impl KernelWitness {
    /// Whether `W_{S,T} z = 0` for the given `t`.
    pub fn annihilates(&self, s: &GenericEntryTable<Rational>, t: &GenericEntryTable<Rational>) -> Result<bool> {
        let w = w_matrix(s, t)?;
        Ok(w.apply(&self.z)?.iter().all(Zero::is_zero))
    }
}

/// Solves `C_S (x, v) = 0` exactly and returns the normalized witness.
pub fn kernel_witness(s: &GenericEntryTable<Rational>) -> Result<KernelWitness> {
    let n = s.n();
    if n < 2 {
        return Err(Error::UnsupportedSize {
            n,
            reason: "a kernel witness needs at least 2 points",
        });
    }
    let c = bordered(s);
    let det = det_bareiss(&c)?;
    if !Zero::is_zero(&det) {
        return Err(Error::NonsingularBordered(det.to_string()));
    }
    let kernel = null_space(&c)
        .into_iter()
        .next()
        .ok_or_else(|| Error::IdentityFailed("zero determinant but trivial null space".into()))?;
    let kernel = primitive(&kernel);
    let v = kernel[n].clone();
    let x = kernel[..n].to_vec();
    let z = pair_products(&x);
    Ok(KernelWitness { x, v, z })
}

/// Scales to coprime integers with the first nonzero entry positive.
fn primitive(vector: &[Rational]) -> Vec<Rational> {
    let lcm = vector
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = vector.iter().map(|q| (q * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if gcd.is_zero() {
        return vector.to_vec();
    }
    let sign = match ints.iter().find(|v| !v.is_zero()) {
        Some(first) if first.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter()
        .map(|v| Rational::from_integer(v / &gcd * &sign))
        .collect()
}
