//! Seeded property suites over random configurations, plus the fixed
//! symbolic identity checks. Each suite returns a report with the number of
//! checks made and a message per failed check.
//!
//! Randomized suites cycle the number of points through `min..=max_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use crate::analysis::{
    biquadratic_qw, configuration_form, embed, gram_volume_sq, mass_form, menger_volume_sq, quadratic_form_q,
    quadratic_form_qk, quartic_qb, reduced_form_split, cone_membership, ConeClass,
};
use crate::builders::{bordered, cayley_menger, lift, nbody_matrix, reduced_edm};
use crate::domain::{DistanceVector, MassParams};
use crate::error::{Error, Result};
use crate::linalg::det_bareiss;
use crate::matrix::{GenericEntryTable, Matrix};
use crate::pairs::PairSpace;
use crate::poly::{poly_det, DetMethod, SparsePoly};
use crate::random::{self, SampleRng};
use crate::scalar::{int, Rational, RealField, Ring};
use crate::symbolic::{
    heron_check, kernel_witness, sign_dictionary, symbolic_ca_det, symbolic_nbody_det, w_equals_minus_b,
    SymbolicLimits, TableSymbols,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Positivity of the n-body determinant and the signs of its factors.
    Signs,
    /// Vanishing of the determinants on constructed singular configurations.
    Singular,
    /// `δ⁽ⁿ⁾ = (−1)ⁿ det M_k` for every base point.
    Cmdk,
    /// Distances → points → distances.
    Embed,
    /// Quadratic, biquadratic and quartic form identities.
    Forms,
    /// Cayley–Menger volume against a Gram-determinant volume.
    Volume,
    /// Symbolic `Δ⁽ⁿ⁾` evaluated against numeric determinants.
    Eval,
    /// Kernel vectors of `W_{S,T}` from singular `C_S`.
    Witness,
    /// Content of `det C_S`.
    Content,
    /// `det C_A = −e_{n−1}(α)`.
    LemmaCa,
    Heron,
    /// `W_{R,A}` against the n-body matrix.
    SignDictionary,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Signs,
        Suite::Singular,
        Suite::Cmdk,
        Suite::Embed,
        Suite::Forms,
        Suite::Volume,
        Suite::Eval,
        Suite::Witness,
        Suite::Content,
        Suite::LemmaCa,
        Suite::Heron,
        Suite::SignDictionary,
    ];

    /// Whether the suite draws random samples (the rest are fixed identities).
    pub fn is_randomized(&self) -> bool {
        !matches!(self, Suite::Content | Suite::LemmaCa | Suite::Heron)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Signs => "signs",
            Suite::Singular => "singular",
            Suite::Cmdk => "cmdk",
            Suite::Embed => "embed",
            Suite::Forms => "forms",
            Suite::Volume => "volume",
            Suite::Eval => "eval",
            Suite::Witness => "witness",
            Suite::Content => "content",
            Suite::LemmaCa => "lemma-ca",
            Suite::Heron => "heron",
            Suite::SignDictionary => "sign-dictionary",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(Suite::name).collect();
                Error::Parse(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    /// Relative zero threshold for floating-point checks.
    pub tol: f64,
    pub limits: SymbolicLimits,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: 4,
            samples: 100,
            seed: 0,
            tol: crate::analysis::DEFAULT_TOL,
            limits: SymbolicLimits::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub max_n: usize,
    pub samples: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: n <= {}, ", self.suite, self.max_n)?;
        if self.suite.is_randomized() {
            write!(f, "{} samples, ", self.samples)?;
        }
        write!(f, "{} checks, {}", self.checks, if self.passed() { "pass" } else { "FAIL" })?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rng = random::rng(cfg.seed);
    let mut tally = Tally::new();
    match suite {
        Suite::Signs => signs(cfg, &mut rng, &mut tally)?,
        Suite::Singular => singular(cfg, &mut rng, &mut tally)?,
        Suite::Cmdk => cmdk(cfg, &mut rng, &mut tally)?,
        Suite::Embed => embedding(cfg, &mut rng, &mut tally)?,
        Suite::Forms => forms(cfg, &mut rng, &mut tally)?,
        Suite::Volume => volume(cfg, &mut rng, &mut tally)?,
        Suite::Eval => evaluation(cfg, &mut rng, &mut tally)?,
        Suite::Witness => witness(cfg, &mut rng, &mut tally)?,
        Suite::Content => content(cfg, &mut tally)?,
        Suite::LemmaCa => lemma_ca(cfg, &mut tally)?,
        Suite::Heron => {
            let report = heron_check()?;
            tally.check(report.delta_in_lengths == report.heron, || "Heron product differs".into());
        }
        Suite::SignDictionary => dictionary(cfg, &mut rng, &mut tally)?,
    }
    Ok(SuiteReport {
        suite,
        max_n: cfg.max_n,
        samples: cfg.samples,
        checks: tally.checks,
        failures: tally.failures,
    })
}

fn sizes(cfg: &SuiteConfig, min: usize) -> Result<impl Iterator<Item = (usize, usize)>> {
    if cfg.max_n < min {
        return Err(Error::UnsupportedSize {
            n: cfg.max_n,
            reason: "suite needs more points",
        });
    }
    let span = cfg.max_n - min + 1;
    Ok((0..cfg.samples).map(move |s| (s, min + s % span)))
}

fn sign_of_power(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

/// Hadamard's bound `Π_i ‖row_i‖₂`, the natural size of `|det m|`.
pub fn hadamard_bound(m: &Matrix<f64>) -> f64 {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|v| v * v).sum::<f64>().sqrt())
        .product()
}

fn symmetric_eigenvalues(m: &Matrix<f64>) -> Vec<f64> {
    nalgebra::SymmetricEigen::new(m.to_nalgebra()).eigenvalues.iter().copied().collect()
}

fn signs(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let points = random::nonsingular_rational_configuration(rng, n);
        let alpha = random::positive_masses(rng, n);
        let r = points.distances();
        let b = nbody_matrix(&alpha, &r)?;
        let big_delta = det_bareiss(&b)?;
        let e = alpha.elementary_symmetric(n - 1)?;
        let delta = det_bareiss(&cayley_menger(&r))?;
        let zero = <Rational as Ring>::zero();
        tally.check(big_delta > zero, || format!("sample {s} (n = {n}): Delta = {big_delta} <= 0"));
        tally.check(e > zero, || format!("sample {s} (n = {n}): e = {e} <= 0"));
        let signed_delta = sign_of_power(n) * &delta;
        tally.check(signed_delta > zero, || format!("sample {s} (n = {n}): (-1)^n delta = {signed_delta} <= 0"));
        if delta != zero && e != zero {
            let sigma = &big_delta / (&e * &delta);
            let signed_sigma = sign_of_power(n) * &sigma;
            tally.check(signed_sigma > zero, || format!("sample {s} (n = {n}): (-1)^n sigma = {signed_sigma} <= 0"));
        }
        let eig = symmetric_eigenvalues(&b.map(RealField::to_f64));
        let scale = eig.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let min = eig.iter().copied().fold(f64::INFINITY, f64::min);
        tally.check(min > cfg.tol * scale, || {
            format!("sample {s} (n = {n}): min eigenvalue {min:e} <= {:e} x {scale:e}", cfg.tol)
        });
    }
    Ok(())
}

/// Bound on `|Δ⁽ⁿ⁾|` relative to the Hadamard bound of `B` for singular points.
pub const SINGULAR_DET_TOL: f64 = 1e-8;

fn singular(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let exact = random::singular_rational_configuration(rng, n);
        let alpha = random::positive_masses(rng, n);
        tally.check(exact.is_singular(0.0), || format!("sample {s} (n = {n}): not singular"));
        let r = exact.distances();
        tally.check(Ring::is_zero(&det_bareiss(&cayley_menger(&r))?), || {
            format!("sample {s} (n = {n}): exact delta nonzero")
        });
        let points = exact.to_f64();
        tally.check(points.is_singular(cfg.tol), || {
            format!("sample {s} (n = {n}): floating rank test misses the singularity")
        });
        let b = nbody_matrix(&masses_f64(&alpha), &points.distances())?;
        let det = crate::analysis::determinant(&b)?;
        let scale = hadamard_bound(&b);
        tally.check(det.abs() <= SINGULAR_DET_TOL * scale, || {
            format!("sample {s} (n = {n}): |Delta| = {:e} > {SINGULAR_DET_TOL:e} x {scale:e}", det.abs())
        });
    }
    Ok(())
}

fn masses_f64(alpha: &MassParams<Rational>) -> MassParams<f64> {
    MassParams::new(alpha.alpha().iter().map(RealField::to_f64).collect())
}

fn cmdk(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let d = rng.gen_range(1..=n - 1);
        let r = random::rational_configuration(rng, n, d).distances();
        let delta = det_bareiss(&cayley_menger(&r))?;
        for k in 0..n {
            let mk = det_bareiss(&reduced_edm(&r, k)?)?;
            tally.check(sign_of_power(n) * &mk == delta, || {
                format!("sample {s} (n = {n}, k = {}): det M_k = {mk}, delta = {delta}", k + 1)
            });
        }
    }
    Ok(())
}

/// Largest relative error between two distance vectors.
pub fn relative_distance_error(expected: &DistanceVector<f64>, got: &DistanceVector<f64>) -> f64 {
    expected
        .squared_entries()
        .iter()
        .zip(got.squared_entries())
        .map(|(a, b)| {
            let (a, b) = (a.sqrt(), b.max(0.0).sqrt());
            if a == 0.0 {
                b
            } else {
                (a - b).abs() / a
            }
        })
        .fold(0.0, f64::max)
}

/// Relative distance error allowed after an embedding round trip.
pub const EMBED_TOL: f64 = 1e-9;

fn embedding(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let k = rng.gen_range(1..=n - 1);
        let d = rng.gen_range(k..=n);
        let points = random::float_configuration_of_rank(rng, n, k, d);
        let r = points.distances();
        let e = embed(&r, cfg.tol)?;
        let err = relative_distance_error(&r, &e.points.distances());
        tally.check(err <= EMBED_TOL, || format!("sample {s} (n = {n}): relative error {err:e}"));
        let rank = points.affine_rank(cfg.tol);
        tally.check(e.d == rank && rank == k, || {
            format!("sample {s} (n = {n}): embedded in {} dimensions, affine rank {rank}, built with {k}", e.d)
        });
    }
    let outside = DistanceVector::from_distances(3, vec![int(1), int(1), int(3)])?;
    let class = cone_membership(&outside, 0.0)?.class;
    tally.check(class == ConeClass::Outside, || format!("r = (1,1,3) classified {class}"));
    Ok(())
}

/// Relative tolerance for the floating quartic factorization.
pub const QUARTIC_TOL: f64 = 1e-9;

fn forms(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let points = random::rational_configuration(rng, n, n - 1);
        let r = points.distances();
        let alpha = random::positive_masses(rng, n);
        let x = random::rational_hyperplane_vector(rng, n);
        let y = random::rational_hyperplane_vector(rng, n);
        let q = quadratic_form_q(&r, &x)?;
        for k in 0..n {
            let qk = quadratic_form_qk(&r, k, &x)?;
            tally.check(q == -qk.clone(), || format!("sample {s} (n = {n}, k = {}): q = {q}, q_k = {qk}", k + 1));
        }
        tally.check(q <= <Rational as Ring>::zero(), || format!("sample {s} (n = {n}): xDx = {q} > 0"));

        let (st, tt) = (random::rational_table(rng, n), random::rational_table(rng, n));
        let lhs = biquadratic_qw(&st, &tt, &x, &y)?;
        let rhs = st.bilinear(&x, &y)? * tt.bilinear(&x, &y)?;
        tally.check(lhs == rhs, || format!("sample {s} (n = {n}): Q_W = {lhs}, product = {rhs}"));

        let quartic = quartic_qb(&alpha, &r, &x)?;
        let factored = int(2) * mass_form(&alpha, &x)? * configuration_form(&points, &x)?;
        tally.check(quartic == factored, || format!("sample {s} (n = {n}): Q_B = {quartic}, 2ap = {factored}"));

        let xf = random::float_hyperplane_vector(rng, n);
        let pf = points.to_f64();
        let af = masses_f64(&alpha);
        let quartic_f = quartic_qb(&af, &pf.distances(), &xf)?;
        let factored_f = 2.0 * mass_form(&af, &xf)? * configuration_form(&pf, &xf)?;
        let rel = (quartic_f - factored_f).abs() / factored_f.abs().max(f64::MIN_POSITIVE);
        tally.check(rel <= QUARTIC_TOL, || format!("sample {s} (n = {n}): floating Q_B relative error {rel:e}"));

        let b = nbody_matrix(&alpha, &r)?;
        let mut sum = Matrix::zeros(b.rows(), b.cols());
        for k in 0..n {
            let lifted = lift(&reduced_edm(&r, k)?, n, k)?.scale(alpha.get(k));
            sum = sum.try_add(&lifted)?;
        }
        tally.check(sum.entries() == b.entries(), || format!("sample {s} (n = {n}): B != sum of lifted alpha_k M_k"));

        let z = random::rational_vector(rng, PairSpace::new(n).len());
        let zbz = b.bilinear(&z, &z)?;
        let split = reduced_form_split(&alpha, &r, &z)?;
        tally.check(zbz == split, || format!("sample {s} (n = {n}): zBz = {zbz}, split = {split}"));
    }
    Ok(())
}

/// Relative agreement required between the two volume routes.
pub const VOLUME_TOL: f64 = 1e-9;

fn volume(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let points = random::float_configuration(rng, n, n - 1);
        let menger = menger_volume_sq(&points.distances(), cfg.tol)?;
        let gram = gram_volume_sq(&points)?;
        let rel = (menger - gram).abs() / gram.abs().max(f64::MIN_POSITIVE);
        tally.check(rel <= VOLUME_TOL, || format!("sample {s} (n = {n}): Menger {menger:e}, Gram {gram:e}"));
    }
    Ok(())
}

fn evaluation(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    let max = cfg.max_n.min(cfg.limits.nbody);
    let polys: Vec<SparsePoly> = (2..=max)
        .map(|n| symbolic_nbody_det(n, &cfg.limits))
        .collect::<Result<_>>()?;
    let limited = SuiteConfig { max_n: max, ..*cfg };
    for (s, n) in sizes(&limited, 2)? {
        let alpha = random::rational_vector(rng, n);
        let squared = random::rational_vector(rng, PairSpace::new(n).len());
        let values: Vec<Rational> = alpha.iter().chain(&squared).cloned().collect();
        let symbolic = polys[n - 2].evaluate(&values)?;
        let numeric = det_bareiss(&nbody_matrix(
            &MassParams::new(alpha),
            &DistanceVector::from_squared_unchecked(n, squared)?,
        )?)?;
        tally.check(symbolic == numeric, || format!("sample {s} (n = {n}): symbolic {symbolic}, numeric {numeric}"));
    }
    Ok(())
}

/// Random table with `det C_S = 0`, obtained by solving for `s_11`
/// (the determinant is affine in that entry).
fn singular_table(rng: &mut SampleRng, n: usize) -> Result<GenericEntryTable<Rational>> {
    loop {
        let base = random::rational_table(rng, n);
        let with = |v: Rational| {
            GenericEntryTable::from_fn(n, |i, j| if (i, j) == (0, 0) { v.clone() } else { base.get(i, j).clone() })
        };
        let at0 = det_bareiss(&bordered(&with(int(0))))?;
        let at1 = det_bareiss(&bordered(&with(int(1))))?;
        let slope = &at1 - &at0;
        if !Ring::is_zero(&slope) {
            return Ok(with(-at0 / slope));
        }
    }
}

fn witness(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for (s, n) in sizes(cfg, 2)? {
        let table = singular_table(rng, n)?;
        let w = kernel_witness(&table)?;
        tally.check(w.z.iter().any(|v| !Ring::is_zero(v)), || format!("sample {s} (n = {n}): z = 0"));
        for _ in 0..3 {
            let t = random::rational_table(rng, n);
            tally.check(w.annihilates(&table, &t)?, || format!("sample {s} (n = {n}): W z != 0"));
        }
    }
    Ok(())
}

fn content(cfg: &SuiteConfig, tally: &mut Tally) -> Result<()> {
    for n in 2..=cfg.max_n.min(4) {
        let sym = TableSymbols::new(n);
        let det = poly_det(&bordered(&sym.s), DetMethod::default())?;
        let c = det.content();
        tally.check(c == BigInt::one(), || format!("n = {n}: content {c}"));
    }
    Ok(())
}

/// `e_k` as a sum over `k`-subsets, independent of the recurrence used by
/// [`crate::domain::elementary_symmetric`].
pub fn elementary_symmetric_by_subsets<T: Ring>(k: usize, alpha: &[T]) -> T {
    let n = alpha.len();
    let mut total = T::zero();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let term = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .fold(T::one(), |acc, i| acc.times(&alpha[i]));
        total = total.plus(&term);
    }
    total
}

fn lemma_ca(cfg: &SuiteConfig, tally: &mut Tally) -> Result<()> {
    for n in 2..=cfg.max_n {
        let det = symbolic_ca_det(n)?;
        let table = det.table().cloned().ok_or_else(|| Error::IdentityFailed("det C_A lost its variables".into()))?;
        let alpha: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(&table, i)).collect();
        let e = elementary_symmetric_by_subsets(n - 1, &alpha);
        tally.check(det == e.neg(), || format!("n = {n}: det C_A = {det}"));
    }
    Ok(())
}

fn dictionary(cfg: &SuiteConfig, rng: &mut SampleRng, tally: &mut Tally) -> Result<()> {
    for n in 2..=cfg.max_n.min(4) {
        tally.checks += 1;
        match sign_dictionary(n, &cfg.limits) {
            Ok(_) => {}
            Err(Error::IdentityFailed(msg)) => tally.failures.push(msg),
            Err(e) => return Err(e),
        }
    }
    for n in 5..=cfg.max_n {
        for s in 0..cfg.samples {
            let alpha = random::positive_masses(rng, n);
            let r = random::rational_configuration(rng, n, n - 1).distances();
            tally.check(w_equals_minus_b(&alpha, &r)?, || format!("sample {s} (n = {n}): W_(R,A) != -B"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, max_n: usize) -> SuiteReport {
        let cfg = SuiteConfig {
            max_n,
            samples: 12,
            seed: 1,
            ..SuiteConfig::default()
        };
        run_suite(suite, &cfg).unwrap()
    }

    #[test]
    fn every_suite_passes_small() {
        for suite in Suite::ALL {
            let report = quick(suite, 4);
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn subset_sum_matches_recurrence() {
        let alpha = MassParams::new(vec![int(2), int(3), int(5), int(7)]);
        for k in 0..=4 {
            assert_eq!(
                elementary_symmetric_by_subsets(k, alpha.alpha()),
                alpha.elementary_symmetric(k).unwrap()
            );
        }
    }

    #[test]
    fn deterministic_reports() {
        assert_eq!(quick(Suite::Forms, 3), quick(Suite::Forms, 3));
    }
}
