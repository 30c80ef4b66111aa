//! Command-line front end for the `nbody` binary.
//!
//! Exit codes: 0 success, 1 failed verification or a point outside the cone,
//! 2 unreadable input, 3 inconsistent sizes, 4 symbolic cap exceeded.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{cone_membership, determinant, embed, Definiteness, Determinant, DEFAULT_TOL};
use crate::builders::{cayley_menger, edm, nbody_matrix, reduced_edm, w_matrix};
use crate::domain::{DistanceVector, MassParams};
use crate::error::{Error, Result};
use crate::json::{self, JsonScalar};
use crate::matrix::{GenericEntryTable, Matrix};
use crate::pairs::PairSpace;
use crate::scalar::Rational;
use crate::symbolic::{
    factor_nbody, factor_nbody_equal_masses, factor_w, factor_w_diagonal_t, FactorizationCertificate, SymbolicLimits,
};
use crate::verify::{run_suite, Suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "nbody", version, about = "Distance geometry and n-body determinant tools")]
pub struct Cli {
    /// Scalar arithmetic: doubles with a tolerance, or exact rationals.
    #[arg(long, value_enum, global = true, default_value_t = Mode::Numeric)]
    pub mode: Mode,
    /// Relative zero threshold in numeric mode; ignored in exact mode.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Numeric,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    /// n×n squared-distance matrix.
    Edm,
    /// Bordered squared-distance matrix.
    Cm,
    /// Reduced matrix based at point `--k`.
    Redm,
    /// Pair-indexed n-body matrix.
    Nbody,
    /// Pair-indexed matrix of two entry tables `--s`, `--t`.
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FactorKind {
    Nbody,
    NbodyEqualMasses,
    W,
    WDiagonalT,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a matrix and print it as JSON.
    Build {
        #[arg(value_enum)]
        kind: MatrixKind,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Classify distances as interior, boundary or outside the distance cone.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Reconstruct points from distances.
    Embed {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Determinant of a built matrix.
    Det {
        #[arg(value_enum)]
        kind: MatrixKind,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Symbolic factorization certificate.
    Factor {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FactorKind::Nbody)]
        kind: FactorKind,
        /// Raise the symbolic size caps.
        #[arg(long)]
        long_running: bool,
        /// Also write the quotient in polynomial text format.
        #[arg(long)]
        quotient: Option<PathBuf>,
    },
    /// Run a seeded property suite (or `all`).
    Verify {
        suite: String,
        /// Largest number of points; samples cycle through the sizes up to it.
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        long_running: bool,
    },
}

#[derive(Args, Debug, Default, Clone)]
pub struct InputArgs {
    /// Distances r_12, r_13, …, r_(n-1)n, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    /// Squared distances in the same order.
    #[arg(long, allow_hyphen_values = true)]
    pub r2: Option<String>,
    /// JSON file with distances ("r" or "r2") or points.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Mass parameters alpha_i, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Masses m_i; alpha_i = 1/m_i.
    #[arg(long, conflicts_with = "alpha")]
    pub masses: Option<String>,
    /// 1-based base point of the reduced matrix (default: the last point).
    #[arg(long)]
    pub k: Option<usize>,
    /// JSON entry table S.
    #[arg(long)]
    pub s: Option<PathBuf>,
    /// JSON entry table T.
    #[arg(long)]
    pub t: Option<PathBuf>,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::OutsideCone { .. } | Error::IdentityFailed(_) | Error::NonsingularBordered(_) | Error::Poly(_) => 1,
        Error::Parse(_)
        | Error::Io(_)
        | Error::NegativeDistance { .. }
        | Error::ZeroMass(_)
        | Error::NotSymmetric { .. } => 2,
        Error::DimensionMismatch(_)
        | Error::IndexOutOfRange { .. }
        | Error::DegeneratePair(_)
        | Error::NotSquare { .. }
        | Error::UnsupportedSize { .. } => 3,
        Error::CapExceeded { .. } => 4,
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, A>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &outcome.text).map_err(Error::from),
                None => stdout.write_all(outcome.text.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return exit_code(&e);
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Output text and exit code of a command that ran to completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    if cli.mode == Mode::Numeric && cli.tol.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Parse(format!("--tol must be positive in numeric mode, got {}", cli.tol)));
    }
    match &cli.command {
        Command::Build { kind, input } => match cli.mode {
            Mode::Numeric => build::<f64>(*kind, input),
            Mode::Exact => build::<Rational>(*kind, input),
        },
        Command::Det { kind, input } => match cli.mode {
            Mode::Numeric => det::<f64>(*kind, input),
            Mode::Exact => det::<Rational>(*kind, input),
        },
        Command::Check { input } => match cli.mode {
            Mode::Numeric => check::<f64>(input, cli.tol),
            Mode::Exact => check::<Rational>(input, 0.0),
        },
        Command::Embed { input } => {
            // Square roots of eigenvalues leave the rationals, so embedding
            // always runs in doubles; exact input is converted once.
            let r = match cli.mode {
                Mode::Numeric => distances::<f64>(input)?,
                Mode::Exact => distances::<Rational>(input)?.to_f64(),
            };
            let e = embed(&r, cli.tol)?;
            Ok(Outcome::ok(json::to_text(&json::embedding_to_json(&e))))
        }
        Command::Factor {
            n,
            kind,
            long_running,
            quotient,
        } => factor(*n, *kind, *long_running, quotient.as_deref()),
        Command::Verify {
            suite,
            n,
            seed,
            samples,
            long_running,
        } => {
            let cfg = SuiteConfig {
                max_n: *n,
                samples: *samples,
                seed: *seed,
                tol: cli.tol,
                limits: SymbolicLimits::from_env(*long_running)?,
            };
            verify(suite, &cfg)
        }
    }
}

/// Scalars the matrix commands run over.
pub trait CliScalar: JsonScalar + Definiteness + Determinant + Display {}

impl CliScalar for f64 {}
impl CliScalar for Rational {}

fn parse_list<T: JsonScalar>(text: &str, flag: &str) -> Result<Vec<T>> {
    text.split(',')
        .enumerate()
        .map(|(i, item)| T::from_json(&Value::String(item.trim().to_string()), &format!("{flag}[{}]", i + 1)))
        .collect()
}

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    json::parse_document(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn points_for(len: usize, flag: &str) -> Result<usize> {
    PairSpace::points_for_pairs(len).ok_or_else(|| {
        Error::DimensionMismatch(format!("{flag} has {len} entries, which is not n(n-1)/2 for any n"))
    })
}

fn distances<T: CliScalar>(input: &InputArgs) -> Result<DistanceVector<T>> {
    match (&input.r, &input.r2, &input.input) {
        (Some(list), None, None) => {
            let values = parse_list(list, "--r")?;
            DistanceVector::from_distances(points_for(values.len(), "--r")?, values)
        }
        (None, Some(list), None) => {
            let values = parse_list(list, "--r2")?;
            DistanceVector::from_squared(points_for(values.len(), "--r2")?, values)
        }
        (None, None, Some(path)) => json::distances_from_json(&read_json(path)?),
        (None, None, None) => Err(Error::Parse("give distances with --r, --r2 or --input".into())),
        _ => Err(Error::Parse("--r, --r2 and --input are mutually exclusive".into())),
    }
}

fn masses<T: CliScalar>(input: &InputArgs, n: usize) -> Result<MassParams<T>> {
    let alpha = match (&input.alpha, &input.masses) {
        (Some(list), _) => MassParams::new(parse_list(list, "--alpha")?),
        (None, Some(list)) => MassParams::from_masses(&parse_list::<T>(list, "--masses")?)?,
        (None, None) => return Err(Error::Parse("the n-body matrix needs --alpha or --masses".into())),
    };
    if alpha.n() != n {
        return Err(Error::DimensionMismatch(format!("{} mass parameters for {n} points", alpha.n())));
    }
    Ok(alpha)
}

fn table<T: CliScalar>(path: Option<&Path>, flag: &str) -> Result<GenericEntryTable<T>> {
    let path = path.ok_or_else(|| Error::Parse(format!("the w matrix needs {flag}")))?;
    json::table_from_json(&read_json(path)?)
}

fn base_point(input: &InputArgs, n: usize) -> Result<usize> {
    match input.k {
        None => Ok(n.saturating_sub(1)),
        Some(k) if (1..=n).contains(&k) => Ok(k - 1),
        Some(k) => Err(Error::IndexOutOfRange {
            what: "base point (1-based)",
            index: k,
            size: n,
        }),
    }
}

fn matrix<T: CliScalar>(kind: MatrixKind, input: &InputArgs) -> Result<Matrix<T>> {
    if kind == MatrixKind::W {
        let s = table::<T>(input.s.as_deref(), "--s")?;
        let t = table::<T>(input.t.as_deref(), "--t")?;
        return w_matrix(&s, &t);
    }
    let r = distances::<T>(input)?;
    match kind {
        MatrixKind::Edm => Ok(edm(&r)),
        MatrixKind::Cm => Ok(cayley_menger(&r)),
        MatrixKind::Redm => reduced_edm(&r, base_point(input, r.n())?),
        MatrixKind::Nbody => nbody_matrix(&masses(input, r.n())?, &r),
        MatrixKind::W => unreachable!("handled above"),
    }
}

fn build<T: CliScalar>(kind: MatrixKind, input: &InputArgs) -> Result<Outcome> {
    Ok(Outcome::ok(json::to_text(&json::matrix_to_json(&matrix::<T>(kind, input)?))))
}

fn kind_name(kind: MatrixKind) -> String {
    kind.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn det<T: CliScalar>(kind: MatrixKind, input: &InputArgs) -> Result<Outcome> {
    let m = matrix::<T>(kind, input)?;
    let value = determinant(&m)?;
    let doc = json!({ "kind": kind_name(kind), "size": m.rows(), "det": value.to_json() });
    Ok(Outcome::ok(json::to_text(&doc)))
}

fn check<T: CliScalar>(input: &InputArgs, tol: f64) -> Result<Outcome> {
    let r = distances::<T>(input)?;
    let m = cone_membership(&r, tol)?;
    let doc = json!({
        "n": r.n(),
        "class": m.class.to_string(),
        "reduced_matrix": m.report.verdict.to_string(),
        "rank": m.report.rank,
        "min_eigenvalue": m.report.min_eigenvalue.to_json(),
        "tolerance": m.report.tolerance.to_json(),
    });
    let code = if m.class == crate::analysis::ConeClass::Outside { 1 } else { 0 };
    Ok(Outcome {
        text: json::to_text(&doc),
        code,
    })
}

fn factor(n: usize, kind: FactorKind, long_running: bool, quotient: Option<&Path>) -> Result<Outcome> {
    let limits = SymbolicLimits::from_env(long_running)?;
    let cert: FactorizationCertificate = match kind {
        FactorKind::Nbody => factor_nbody(n, &limits)?,
        FactorKind::NbodyEqualMasses => factor_nbody_equal_masses(n, &limits)?,
        FactorKind::W => factor_w(n, &limits)?,
        FactorKind::WDiagonalT => factor_w_diagonal_t(n, &limits)?,
    };
    if let Some(path) = quotient {
        fs::write(path, format!("{}\n", cert.quotient))?;
    }
    Ok(Outcome::ok(json::to_text(&json::certificate_to_json(&cert))))
}

fn verify(name: &str, cfg: &SuiteConfig) -> Result<Outcome> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse()?]
    };
    let mut text = String::new();
    let mut code = 0;
    for suite in suites {
        let report = run_suite(suite, cfg)?;
        if !report.passed() {
            code = 1;
        }
        text.push_str(&format!("{report}\n"));
    }
    Ok(Outcome { text, code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("nbody").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn nbody_unit_triangle() {
        let (code, out, _) = call(&["build", "nbody", "--alpha", "1,1,1", "--r", "1,1,1"]);
        assert_eq!(code, 0);
        let m: Matrix<f64> = json::matrix_from_json(&json::parse_document(&out).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(*m.get(i, j), if i == j { 4.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["check", "--r", "1,1,3"]).0, 1);
        assert_eq!(call(&["check", "--r", "1,1,1"]).0, 0);
        assert_eq!(call(&["check", "--r", "1,x,1"]).0, 2);
        assert_eq!(call(&["check", "--r", "1,1"]).0, 3);
        assert_eq!(call(&["factor", "--n", "9"]).0, 4);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["check", "--r", "1,1,1", "--tol", "0"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn exact_determinant() {
        let (code, out, _) = call(&["--mode", "exact", "det", "cm", "--r", "3,4,5"]);
        assert_eq!(code, 0);
        assert_eq!(json::parse_document(&out).unwrap()["det"], json!("-576"));
    }
}
