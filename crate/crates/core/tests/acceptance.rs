//! Acceptance checks, one line per criterion. Exits nonzero if any fails.

use std::time::{Duration, Instant};

use nbody_det::analysis::menger_volume_sq;
use nbody_det::domain::DistanceVector;
use nbody_det::poly::{parse_poly, SparsePoly};
use nbody_det::scalar::{int, rat};
use nbody_det::symbolic::{
    factor_nbody, factor_nbody_equal_masses, factor_w, heron_check, symbolic_cm_det, symbolic_nbody_det,
    FactorizationCertificate, NbodySymbols, SymbolicLimits,
};
use nbody_det::verify::{run_suite, Suite, SuiteConfig, SuiteReport, EMBED_TOL, QUARTIC_TOL, SINGULAR_DET_TOL, VOLUME_TOL};
use nbody_det::Result;

/// Relative eigenvalue floor for positive definiteness.
const EIGEN_TOL: f64 = 1e-10;
const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        ok,
        detail: detail.into(),
    })
}

fn suite(suite: Suite, max_n: usize, samples: usize) -> Result<SuiteReport> {
    run_suite(
        suite,
        &SuiteConfig {
            max_n,
            samples,
            seed: SEED,
            tol: EIGEN_TOL,
            limits: SymbolicLimits::default(),
        },
    )
}

fn suites(reports: &[SuiteReport]) -> Outcome {
    Outcome {
        ok: reports.iter().all(SuiteReport::passed),
        detail: reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("; "),
    }
}

fn certified(c: &FactorizationCertificate) -> Result<bool> {
    Ok(c.verified && c.recheck()?)
}

fn ac1() -> Result<Outcome> {
    let t = NbodySymbols::new(3).table;
    let masses = parse_poly("-2*alpha_1*alpha_2 - 2*alpha_1*alpha_3 - 2*alpha_2*alpha_3", &t)?;
    let mixed = parse_poly("alpha_3*r_1_2 + alpha_2*r_1_3 + alpha_1*r_2_3", &t)?;
    let geometric = parse_poly(
        "r_1_2^2 + r_1_3^2 + r_2_3^2 - 2*r_1_2*r_1_3 - 2*r_1_2*r_2_3 - 2*r_1_3*r_2_3",
        &t,
    )?;
    let product = &(&masses * &mixed) * &geometric;
    let det = symbolic_nbody_det(3, &SymbolicLimits::default())?;
    outcome(det == product, format!("{} terms", det.len()))
}

fn ac2() -> Result<Outcome> {
    let delta = symbolic_cm_det(3)?;
    let table = delta.table().cloned().expect("symbolic determinant keeps its variables");
    let six = parse_poly(
        "r_1_2^2 + r_1_3^2 + r_2_3^2 - 2*r_1_2*r_1_3 - 2*r_1_2*r_2_3 - 2*r_1_3*r_2_3",
        &table,
    )?;
    let heron = heron_check().is_ok();
    outcome(delta == six && heron, format!("six terms match: {}, Heron: {heron}", delta == six))
}

fn ac3() -> Result<Outcome> {
    let four = factor_nbody(4, &SymbolicLimits::default())?;
    let start = Instant::now();
    let five = factor_nbody_equal_masses(5, &SymbolicLimits::long_running())?;
    let five_time = start.elapsed();
    outcome(
        certified(&four)? && certified(&five)?,
        format!(
            "n = 4: {} terms, quotient {} terms; equal masses n = 5: {} terms in {:.1} s",
            four.lhs.len(),
            four.quotient.len(),
            five.lhs.len(),
            five_time.as_secs_f64()
        ),
    )
}

fn ac4() -> Result<Outcome> {
    let two = factor_w(2, &SymbolicLimits::default())?;
    let three = factor_w(3, &SymbolicLimits::default())?;
    let unit = two.quotient == SparsePoly::one();
    outcome(
        certified(&two)? && certified(&three)? && unit,
        format!("Z(2) = {}, Z(3) has {} terms", two.quotient, three.quotient.len()),
    )
}

fn ac11() -> Result<Outcome> {
    let report = suite(Suite::Volume, 6, 100)?;
    let unit = DistanceVector::from_distances(3, vec![int(1), int(1), int(1)])?;
    let area = menger_volume_sq(&unit, 0.0)?;
    let exact = area == rat(3, 16);
    Ok(Outcome {
        ok: report.passed() && exact,
        detail: format!("{report}; unit triangle squared area {area} (tol {VOLUME_TOL:e})"),
    })
}

type Check = fn() -> Result<Outcome>;

fn main() {
    let criteria: Vec<(&str, &str, Option<Duration>, Check)> = vec![
        ("AC1", "three-body determinant factorization", Some(Duration::from_secs(1)), ac1),
        ("AC2", "three-point Cayley-Menger determinant and Heron", Some(Duration::from_secs(1)), ac2),
        ("AC3", "n-body factorization at n = 4, equal masses at n = 5", Some(Duration::from_secs(60)), ac3),
        ("AC4", "W factorization at n = 2, 3", Some(Duration::from_secs(120)), ac4),
        ("AC5", "det C_A = -e_(n-1)(alpha), n = 2..6", Some(Duration::from_secs(5)), || {
            Ok(suites(&[suite(Suite::LemmaCa, 6, 0)?]))
        }),
        ("AC6", "W_(R,A) against the n-body matrix", None, || {
            Ok(suites(&[suite(Suite::SignDictionary, 6, 20)?]))
        }),
        ("AC7", "delta = (-1)^n det M_k, n <= 7", Some(Duration::from_secs(30)), || {
            Ok(suites(&[suite(Suite::Cmdk, 7, 100)?]))
        }),
        ("AC8", "positivity and signs, singular vanishing", Some(Duration::from_secs(60)), || {
            let mut out = suites(&[suite(Suite::Signs, 6, 200)?, suite(Suite::Singular, 6, 50)?]);
            out.detail.push_str(&format!(" (eigen tol {EIGEN_TOL:e}, singular tol {SINGULAR_DET_TOL:e})"));
            Ok(out)
        }),
        ("AC9", "embedding round trip, n <= 8", Some(Duration::from_secs(30)), || {
            let mut out = suites(&[suite(Suite::Embed, 8, 100)?]);
            out.detail.push_str(&format!(" (tol {EMBED_TOL:e})"));
            Ok(out)
        }),
        ("AC10", "form identities", Some(Duration::from_secs(30)), || {
            let mut out = suites(&[suite(Suite::Forms, 6, 100)?]);
            out.detail.push_str(&format!(" (quartic tol {QUARTIC_TOL:e})"));
            Ok(out)
        }),
        ("AC11", "Menger volume against Gram volume", None, ac11),
        ("AC12", "content of det C_S, n = 2, 3, 4", None, || {
            Ok(suites(&[suite(Suite::Content, 4, 0)?]))
        }),
    ];

    let mut failed = 0;
    for (id, title, limit, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(o) => (o.ok, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let in_time = limit.is_none_or(|l| elapsed < l);
        let timing = match limit {
            Some(l) => format!("{:.2} s, limit {} s", elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2} s", elapsed.as_secs_f64()),
        };
        let pass = ok && in_time;
        if !pass {
            failed += 1;
        }
        println!("[{}] {id} {title} ({timing}): {detail}", if pass { "PASS" } else { "FAIL" });
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
