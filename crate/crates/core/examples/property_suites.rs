//! Runs every seeded property suite and prints its report.
//!
//! cargo run --release --example property_suites [-- <seed>]

use nbody_det::verify::{run_suite, Suite, SuiteConfig};

fn main() -> nbody_det::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let cfg = SuiteConfig {
        max_n: 5,
        samples: 100,
        seed,
        ..SuiteConfig::default()
    };
    let mut failed = false;
    for suite in Suite::ALL {
        let report = run_suite(suite, &cfg)?;
        failed |= !report.passed();
        println!("{report}");
    }
    if failed {
        std::process::exit(1);
    }
    Ok(())
}
