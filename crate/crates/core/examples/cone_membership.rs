//! Which distance vectors come from points, and from which kind of points.
//!
//! cargo run --example cone_membership

use nbody_det::analysis::cone_membership;
use nbody_det::domain::DistanceVector;
use nbody_det::scalar::{int, rat};

fn main() -> nbody_det::Result<()> {
    let exact = [
        ("equilateral", vec![int(1), int(1), int(1)]),
        ("collinear 1,1,2", vec![int(1), int(1), int(2)]),
        ("triangle inequality fails", vec![int(1), int(1), int(3)]),
        ("3-4-5", vec![int(3), int(4), int(5)]),
        ("collinear 1/2, 1, 3/2", vec![rat(1, 2), int(1), rat(3, 2)]),
    ];
    for (name, d) in exact {
        let r = DistanceVector::from_distances(3, d)?;
        let m = cone_membership(&r, 0.0)?;
        println!("{name:<28} exact:   {} (rank {})", m.class, m.report.rank);
    }

    // Four points on a square's corners plus its center: planar, so boundary.
    let s = 2f64.sqrt();
    let r = DistanceVector::from_distances(
        5,
        vec![1.0, s, 1.0, s / 2.0, 1.0, s, s / 2.0, 1.0, s / 2.0, s / 2.0],
    )?;
    let m = cone_membership(&r, 1e-10)?;
    println!(
        "{:<28} numeric: {} (min eigenvalue {:.2e}, threshold {:.2e})",
        "square plus center",
        m.class,
        m.report.min_eigenvalue,
        m.report.tolerance
    );
    Ok(())
}
