//! Cayley-Menger determinants, Heron's formula and simplex volumes.
//!
//! cargo run --example cayley_menger

use nbody_det::analysis::{gram_volume_sq, menger_volume_sq, simplex_volume_factor};
use nbody_det::builders::cayley_menger;
use nbody_det::domain::{DistanceVector, PointConfiguration};
use nbody_det::linalg::det_bareiss;
use nbody_det::scalar::{int, Rational};
use nbody_det::symbolic::{heron_check, heron_product, symbolic_cm_det};

fn main() -> nbody_det::Result<()> {
    for n in 2..=4 {
        println!("delta({n}) = {}", symbolic_cm_det(n)?);
    }

    let report = heron_check()?;
    println!("\nin unsquared lengths: {}", report.delta_in_lengths);
    println!("Heron product:        {}", report.heron);

    let sides = [int(3), int(4), int(5)];
    let r = DistanceVector::from_distances(3, sides.to_vec())?;
    let delta = det_bareiss(&cayley_menger(&r))?;
    println!("\n3-4-5 triangle: delta = {delta}, Heron = {}", heron_product(&sides[0], &sides[1], &sides[2]));
    println!("squared area = {}", menger_volume_sq(&r, 0.0)?);

    // Regular tetrahedron with unit edges: V^2 = 1/72.
    let unit = DistanceVector::from_distances(4, vec![int(1); 6])?;
    println!("\nunit tetrahedron: V^2 = {}", menger_volume_sq(&unit, 0.0)?);
    println!("delta / V^2 = {}", simplex_volume_factor::<Rational>(4));

    let cfg = PointConfiguration::new(vec![
        vec![0.0, 0.0, 0.0],
        vec![2.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0],
        vec![0.3, 0.4, 1.5],
    ])?;
    let menger = menger_volume_sq(&cfg.distances(), 1e-10)?;
    println!("\nMenger V^2 = {menger:.12}, Gram V^2 = {:.12}", gram_volume_sq(&cfg)?);
    Ok(())
}
