use proptest::prelude::*;

use nbody_det::analysis::{cone_membership, ConeClass, Definiteness};
use nbody_det::builders::{bordered, cayley_menger, edm, nbody_matrix, reduced_edm, w_entry, w_matrix};
use nbody_det::domain::{DistanceVector, MassParams, PointConfiguration};
use nbody_det::json;
use nbody_det::linalg::{det_bareiss, det_cofactor, det_minor_expansion};
use nbody_det::matrix::{GenericEntryTable, Matrix};
use nbody_det::pairs::PairSpace;
use nbody_det::poly::{exact_divide, parse_poly, poly_det, Coeff, DetMethod, Monomial, SparsePoly, VarTable};
use nbody_det::random;
use nbody_det::scalar::{rat, Rational};
use nbody_det::verify::elementary_symmetric_by_subsets;

use std::sync::Arc;

fn small() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn configuration(max_n: usize) -> impl Strategy<Value = PointConfiguration<Rational>> {
    (2..=max_n, 1usize..=4).prop_flat_map(|(n, d)| {
        prop::collection::vec(prop::collection::vec(small(), d), n)
            .prop_map(move |pts| PointConfiguration::with_dimension(d, pts).unwrap())
    })
}

fn configuration_with_masses(max_n: usize) -> impl Strategy<Value = (PointConfiguration<Rational>, MassParams<Rational>)> {
    configuration(max_n).prop_flat_map(|cfg| {
        let n = cfg.n();
        (Just(cfg), prop::collection::vec(positive(), n).prop_map(MassParams::new))
    })
}

fn table(n: usize) -> impl Strategy<Value = GenericEntryTable<Rational>> {
    prop::collection::vec(small(), n * n).prop_map(move |v| GenericEntryTable::new(n, v).unwrap())
}

fn vars() -> Arc<VarTable> {
    Arc::new(VarTable::new(["x", "y", "z"]).unwrap())
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(((0u8..3, 0u8..3, 0u8..3), -5i64..=5), 0..5).prop_map(|terms| {
        let t = vars();
        SparsePoly::from_terms(
            Some(t),
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), Coeff::from(k))),
        )
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn permuted_masses(alpha: &MassParams<Rational>, perm: &[usize]) -> MassParams<Rational> {
    MassParams::new(perm.iter().map(|&k| alpha.get(k).clone()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rigid_motion_keeps_distances(seed in any::<u64>(), n in 2usize..7, d in 1usize..5) {
        let mut rng = random::rng(seed);
        let cfg = random::float_configuration(&mut rng, n, d);
        let q = random::random_orthogonal(&mut rng, d);
        let b: Vec<f64> = (0..d).map(|k| k as f64 - 0.5).collect();
        let moved = cfg.transformed(&q, &b).unwrap();
        for (x, y) in cfg.distances().squared_entries().iter().zip(moved.distances().squared_entries()) {
            prop_assert!((x - y).abs() <= 1e-12 * x.max(1.0));
        }
    }

    #[test]
    fn exact_translation_and_reflection((cfg, shift) in configuration(6).prop_flat_map(|c| {
        let d = c.d();
        (Just(c), prop::collection::vec(small(), d))
    })) {
        let d = cfg.d();
        let flip = Matrix::from_fn(d, d, |i, j| if i != j { rat(0, 1) } else if i == 0 { rat(-1, 1) } else { rat(1, 1) });
        let moved = cfg.transformed(&flip, &shift).unwrap();
        prop_assert_eq!(moved.distances(), cfg.distances());
    }

    #[test]
    fn relabeling_points((cfg, alpha, perm) in configuration_with_masses(5).prop_flat_map(|(c, a)| {
        let n = c.n();
        (Just(c), Just(a), permutation(n))
    })) {
        let moved = cfg.permuted(&perm);
        prop_assert_eq!(moved.is_singular(0.0), cfg.is_singular(0.0));
        let delta = det_bareiss(&cayley_menger(&cfg.distances())).unwrap();
        prop_assert_eq!(det_bareiss(&cayley_menger(&moved.distances())).unwrap(), delta);
        let big = det_bareiss(&nbody_matrix(&alpha, &cfg.distances()).unwrap()).unwrap();
        let moved_alpha = permuted_masses(&alpha, &perm);
        prop_assert_eq!(det_bareiss(&nbody_matrix(&moved_alpha, &moved.distances()).unwrap()).unwrap(), big);
    }

    #[test]
    fn singular_iff_delta_vanishes(cfg in configuration(5)) {
        let delta = det_bareiss(&cayley_menger(&cfg.distances())).unwrap();
        prop_assert_eq!(cfg.is_singular(0.0), delta == rat(0, 1));
    }

    #[test]
    fn builders_are_symmetric((cfg, alpha) in configuration_with_masses(6)) {
        let r = cfg.distances();
        prop_assert!(edm(&r).is_symmetric());
        prop_assert!(cayley_menger(&r).is_symmetric());
        prop_assert!(nbody_matrix(&alpha, &r).unwrap().is_symmetric());
        for k in 0..r.n() {
            prop_assert!(reduced_edm(&r, k).unwrap().is_symmetric());
        }
        let c = bordered(&GenericEntryTable::from_fn(r.n(), |i, j| r.squared(i, j)));
        let cm = cayley_menger(&r);
        prop_assert_eq!(c.entries(), cm.entries());
    }

    #[test]
    fn w_entries_ignore_pair_orientation((s, t) in (2usize..6).prop_flat_map(|n| (table(n), table(n)))) {
        let n = s.n();
        let w = w_matrix(&s, &t).unwrap();
        let space = PairSpace::new(n);
        for (a, p) in space.iter().enumerate() {
            for (b, q) in space.iter().enumerate() {
                let expected = w.get(a, b);
                prop_assert_eq!(&w_entry(&s, &t, (p.j(), p.i()), (q.i(), q.j())), expected);
                prop_assert_eq!(&w_entry(&s, &t, (p.i(), p.j()), (q.j(), q.i())), expected);
                prop_assert_eq!(&w_entry(&s, &t, (p.j(), p.i()), (q.j(), q.i())), expected);
            }
        }
    }

    #[test]
    fn rational_determinant_routes_agree(m in (1usize..6).prop_flat_map(|n| {
        prop::collection::vec(small(), n * n).prop_map(move |v| Matrix::new(n, n, v).unwrap())
    })) {
        let bareiss = det_bareiss(&m).unwrap();
        prop_assert_eq!(det_minor_expansion(&m).unwrap(), bareiss.clone());
        prop_assert_eq!(det_cofactor(&m).unwrap(), bareiss);
    }

    #[test]
    fn exact_and_numeric_membership_agree(cfg in configuration(6)) {
        let r = cfg.distances();
        let exact = cone_membership(&r, 0.0).unwrap().class;
        let numeric = cone_membership(&r.to_f64(), 1e-10).unwrap().class;
        prop_assert_ne!(exact, ConeClass::Outside);
        prop_assert_eq!(exact, numeric);
        let expected = if cfg.is_singular(0.0) { ConeClass::Boundary } else { ConeClass::Interior };
        prop_assert_eq!(exact, expected);
    }

    #[test]
    fn exact_definiteness_matches_eigenvalues(m in (1usize..6).prop_flat_map(|n| {
        prop::collection::vec(small(), n * n).prop_map(move |v| {
            let a = Matrix::new(n, n, v).unwrap();
            a.transpose().product(&a).unwrap()
        })
    })) {
        let exact = Rational::definiteness(&m, 0.0).unwrap();
        let numeric = f64::definiteness(&m.map(nbody_det::scalar::RealField::to_f64), 1e-10).unwrap();
        prop_assert_eq!(exact.verdict, numeric.verdict);
        prop_assert_eq!(exact.rank, numeric.rank);
    }

    #[test]
    fn elementary_symmetric_routes_agree(alpha in prop::collection::vec(small(), 1..8), k in 0usize..8) {
        let k = k.min(alpha.len());
        let params = MassParams::new(alpha.clone());
        prop_assert_eq!(params.elementary_symmetric(k).unwrap(), elementary_symmetric_by_subsets(k, &alpha));
    }

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &SparsePoly::one(), p.clone());
    }

    #[test]
    fn degree_is_additive(p in poly(), q in poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn division_undoes_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(exact_divide(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in poly(), q in poly(), point in prop::collection::vec(small(), 3)) {
        let pq = (&p * &q).evaluate(&point).unwrap();
        prop_assert_eq!(pq, p.evaluate(&point).unwrap() * q.evaluate(&point).unwrap());
        let sum = (&p + &q).evaluate(&point).unwrap();
        prop_assert_eq!(sum, p.evaluate(&point).unwrap() + q.evaluate(&point).unwrap());
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let t = vars();
        prop_assert_eq!(parse_poly(&p.to_string(), &t).unwrap(), p);
    }

    #[test]
    fn polynomial_determinant_routes_agree(entries in prop::collection::vec(poly(), 9)) {
        let m = Matrix::new(3, 3, entries).unwrap();
        let minor = poly_det(&m, DetMethod::MinorExpansion).unwrap();
        prop_assert_eq!(poly_det(&m, DetMethod::Bareiss).unwrap(), minor.clone());
        prop_assert_eq!(poly_det(&m, DetMethod::Cofactor).unwrap(), minor);
    }

    #[test]
    fn json_round_trips(cfg in configuration(5), s in (2usize..5).prop_flat_map(table)) {
        let back: PointConfiguration<Rational> = json::points_from_json(&json::points_to_json(&cfg)).unwrap();
        prop_assert_eq!(&back, &cfg);
        let r = cfg.distances();
        let back: DistanceVector<Rational> = json::distances_from_json(&json::distances_to_json(&r)).unwrap();
        prop_assert_eq!(&back, &r);
        let back: GenericEntryTable<Rational> = json::table_from_json(&json::table_to_json(&s)).unwrap();
        prop_assert_eq!(&back, &s);
        let m = cayley_menger(&r);
        let back: Matrix<Rational> = json::matrix_from_json(&json::matrix_to_json(&m)).unwrap();
        prop_assert_eq!(back, m);
    }
}
