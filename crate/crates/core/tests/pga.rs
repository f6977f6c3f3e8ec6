mod common;

use common::*;
use pga_core::check::sample;
use pga_core::motor::sandwich;
use pga_core::{FlatKind, GaError, Multivector, Pga};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pga3() -> Pga {
    Pga::new(3).unwrap()
}

fn coords(range: f64, n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-range..range, n)
}

#[test]
fn only_two_and_three_dimensions() {
    assert!(Pga::new(1).is_err());
    assert!(Pga::new(4).is_err());
    assert!(Pga::new(2).is_ok());
}

#[test]
fn point_weight_and_coordinates() {
    for n in [2, 3] {
        let pga = Pga::new(n).unwrap();
        let x: Vec<f64> = (1..=n).map(|i| i as f64 * 1.5).collect();
        let p = pga.point(&x).unwrap();
        assert_eq!(p.kind(), FlatKind::Point);
        assert_eq!(pga.point_weight(p.mv()), 1.0);
        assert_eq!(p.mv().polarity().get(pga_core::BladeIndex::generator(0)), 1.0);
        assert_eq!(pga.point_coords(p.mv()).unwrap(), x);
    }
}

#[test]
fn ideal_points_have_zero_weight_and_norm() {
    let pga = pga3();
    let v = pga.ideal_point(&[1.0, -2.0, 0.5]).unwrap();
    assert!(v.is_ideal());
    assert_eq!(pga.point_weight(v.mv()), 0.0);
    assert_eq!(pga.euclidean_norm(v.mv()), 0.0);
    assert_eq!(pga.point_direction(v.mv()), vec![1.0, -2.0, 0.5]);
    assert!(matches!(pga.point_coords(v.mv()), Err(GaError::PointAtInfinity)));
    assert!(matches!(pga.ideal_point(&[0.0, 0.0, 0.0]), Err(GaError::Zero(_))));
}

#[test]
fn input_errors() {
    let pga = pga3();
    assert!(matches!(pga.point(&[1.0, 2.0]), Err(GaError::CoordinateCount { expected: 3, got: 2 })));
    assert!(matches!(pga.plane(&[0.0, 0.0, 0.0, 1.0]), Err(GaError::ZeroNormal)));
    let p = pga.point(&[1.0, 2.0, 3.0]).unwrap().into_mv();
    assert!(matches!(pga.line_from_points(&p, &p), Err(GaError::Coincident)));
    let h = pga.plane(&[0.0, 0.0, 1.0, 1.0]).unwrap().into_mv();
    assert!(matches!(pga.line_from_planes(&h, &h.scale(2.0)), Err(GaError::Coincident)));
    assert!(matches!(pga.distance(&p.scale(2.0), &p), Err(GaError::Unnormalized(_))));
    let v = pga.ideal_point(&[1.0, 0.0, 0.0]).unwrap().into_mv();
    assert!(matches!(pga.distance(&v, &p), Err(GaError::Ideal(_))));
    assert!(matches!(pga.angle(&p, &h), Err(GaError::WrongGrade(_))));
    assert!(matches!(pga.flat(Multivector::<f64>::one(pga.algebra())), Err(GaError::NotABlade)));
    let not_blade = Multivector::parse(pga.algebra(), "e12 + e03").unwrap();
    assert!(matches!(pga.flat::<f64>(not_blade), Err(GaError::NotABlade)));
    assert!(matches!(pga.normalize(&Multivector::<f64>::zero(pga.algebra())), Err(GaError::Zero(_))));
    let line = pga.line_from_points(&p, pga.point(&[0.0, 0.0, 0.0]).unwrap().mv()).unwrap().into_mv();
    assert!(matches!(pga.perpendicular_through_point(&line, &p), Err(GaError::Unnormalized(_))));
}

#[test]
fn incident_point_gives_degenerate_perpendicular() {
    let pga = pga3();
    let a = pga.point(&[0.0, 0.0, 0.0]).unwrap().into_mv();
    let b = pga.point(&[2.0, 0.0, 0.0]).unwrap().into_mv();
    let line = pga.normalize(&a.join(&b)).unwrap().into_mv();
    let on = pga.point(&[5.0, 0.0, 0.0]).unwrap().into_mv();
    assert!(matches!(pga.perpendicular_through_point(&line, &on), Err(GaError::MeetDegenerates)));
}

#[test]
fn perpendicular_in_the_plane() {
    let pga = Pga::new(2).unwrap();
    let line = pga.plane(&[0.0, 1.0, -1.0]).unwrap().into_mv(); // y = 1
    let p = pga.point(&[3.0, 4.0]).unwrap().into_mv();
    let s = pga.perpendicular_through_point(&line, &p).unwrap().into_mv();
    assert!(pga.incident(&p, &s));
    assert!(pga.orthogonal(&s, &line));
    assert!(pga.incident(pga.point(&[3.0, 1.0]).unwrap().mv(), &s));
}

#[test]
fn distances_to_flats() {
    let pga = pga3();
    let h = pga.plane(&[0.0, 0.0, 1.0, -2.0]).unwrap().into_mv(); // z = 2
    let p = pga.point(&[4.0, -1.0, 7.0]).unwrap().into_mv();
    assert_eq!(h.outer(&p).pseudoscalar_part(), 5.0);
}

#[test]
fn angle_between_planes() {
    let pga = pga3();
    let a = pga.plane(&[1.0, 0.0, 0.0, 0.0]).unwrap().into_mv();
    let s = 0.5f64.sqrt();
    let b = pga.plane(&[s, s, 0.0, 3.0]).unwrap().into_mv();
    assert!((pga.angle(&a, &b).unwrap() - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
}

#[test]
fn spanning_points_lie_on_the_flat() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let pga = pga3();
    for _ in 0..50 {
        for x in [sample::line(&mut rng, &pga, 5.0), sample::plane(&mut rng, &pga, 5.0)] {
            let flat = pga.flat(x.clone()).unwrap();
            let pts = pga.spanning_points(&flat).unwrap();
            assert_eq!(pts.len(), 4 - x.grade().unwrap());
            for p in pts {
                assert!(pga.incidence_residual(pga.point(&p).unwrap().mv(), &x) < 1e-12);
            }
        }
    }
}

proptest! {
    #[test]
    fn distance_matches_coordinates(x in coords(50.0, 3), y in coords(50.0, 3)) {
        let pga = pga3();
        let d = pga.distance(pga.point(&x).unwrap().mv(), pga.point(&y).unwrap().mv()).unwrap();
        prop_assert!((d - euclid_dist(&x, &y)).abs() <= 1e-12 * d.max(1.0));
    }

    #[test]
    fn distance_in_the_plane(x in coords(50.0, 2), y in coords(50.0, 2)) {
        let pga = Pga::new(2).unwrap();
        let (p, q) = (pga.point(&x).unwrap().into_mv(), pga.point(&y).unwrap().into_mv());
        let d = euclid_dist(&x, &y);
        prop_assert!((pga.distance_via_join(&p, &q) - d).abs() <= 1e-12 * d.max(1.0));
        prop_assert!((pga.distance_via_product(&p, &q) - d).abs() <= 1e-12 * d.max(1.0));
    }

    #[test]
    fn weight_scaling_is_invisible(x in coords(20.0, 3), w in prop_oneof![-50.0..-0.1, 0.1..50.0f64]) {
        let pga = pga3();
        let p = pga.point(&x).unwrap().into_mv();
        let scaled = p.scale(w);
        prop_assert!((pga.point_weight(&scaled) - w).abs() <= 1e-12 * w.abs());
        let back = pga.point_coords(&scaled).unwrap();
        for (a, b) in back.iter().zip(&x) {
            prop_assert!((a - b).abs() <= 1e-12 * b.abs().max(1.0));
        }
        prop_assert!(pga.normalize(&scaled).unwrap().mv().approx_eq(&p, 1e-12 * p.coeff_norm()));
    }

    #[test]
    fn join_direction_points_from_first_to_second(x in coords(10.0, 3), y in coords(10.0, 3)) {
        prop_assume!(euclid_dist(&x, &y) > 1e-3);
        let pga = pga3();
        let l = pga.line_from_points(pga.point(&x).unwrap().mv(), pga.point(&y).unwrap().mv()).unwrap();
        let d = pga.line_direction(l.mv());
        let dot: f64 = d.iter().zip(x.iter().zip(&y)).map(|(d, (a, b))| d * (b - a)).sum();
        prop_assert!(dot > 0.0);
        prop_assert!((l.weight() - euclid_dist(&x, &y)).abs() <= 1e-12 * l.weight().max(1.0));
    }

    #[test]
    fn points_on_joined_line_are_incident(x in coords(10.0, 3), y in coords(10.0, 3), t in -3.0..3.0f64) {
        prop_assume!(euclid_dist(&x, &y) > 1e-3);
        let pga = pga3();
        let l = pga.point(&x).unwrap().into_mv().join(pga.point(&y).unwrap().mv());
        let z: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + t * (b - a)).collect();
        prop_assert!(pga.incident(pga.point(&z).unwrap().mv(), &l));
    }

    #[test]
    fn construction_is_motion_covariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pga = pga3();
        let line = sample::line(&mut rng, &pga, 5.0);
        let p = sample::point(&mut rng, &pga, 5.0);
        prop_assume!(pga.incidence_residual(&p, &line) > 1e-3);
        let g = sample::motor(&mut rng, &pga);
        let moved = pga.perpendicular_through_point(&sandwich(&g, &line).unwrap(), &sandwich(&g, &p).unwrap()).unwrap().into_mv();
        let want = sandwich(&g, pga.perpendicular_through_point(&line, &p).unwrap().mv()).unwrap();
        prop_assert!(moved.approx_eq(&want, 1e-10) || moved.approx_eq(&want.scale(-1.0), 1e-10));
    }

    #[test]
    fn perpendicular_matches_foot_oracle(a in coords(5.0, 3), dir in coords(1.0, 3), x in coords(5.0, 3)) {
        let len = dir.iter().map(|c| c * c).sum::<f64>().sqrt();
        prop_assume!(len > 0.1);
        let d: Vec<f64> = dir.iter().map(|c| c / len).collect();
        let foot = foot_of_perpendicular(&x, &a, &d);
        prop_assume!(euclid_dist(&x, &foot) > 1e-2);
        let pga = pga3();
        let b: Vec<f64> = a.iter().zip(&d).map(|(p, q)| p + q).collect();
        let line = pga.normalize(pga.line_from_points(pga.point(&a).unwrap().mv(), pga.point(&b).unwrap().mv()).unwrap().mv()).unwrap().into_mv();
        let s = pga.perpendicular_through_point(&line, pga.point(&x).unwrap().mv()).unwrap().into_mv();
        prop_assert!(pga.incidence_residual(pga.point(&foot).unwrap().mv(), &s) < 1e-10);
    }
}
