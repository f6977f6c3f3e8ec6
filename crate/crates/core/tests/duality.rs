mod common;

use common::*;
use pga_core::duality::operator_interpretation;
use pga_core::{Algebra, GaError, Multivector, Orientation, Pga, Signature};
use proptest::prelude::*;

fn all_signatures(dim: u8) -> Vec<Signature> {
    let mut out = Vec::new();
    for r in 0..=dim {
        for p in 0..=dim - r {
            for o in [Orientation::Standard, Orientation::Dual] {
                out.push(Signature::new(p, dim - r - p, r, o));
            }
        }
    }
    out
}

#[test]
fn blade_wedge_its_dual_is_the_pseudoscalar() {
    for dim in 1..=6 {
        let alg = Algebra::new(Signature::new(0, 0, dim, Orientation::Dual)).unwrap();
        let i = Multivector::<f64>::pseudoscalar(&alg);
        for &b in alg.basis() {
            let x = Multivector::blade(&alg, b, 1.0);
            assert_eq!(x.outer(&x.j_map()), i, "dim {dim} blade {b}");
        }
    }
}

#[test]
fn j_inverse_undoes_j_and_double_j_has_grade_sign() {
    let alg = Algebra::pga(3).unwrap();
    for &b in alg.basis() {
        let x = Multivector::<f64>::blade(&alg, b, 1.0);
        assert_eq!(x.j_map().j_inverse(), x);
        let k = b.grade();
        let sign = if k * (4 - k) % 2 == 0 { 1.0 } else { -1.0 };
        assert_eq!(x.j_map().j_map(), x.scale(sign));
    }
}

#[test]
fn de_morgan_exhaustive_up_to_four_generators() {
    for dim in 1..=4 {
        for sig in all_signatures(dim) {
            let alg = Algebra::new(sig).unwrap();
            for a in 0..alg.size() {
                for b in 0..alg.size() {
                    let (x, y) = (blade(&alg, a as u8, 1.0), blade(&alg, b as u8, 1.0));
                    assert_eq!(x.outer(&y).j_map(), x.j_map().join(&y.j_map()));
                }
            }
        }
    }
}

#[test]
fn join_of_points_and_meet_of_planes() {
    let pga = Pga::new(3).unwrap();
    let p = pga.point(&[0.0, 0.0, 0.0]).unwrap().into_mv();
    let q = pga.point(&[1.0, 0.0, 0.0]).unwrap().into_mv();
    let line = p.join(&q);
    assert_eq!(line.grade(), Some(2));
    assert_eq!(pga.line_direction(&line), vec![1.0, 0.0, 0.0]);
    let y0 = pga.plane(&[0.0, 1.0, 0.0, 0.0]).unwrap().into_mv();
    let z0 = pga.plane(&[0.0, 0.0, 1.0, 0.0]).unwrap().into_mv();
    assert!(y0.meet(&z0).proportional(&line, 1e-15));
    let r = pga.point(&[0.0, 1.0, 0.0]).unwrap().into_mv();
    assert!(line.join(&r).proportional(&z0, 1e-15));
}

#[test]
fn meet_requires_plane_based_algebra() {
    let cga = Algebra::cga(3).unwrap();
    let e1 = Multivector::<f64>::generator(&cga, 1);
    assert!(matches!(e1.try_meet(&e1), Err(GaError::WrongAlgebra { .. })));
    assert!(operator_interpretation(Orientation::Dual).contains("meet"));
}

#[test]
fn polarity_kills_ideal_content_and_the_pseudoscalar() {
    let pga = Pga::new(3).unwrap();
    let omega = pga.ideal_plane::<f64>();
    assert!(omega.polarity().is_zero());
    assert!(Multivector::<f64>::pseudoscalar(pga.algebra()).polarity().is_zero());
    let h = pga.plane(&[0.0, 0.0, 1.0, 3.0]).unwrap().into_mv();
    let h2 = pga.plane(&[0.0, 0.0, 1.0, -7.0]).unwrap().into_mv();
    assert_eq!(h.polarity(), h2.polarity());
    assert_eq!(pga.point_weight(&h.polarity()), 0.0);
}

fn nondegenerate_signature() -> impl Strategy<Value = Signature> {
    (2u8..=5)
        .prop_flat_map(|dim| (Just(dim), 0..=dim))
        .prop_map(|(dim, p)| Signature::new(p, dim - p, 0, Orientation::Standard))
}

proptest! {
    #[test]
    fn j_is_metric_independent(dim in 1u8..=6, seed in prop::collection::vec(-1.0..1.0f64, 64)) {
        let sigs = all_signatures(dim);
        let coeffs: Vec<f64> = seed[..1 << dim].to_vec();
        let reference = Multivector::from_coeffs(&Algebra::new(sigs[0]).unwrap(), coeffs.clone()).unwrap().j_map();
        for sig in &sigs[1..] {
            let img = Multivector::from_coeffs(&Algebra::new(*sig).unwrap(), coeffs.clone()).unwrap().j_map();
            for (a, b) in img.coeffs().iter().zip(reference.coeffs()) {
                prop_assert_eq!(a.to_bits(), b.to_bits());
            }
        }
    }

    #[test]
    fn j_join_is_proportional_to_polarity_join_when_nondegenerate(
        sig in nondegenerate_signature(),
        a in 0usize..32,
        b in 0usize..32,
    ) {
        let alg = Algebra::new(sig).unwrap();
        let (a, b) = (a % alg.size(), b % alg.size());
        let (x, y) = (blade(&alg, a as u8, 1.0), blade(&alg, b as u8, 1.0));
        let i = Multivector::pseudoscalar(&alg);
        let i_inv = i.reverse().scale(1.0 / i.gp(&i.reverse()).scalar_part());
        let via_polarity = x.gp(&i_inv).outer(&y.gp(&i_inv)).gp(&i);
        let via_j = x.join(&y);
        prop_assert_eq!(via_j.is_zero(), via_polarity.is_zero());
        prop_assert!(via_j.proportional(&via_polarity, 1e-12));
    }

    #[test]
    fn join_is_bilinear(c in prop::collection::vec(-1.0..1.0f64, 48)) {
        let alg = Algebra::pga(3).unwrap();
        let x = Multivector::from_coeffs(&alg, c[..16].to_vec()).unwrap();
        let y = Multivector::from_coeffs(&alg, c[16..32].to_vec()).unwrap();
        let z = Multivector::from_coeffs(&alg, c[32..].to_vec()).unwrap();
        prop_assert!(x.join(&y.add(&z)).approx_eq(&x.join(&y).add(&x.join(&z)), 1e-12));
    }
}
