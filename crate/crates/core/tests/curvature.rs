mod common;

use common::*;
use lie_curvature::algebra::Bracket;
use lie_curvature::curvature::{
    check_locally_symmetric, curvature_tensor, divergence_weyl, is_conformally_flat, levi_civita,
    milnor_algebra, milnor_system_residual, MilnorKind,
};
use lie_curvature::MetricLieAlgebra;
use proptest::prelude::*;

fn symmetric(alg: &MetricLieAlgebra) -> bool {
    let conn = levi_civita(alg);
    let curv = curvature_tensor(alg, &conn);
    check_locally_symmetric(alg, &conn, &curv).is_locally_symmetric
}

#[test]
fn random_milnor_algebras_satisfy_identities_and_systems() {
    let mut rng = rng(11);
    for k in 0..2000 {
        let (kind, params) = if k % 2 == 0 {
            (MilnorKind::Unimodular, milnor_uni_params(&mut rng).to_vec())
        } else {
            (MilnorKind::Nonunimodular, milnor_nonuni_params(&mut rng).to_vec())
        };
        let alg = milnor_algebra(kind, &params).unwrap();
        let conn = levi_civita(&alg);
        assert!(conn.torsion_residual(&alg) < 1e-12);
        assert!(conn.metric_residual() < 1e-12);
        let curv = curvature_tensor(&alg, &conn);
        assert!(curv.symmetry_residual() < 1e-10);
        let verdict = check_locally_symmetric(&alg, &conn, &curv).is_locally_symmetric;
        let res = milnor_system_residual(kind, &params).unwrap();
        let zero = res.iter().all(|r| r.abs() < 1e-8);
        assert_eq!(verdict, zero, "{kind:?} {params:?}");
        assert_eq!(is_conformally_flat(&curv), Ok(true));
    }
}

#[test]
fn system_examples() {
    let r = milnor_system_residual(MilnorKind::Unimodular, &[1.0, 1.0, 1.0]).unwrap();
    assert!(r.iter().all(|x| *x == 0.0));
    let r = milnor_system_residual(MilnorKind::Nonunimodular, &[1.0, 2.0, -2.0, 1.0]).unwrap();
    assert!(r.iter().all(|x| *x == 0.0));
    let r = milnor_system_residual(MilnorKind::Unimodular, &[1.0, 2.0, 3.0]).unwrap();
    // (a-b)(a+b-c)^2 = 0, (c-a)(a-b+c)^2 = 8, (c-b)(a-b-c)^2 = 16
    assert_eq!(r, vec![0.0, 8.0, 16.0]);
    assert!(milnor_system_residual(MilnorKind::Nonunimodular, &[1.0, 2.0, 1.0, 1.0]).is_err());
}

#[test]
fn verdict_examples() {
    assert!(!symmetric(&build("A_{3,1}+A_1", &[("a", 1.0)])));
    assert!(symmetric(&build("A_{3,3}+A_1", &[("a", 1.0), ("b", 0.0)])));
    let abelian = MetricLieAlgebra::abelian(4).unwrap();
    let conn = levi_civita(&abelian);
    let curv = curvature_tensor(&abelian, &conn);
    let rep = check_locally_symmetric(&abelian, &conn, &curv);
    assert!(rep.is_locally_symmetric);
    assert_eq!(rep.max_residual, 0.0);
    assert_eq!(curv.max_abs(), 0.0);
}

#[test]
fn conformal_flatness_and_c_spaces() {
    let flat = |alg: &MetricLieAlgebra| {
        let conn = levi_civita(alg);
        is_conformally_flat(&curvature_tensor(alg, &conn)).unwrap()
    };
    let c_space = |alg: &MetricLieAlgebra| {
        let conn = levi_civita(alg);
        let curv = curvature_tensor(alg, &conn);
        divergence_weyl(alg, &conn, &curv).unwrap().is_c_space
    };
    assert!(flat(&build("A_{3,7}+A_1", &[("alpha", 1.0), ("a", 1.0)])));
    let two_a2 = build("2A_2", &[("a", 1.0), ("b", 1.0)]);
    assert!(!flat(&two_a2));
    assert!(c_space(&two_a2));
    let a46 = build_variant("A_{4,6}", Some("table5-first"), &[("alpha", 2.0), ("a", 1.0)]);
    assert!(c_space(&a46));
    assert!(c_space(&MetricLieAlgebra::abelian(4).unwrap()));
    assert!(flat(&build("milnor-uni", &[("a", 1.0), ("b", 2.0), ("c", 3.0)])));
}

proptest! {
    #[test]
    fn surfaces_are_locally_symmetric(a in -3.0..3.0f64, b in -3.0..3.0f64) {
        let alg = MetricLieAlgebra::new(2, &[Bracket::new(1, 2, 1, a), Bracket::new(1, 2, 2, b)]).unwrap();
        let conn = levi_civita(&alg);
        let curv = curvature_tensor(&alg, &conn);
        prop_assert!(check_locally_symmetric(&alg, &conn, &curv).is_locally_symmetric);
        // constant curvature -(a^2 + b^2)
        prop_assert!((curv.sectional_at(0, 1) + a * a + b * b).abs() < 1e-12);
        prop_assert!(curv.schouten().is_err());
        prop_assert!(is_conformally_flat(&curv).is_err());
    }

    #[test]
    fn scalar_is_twice_sectional_sum(a in -2.0..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64) {
        let alg = milnor_algebra(MilnorKind::Unimodular, &[a, b, c]).unwrap();
        let curv = curvature_tensor(&alg, &levi_civita(&alg));
        let sum: f64 = curv.sectional().values().sum();
        prop_assert!((curv.scalar() - 2.0 * sum).abs() < 1e-10);
    }
}

#[test]
fn line_is_flat_and_symmetric() {
    let alg = MetricLieAlgebra::abelian(1).unwrap();
    assert!(symmetric(&alg));
}
