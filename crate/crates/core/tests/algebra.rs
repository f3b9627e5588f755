mod common;

use common::*;
use lie_curvature::algebra::Bracket;
use lie_curvature::{MetricLieAlgebra, Subspace};
use proptest::prelude::*;

fn unimodular() -> impl Strategy<Value = MetricLieAlgebra> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b, c)| {
        MetricLieAlgebra::new(
            3,
            &[
                Bracket::new(1, 2, 3, a),
                Bracket::new(2, 3, 1, c),
                Bracket::new(3, 1, 2, b),
            ],
        )
        .unwrap()
    })
}

fn nonunimodular() -> impl Strategy<Value = MetricLieAlgebra> {
    (0.2..2.0f64, -2.0..2.0f64, 0.2..2.0f64).prop_map(|(a, b, d)| {
        let c = -b * d / a;
        MetricLieAlgebra::new(
            3,
            &[
                Bracket::new(1, 2, 2, a),
                Bracket::new(1, 2, 3, b),
                Bracket::new(1, 3, 2, c),
                Bracket::new(1, 3, 3, d),
            ],
        )
        .unwrap()
    })
}

fn any_3d() -> impl Strategy<Value = MetricLieAlgebra> {
    prop_oneof![unimodular(), nonunimodular()]
}

/// Trace of ad_x by a plain loop.
fn trace_ad(alg: &MetricLieAlgebra, x: usize) -> f64 {
    (0..alg.dim()).map(|k| alg.c(x, k, k)).sum()
}

proptest! {
    #[test]
    fn direct_sum_is_valid_and_unimodular_iff_both(a in any_3d(), b in any_3d()) {
        let s = a.direct_sum(&b);
        prop_assert_eq!(s.dim(), 6);
        prop_assert!(s.jacobi_residual().0 < 1e-12);
        prop_assert!(s.antisymmetry_residual() == 0.0);
        prop_assert_eq!(s.is_unimodular(), a.is_unimodular() && b.is_unimodular());
        // the two summands commute
        for i in 0..3 {
            for j in 3..6 {
                for k in 0..6 {
                    prop_assert_eq!(s.c(i, j, k), 0.0);
                }
            }
        }
    }

    #[test]
    fn unimodularity_matches_trace_loop(a in any_3d()) {
        let traceless = (0..3).all(|x| trace_ad(&a, x).abs() < 1e-9 * (1.0 + a.max_constant()));
        prop_assert_eq!(a.is_unimodular(), traceless);
    }

    #[test]
    fn restriction_recovers_summands(a in any_3d(), b in any_3d()) {
        let s = a.direct_sum(&b);
        let first = s.restrict_to_subspace(&Subspace::coordinate(6, &[0, 1, 2])).unwrap();
        let second = s.restrict_to_subspace(&Subspace::coordinate(6, &[3, 4, 5])).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    prop_assert!((first.c(i, j, k) - a.c(i, j, k)).abs() < 1e-12);
                    prop_assert!((second.c(i, j, k) - b.c(i, j, k)).abs() < 1e-12);
                }
            }
        }
        let full = s.restrict_to_subspace(&Subspace::full(6)).unwrap();
        prop_assert_eq!(full.brackets(), s.brackets());
    }

    #[test]
    fn json_round_trip(a in any_3d()) {
        let text = a.to_json();
        let back = MetricLieAlgebra::from_json(&text).unwrap();
        prop_assert_eq!(back.brackets(), a.brackets());
        prop_assert_eq!(back.to_json(), text);
    }
}

#[test]
fn a2_plus_2a1_constants() {
    let alg = MetricLieAlgebra::new(4, &[Bracket::new(1, 2, 1, 1.0), Bracket::new(1, 2, 4, 1.0)]).unwrap();
    assert_eq!(alg.c(0, 1, 0), 1.0);
    assert_eq!(alg.c(1, 0, 0), -1.0);
    assert_eq!(alg.c(0, 1, 3), 1.0);
    assert!(!alg.is_unimodular());
    assert!((trace_ad(&alg, 1) + 1.0).abs() < 1e-15);
}

#[test]
fn restriction_to_subalgebras() {
    let alg = build("A_2+2A_1", &[("a", 1.5), ("b", 0.0)]);
    let sub = alg.restrict_to_subspace(&span(4, &[1, 2])).unwrap();
    assert_eq!(sub.dim(), 2);
    assert!((sub.c(0, 1, 0) - 1.5).abs() < 1e-12);

    let alg = build("A_{3,1}+A_1", &[("a", 1.0)]);
    let sub = alg.restrict_to_subspace(&span(4, &[1, 2, 3])).unwrap();
    assert!((sub.c(1, 2, 0) - 1.0).abs() < 1e-12);
    assert_eq!(sub.brackets().len(), 1);
}

#[test]
fn non_subalgebra_is_rejected() {
    let alg = build("su(2)", &[]);
    assert!(alg.restrict_to_subspace(&span(3, &[1, 2])).is_err());
}

#[test]
fn abelian_algebra() {
    let alg = MetricLieAlgebra::new(4, &[]).unwrap();
    assert!(alg.brackets().is_empty());
    assert!(alg.is_unimodular());
    assert_eq!(alg.max_constant(), 0.0);
}
