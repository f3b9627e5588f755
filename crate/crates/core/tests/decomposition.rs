mod common;

use common::*;
use lie_curvature::bivector::Bivector;
use lie_curvature::catalog::list_entries;
use lie_curvature::decomposition::subalgebra_residual;
use lie_curvature::spectrum::{curvature_operator_matrix, spectrum};
use lie_curvature::{is_irreducible, Irreducibility, MetricLieAlgebra, Subspace};
use nalgebra::DMatrix;

#[test]
fn a33_operator_matches_displayed_matrix() {
    let (a, b) = (1.3, 0.7);
    let m = curvature_operator_matrix(&run(&build("A_{3,3}+A_1", &[("a", a), ("b", b)])).curvature);
    #[rustfmt::skip]
    let expected = DMatrix::from_row_slice(6, 6, &[
        -a * a, 0.0, 0.0, 0.0, -0.5 * a * b, 0.0,
        0.0, -a * a + 0.25 * b * b, 0.0, 0.0, 0.0, -a * b,
        0.0, 0.0, 0.25 * b * b, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, -a * a, 0.0, 0.0,
        -0.5 * a * b, 0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, -a * b, 0.0, 0.0, 0.0, -0.75 * b * b,
    ]);
    assert!((m - expected).amax() < 1e-12);
}

#[test]
fn operator_trace_is_sectional_sum() {
    let mut r = rng(21);
    for e in list_entries() {
        for _ in 0..10 {
            let (_, alg) = sample(e.name, None, &mut r);
            let a = run(&alg);
            let tr = curvature_operator_matrix(&a.curvature).trace();
            let sum: f64 = a.curvature.sectional().values().sum();
            assert!((tr - sum).abs() < 1e-10, "{}", e.name);
        }
    }
}

#[test]
fn zero_operator_has_one_cluster() {
    let s = spectrum(&DMatrix::zeros(6, 6));
    assert_eq!(s.clusters.len(), 1);
    assert_eq!(s.clusters[0].multiplicity, 6);
    assert_eq!(s.clusters[0].lambda, 0.0);
}

#[test]
fn irreducibility_examples() {
    let alg = build("A_2+2A_1", &[("a", 1.0), ("b", 1.0)]);
    let op = curvature_operator_matrix(&run(&alg).curvature);
    let h = Bivector::basis(4, 0, 1);
    let lambda = op[(0, 0)];
    assert_eq!(
        is_irreducible(&h, &op, lambda).unwrap(),
        Irreducibility::Irreducible
    );

    let zero = DMatrix::zeros(6, 6);
    let h = Bivector::basis(4, 0, 1).add(&Bivector::basis(4, 2, 3));
    assert!(matches!(
        is_irreducible(&h, &zero, 0.0).unwrap(),
        Irreducibility::Reducible(_)
    ));
}

fn h1_spaces(alg: &MetricLieAlgebra) -> Vec<Subspace> {
    run(alg)
        .eigen_system
        .unwrap()
        .unwrap()
        .into_iter()
        .map(|p| p.h1)
        .collect()
}

fn contains_space(list: &[Subspace], s: &Subspace) -> bool {
    list.iter().any(|x| x.same_as(s, 1e-9))
}

#[test]
fn irreducible_systems() {
    let hs = h1_spaces(&build("A_2+2A_1", &[("a", 1.0), ("b", 1.0)]));
    assert_eq!(hs.len(), 3);
    for idx in [[1, 2], [1, 4], [2, 4]] {
        assert!(contains_space(&hs, &span(4, &idx)), "{idx:?}");
    }
    let hs = h1_spaces(&build("2A_2", &[("a", 1.0), ("b", 1.0)]));
    assert_eq!(hs.len(), 2);
    assert!(contains_space(&hs, &span(4, &[1, 2])));
    assert!(contains_space(&hs, &span(4, &[3, 4])));
    assert!(h1_spaces(&MetricLieAlgebra::abelian(4).unwrap()).is_empty());
}

#[test]
fn hpair_invariants_on_catalog() {
    let mut r = rng(22);
    for e in list_entries() {
        for _ in 0..5 {
            let (_, alg) = sample(e.name, None, &mut r);
            let a = run(&alg);
            for p in a.eigen_system.unwrap().unwrap() {
                let m = p.h.to_skew();
                assert!(p.h0.is_orthogonal_to(&p.h1));
                assert_eq!(p.h0.dim() + p.h1.dim(), alg.dim());
                for v in p.h0.basis() {
                    assert!(m.apply(v).norm() < 1e-9);
                }
                for v in p.h1.basis() {
                    assert!(p.h1.residual(&m.apply(v)) < 1e-9);
                }
            }
        }
    }
}

#[test]
fn v_decompositions() {
    let a = run(&build("A_2+2A_1", &[("a", 1.0), ("b", 1.0)]));
    let v = a.v.as_ref().unwrap();
    assert!(v.exists);
    assert!(v.parts[0].same_as(&span(4, &[3]), 1e-9));
    assert!(v.parts[1].same_as(&span(4, &[1, 2, 4]), 1e-9));
    assert!(a.v_relations.unwrap().iter().all(|r| r.residual < 1e-9));

    let a = run(&build("2A_2", &[("a", 1.0), ("b", 1.0)]));
    let v = a.v.as_ref().unwrap();
    assert!(v.parts[0].is_zero());
    assert!(v.parts[1].same_as(&span(4, &[1, 2]), 1e-9));
    assert!(v.parts[2].same_as(&span(4, &[3, 4]), 1e-9));
    assert!(a.v_relations.unwrap().iter().all(|r| r.residual < 1e-9));

    let a = run(&MetricLieAlgebra::abelian(4).unwrap());
    assert_eq!(a.v_exists(), Some(false));
    assert!(a.v_relations.is_none());
}

#[test]
fn three_dimensional_unimodular_without_v() {
    let a = run(&build("milnor-uni", &[("a", 1.0), ("b", 2.0), ("c", 4.0)]));
    assert!(a.curvature.sectional().values().all(|k| k.abs() > 1e-6));
    assert_eq!(a.v_exists(), Some(false));
    assert_eq!(a.z_exists(), Some(false));
}

#[test]
fn nonunimodular_single_bracket_splits() {
    let a = run(&build(
        "milnor-nonuni",
        &[("a", 1.5), ("b", 0.0), ("c", 0.0), ("d", 0.0)],
    ));
    let z = a.z.unwrap().unwrap();
    assert!(z.exists);
    assert!(z.parts[0].same_as(&span(3, &[3]), 1e-9));
    assert!(z.parts[1].same_as(&span(3, &[1, 2]), 1e-9));
}

/// On every fixture with a Z-decomposition: orthogonal parts that are
/// subalgebras, dimensions summing to n, `V_i` inside `Z_i`, and `V_i = Z_i`
/// when the metric is locally symmetric.
#[test]
fn z_decomposition_properties() {
    let mut r = rng(23);
    let mut seen = 0;
    let mut symmetric_seen = 0;
    for e in list_entries() {
        let variants: Vec<Option<&'static str>> = if e.variants.is_empty() {
            vec![None]
        } else {
            e.variants.iter().map(|v| Some(*v)).collect()
        };
        for variant in variants {
            for _ in 0..10 {
                let (_, alg) = sample(e.name, variant, &mut r);
                let a = run(&alg);
                let Some(Ok(z)) = &a.z else { continue };
                if !z.exists {
                    continue;
                }
                seen += 1;
                let v = a.v.as_ref().unwrap();
                assert_eq!(z.parts.iter().map(|p| p.dim()).sum::<usize>(), alg.dim());
                for (i, p) in z.parts.iter().enumerate() {
                    assert!(subalgebra_residual(&alg, p) < 1e-9, "{}", e.name);
                    for q in &z.parts[i + 1..] {
                        assert!(p.max_overlap(q) < 1e-9);
                    }
                }
                for i in 1..v.parts.len() {
                    assert!(v.parts[i].is_subspace_of(&z.parts[i]));
                    if a.symmetry.is_locally_symmetric {
                        assert!(v.parts[i].same_as(&z.parts[i], 1e-9), "{}", e.name);
                    }
                }
                symmetric_seen += a.symmetry.is_locally_symmetric as usize;
            }
        }
    }
    assert!(seen > 20);
    assert!(symmetric_seen > 10);
}

/// In dimension three a Z-decomposition comes with exactly one nonzero
/// curvature eigenvalue.
#[test]
fn three_dimensional_z_has_one_nonzero_eigenvalue() {
    let mut r = rng(24);
    let mut positives = 0;
    for k in 0..600 {
        let alg = if k % 2 == 0 {
            let p = milnor_uni_params(&mut r);
            build("milnor-uni", &[("a", p[0]), ("b", p[1]), ("c", p[2])])
        } else {
            let mut p = milnor_nonuni_params(&mut r);
            if k % 10 == 1 {
                // the one family expected to split
                p = [p[0] + p[3], 0.0, 0.0, 0.0];
            }
            build(
                "milnor-nonuni",
                &[("a", p[0]), ("b", p[1]), ("c", p[2]), ("d", p[3])],
            )
        };
        let a = run(&alg);
        if a.z_exists() == Some(true) {
            positives += 1;
            let spec = a.spectrum.as_ref().unwrap();
            let tol = 1e-9 * (1.0 + spec.norm());
            let nonzero: usize = spec
                .clusters
                .iter()
                .filter(|c| c.lambda.abs() > tol)
                .map(|c| c.multiplicity)
                .sum();
            assert_eq!(nonzero, 1);
        }
    }
    assert!(positives > 0);
}

#[test]
fn curvature_spans() {
    let a = run(&MetricLieAlgebra::abelian(4).unwrap());
    let cs = a.curvature_span.unwrap();
    assert!(cs.basis.is_empty());
    assert_eq!(cs.bracket_closure_dim, 0);

    let a = run(&build("A_{3,1}+A_1", &[("a", 1.0)]));
    let cs = a.curvature_span.unwrap();
    assert_eq!(cs.basis.len(), 3);
    assert!(cs.bracket_closure_dim >= 3);

    let a = run(&build("A_2+2A_1", &[("a", 1.0), ("b", 0.0)]));
    let cs = a.curvature_span.unwrap();
    assert_eq!((cs.basis.len(), cs.bracket_closure_dim), (1, 1));
}
