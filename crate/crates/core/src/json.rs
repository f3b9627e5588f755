//! Deterministic JSON views of the analysis results. Floats are rounded to
//! 12 significant digits and `-0` is written as `0`.

use nalgebra::{DMatrix, DVector};
use serde_json::{json, Map, Value};

use crate::algebra::MetricLieAlgebra;
use crate::analysis::Analysis;
use crate::bivector::basis_labels;
use crate::curvature::{CurvatureData, SymmetryReport};
use crate::decomposition::{HPair, SubspaceDecomposition, VRelation};
use crate::error::Error;
use crate::spectrum::SpectralDecomposition;
use crate::subspace::Subspace;

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn num(x: f64) -> Value {
    let r = round12(x);
    if r.is_finite() {
        json!(r)
    } else {
        Value::Null
    }
}

pub fn vector(v: &DVector<f64>) -> Value {
    Value::Array(v.iter().map(|&x| num(x)).collect())
}

pub fn matrix(m: &DMatrix<f64>) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|r| Value::Array((0..m.ncols()).map(|c| num(m[(r, c)])).collect()))
            .collect(),
    )
}

pub fn subspace_basis(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(vector).collect())
}

pub fn algebra(alg: &MetricLieAlgebra) -> Value {
    let mut m = Map::new();
    m.insert("dim".into(), json!(alg.dim()));
    if let Some(l) = alg.label() {
        m.insert("label".into(), json!(l));
    }
    m.insert(
        "brackets".into(),
        Value::Array(
            alg.brackets()
                .iter()
                .map(|b| json!({"i": b.i, "j": b.j, "k": b.k, "v": num(b.v)}))
                .collect(),
        ),
    );
    Value::Object(m)
}

pub fn error(e: &Error) -> Value {
    json!({"error": e.kind(), "message": e.to_string()})
}

pub fn sectional(curv: &CurvatureData) -> Value {
    let mut m = Map::new();
    for (&(i, j), &k) in curv.sectional() {
        m.insert(format!("{}{}", i + 1, j + 1), num(k));
    }
    Value::Object(m)
}

pub fn symmetry(rep: &SymmetryReport) -> Value {
    json!({
        "locally_symmetric": rep.is_locally_symmetric,
        "max_residual": num(rep.max_residual),
        "witness": rep.witness.iter().map(|x| x + 1).collect::<Vec<_>>(),
    })
}

/// Curvature summary report.
pub fn curvature_report(a: &Analysis) -> Value {
    let curv = &a.curvature;
    let mut m = Map::new();
    m.insert("ricci".into(), matrix(curv.ricci()));
    m.insert("scalar".into(), num(curv.scalar()));
    m.insert("sectional".into(), sectional(curv));
    m.insert("locally_symmetric".into(), json!(a.symmetry.is_locally_symmetric));
    m.insert("max_residual".into(), num(a.symmetry.max_residual));
    m.insert(
        "witness".into(),
        json!(a.symmetry.witness.iter().map(|x| x + 1).collect::<Vec<_>>()),
    );
    m.insert("conformally_flat".into(), json!(a.conformally_flat));
    m.insert("c_space".into(), json!(a.is_c_space()));
    if let Some(d) = &a.weyl_divergence {
        m.insert("div_weyl_max".into(), num(d.max_abs));
    }
    m.insert(
        "residuals".into(),
        json!({
            "torsion": num(a.connection.torsion_residual(&a.algebra)),
            "metric": num(a.connection.metric_residual()),
            "riemann_symmetries": num(curv.symmetry_residual()),
            "weyl_trace": num(curv.weyl_trace_residual()),
            "weyl_decomposition": num(curv.decomposition_residual()),
        }),
    );
    Value::Object(m)
}

pub fn spectrum(spec: &SpectralDecomposition) -> Value {
    let n = spec.ambient_dim().unwrap_or(0);
    json!({
        "basis": basis_labels(n),
        "matrix": matrix(&spec.operator),
        "clusters": spec.clusters.iter().map(|c| json!({
            "lambda": num(c.lambda),
            "mult": c.multiplicity,
            "vectors": c.vectors.iter().map(vector).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn eigen_system(pairs: &[HPair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "lambda": num(p.lambda),
                    "h": vector(p.h.coeffs()),
                    "h0": subspace_basis(&p.h0),
                    "h1": subspace_basis(&p.h1),
                })
            })
            .collect(),
    )
}

pub fn decomposition(d: &SubspaceDecomposition) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(d.kind.to_string()));
    m.insert("exists".into(), json!(d.exists));
    if let Some(r) = &d.reason {
        m.insert("reason".into(), json!(r));
    }
    m.insert(
        "parts".into(),
        Value::Array(
            d.parts
                .iter()
                .enumerate()
                .map(|(i, p)| json!({"index": i, "dim": p.dim(), "basis": subspace_basis(p)}))
                .collect(),
        ),
    );
    let mut br = Map::new();
    for ((i, j), rel) in &d.bracket_table {
        br.insert(format!("({i},{j})"), json!(rel.to_string()));
    }
    m.insert("brackets".into(), Value::Object(br));
    Value::Object(m)
}

pub fn v_relations(rels: &[VRelation]) -> Value {
    let mut m = Map::new();
    for r in rels {
        m.insert(r.name.clone(), num(r.residual));
    }
    Value::Object(m)
}

/// Full report; stages that were not run are omitted.
pub fn report(a: &Analysis) -> Value {
    let mut m = Map::new();
    m.insert("algebra".into(), algebra(&a.algebra));
    m.insert("curvature".into(), curvature_report(a));
    if let Some(spec) = &a.spectrum {
        m.insert("spectrum".into(), spectrum(spec));
    }
    if let Some(cs) = &a.curvature_span {
        m.insert(
            "curvature_span".into(),
            json!({"dim": cs.basis.len(), "bracket_closure_dim": cs.bracket_closure_dim}),
        );
    }
    if let Some(sys) = &a.eigen_system {
        m.insert(
            "irreducible_system".into(),
            match sys {
                Ok(pairs) => eigen_system(pairs),
                Err(e) => error(e),
            },
        );
    }
    if let Some(v) = &a.v {
        let mut vj = decomposition(v);
        if let (Some(rels), Value::Object(obj)) = (&a.v_relations, &mut vj) {
            obj.insert("relations".into(), v_relations(rels));
        }
        m.insert("v_decomposition".into(), vj);
    }
    if let Some(z) = &a.z {
        m.insert(
            "z_decomposition".into(),
            match z {
                Ok(z) => decomposition(z),
                Err(e) => json!({"kind": "Z", "exists": false, "reason": e.to_string()}),
            },
        );
    }
    Value::Object(m)
}
