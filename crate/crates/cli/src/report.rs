//! Human-readable and CSV renderings of an analysis.

use std::fmt::Write;

use lie_curvature::catalog::{list_entries, Domain};
use lie_curvature::json::round12;
use lie_curvature::{Analysis, Subspace, SubspaceDecomposition};
use nalgebra::DVector;
use serde_json::{json, Value};

pub fn fmt_num(x: f64) -> String {
    format!("{}", round12(x))
}

pub fn fmt_opt(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

/// `e1`, `-e3`, or a linear combination such as `0.707106781187*e1 - 0.707106781187*e3`.
fn fmt_vector(v: &DVector<f64>) -> String {
    let mut out = String::new();
    for (i, &x) in v.iter().enumerate() {
        let x = round12(x);
        if x == 0.0 {
            continue;
        }
        let sign = if x < 0.0 { "-" } else { "+" };
        let mag = x.abs();
        let term = if mag == 1.0 {
            format!("e{}", i + 1)
        } else {
            format!("{mag}*e{}", i + 1)
        };
        if out.is_empty() {
            if x < 0.0 {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn fmt_subspace(s: &Subspace) -> String {
    let vecs: Vec<String> = s.basis().iter().map(fmt_vector).collect();
    format!("span{{{}}}", vecs.join(", "))
}

fn decomposition_text(out: &mut String, d: &SubspaceDecomposition) {
    if !d.exists {
        let reason = d.reason.as_deref().unwrap_or("trivial");
        let _ = writeln!(out, "{}-decomposition: none ({reason})", d.kind);
        return;
    }
    let _ = writeln!(out, "{}-decomposition:", d.kind);
    for (i, p) in d.parts.iter().enumerate() {
        let _ = writeln!(out, "  {}{i} (dim {}) = {}", d.kind, p.dim(), fmt_subspace(p));
    }
    for ((i, j), rel) in &d.bracket_table {
        let _ = writeln!(out, "  [{k}{i},{k}{j}] {rel}", k = d.kind);
    }
}

pub fn text(a: &Analysis) -> String {
    let mut out = String::new();
    let alg = &a.algebra;
    let _ = writeln!(
        out,
        "algebra: {} (dim {})",
        alg.label().unwrap_or("<unnamed>"),
        alg.dim()
    );
    for b in alg.brackets() {
        let _ = writeln!(
            out,
            "  [e{},e{}] has e{} component {}",
            b.i,
            b.j,
            b.k,
            fmt_num(b.v)
        );
    }
    let c = &a.curvature;
    let _ = writeln!(out, "scalar curvature: {}", fmt_num(c.scalar()));
    let _ = writeln!(out, "sectional curvatures:");
    for (&(i, j), &k) in c.sectional() {
        let _ = writeln!(out, "  K{}{} = {}", i + 1, j + 1, fmt_num(k));
    }
    let _ = writeln!(
        out,
        "locally symmetric: {} (max |nabla R| = {})",
        a.symmetry.is_locally_symmetric,
        fmt_num(a.symmetry.max_residual)
    );
    if let Some(cf) = a.conformally_flat {
        let _ = writeln!(out, "conformally flat: {cf}");
    }
    if let Some(d) = &a.weyl_divergence {
        let _ = writeln!(
            out,
            "C-space: {} (max |div W| = {})",
            d.is_c_space,
            fmt_num(d.max_abs)
        );
    }
    if let Some(spec) = &a.spectrum {
        let _ = writeln!(out, "curvature operator spectrum:");
        for cl in &spec.clusters {
            let _ = writeln!(out, "  {} (multiplicity {})", fmt_num(cl.lambda), cl.multiplicity);
        }
    }
    if let Some(cs) = &a.curvature_span {
        let _ = writeln!(
            out,
            "curvature span: dim {}, bracket closure dim {}",
            cs.basis.len(),
            cs.bracket_closure_dim
        );
    }
    if let Some(Err(e)) = &a.eigen_system {
        let _ = writeln!(out, "irreducible system: {e}");
    }
    if let Some(v) = &a.v {
        decomposition_text(&mut out, v);
    }
    match &a.z {
        Some(Ok(z)) => decomposition_text(&mut out, z),
        Some(Err(e)) => {
            let _ = writeln!(out, "Z-decomposition: none ({e})");
        }
        None => {}
    }
    out
}

pub const SUMMARY_HEADER: [&str; 8] = [
    "locally_symmetric",
    "max_residual",
    "conformally_flat",
    "c_space",
    "scalar",
    "v_exists",
    "z_exists",
    "z_dims",
];

pub fn summary_fields(a: &Analysis) -> Vec<String> {
    let z_dims = match &a.z {
        Some(Ok(z)) if z.exists => z
            .parts
            .iter()
            .map(|p| p.dim().to_string())
            .collect::<Vec<_>>()
            .join(" "),
        _ => String::new(),
    };
    vec![
        a.symmetry.is_locally_symmetric.to_string(),
        fmt_num(a.symmetry.max_residual),
        fmt_opt(a.conformally_flat),
        fmt_opt(a.is_c_space()),
        fmt_num(a.curvature.scalar()),
        fmt_opt(a.v_exists()),
        fmt_opt(a.z_exists()),
        z_dims,
    ]
}

pub fn csv_summary(a: &Analysis) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["label", "dim"];
    header.extend(SUMMARY_HEADER);
    w.write_record(&header).expect("write to memory");
    let mut row = vec![
        a.algebra.label().unwrap_or("").to_string(),
        a.algebra.dim().to_string(),
    ];
    row.extend(summary_fields(a));
    w.write_record(&row).expect("write to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

fn domain_note(d: Domain) -> &'static str {
    match d {
        Domain::Positive => " (> 0)",
        Domain::Real => "",
    }
}

pub fn catalog_text() -> String {
    let mut out = String::new();
    for e in list_entries() {
        let _ = writeln!(out, "{}  (dim {})", e.name, e.dim);
        let _ = writeln!(out, "  constants: {}", e.constants);
        if !e.params.is_empty() {
            let ps: Vec<String> = e
                .params
                .iter()
                .map(|p| format!("{}={}{}", p.name, p.default, domain_note(p.domain)))
                .collect();
            let _ = writeln!(out, "  params: {}", ps.join(", "));
        }
        if !e.variants.is_empty() {
            let _ = writeln!(out, "  variants: {}", e.variants.join(", "));
        }
        for r in e.restrictions {
            let _ = writeln!(out, "  restriction: {r}");
        }
    }
    out
}

pub fn catalog_json() -> Value {
    Value::Array(
        list_entries()
            .iter()
            .map(|e| {
                json!({
                    "name": e.name,
                    "dim": e.dim,
                    "constants": e.constants,
                    "params": e.params.iter().map(|p| json!({
                        "name": p.name,
                        "default": p.default,
                        "positive": p.domain == Domain::Positive,
                    })).collect::<Vec<_>>(),
                    "variants": e.variants,
                    "restrictions": e.restrictions,
                    "locally_symmetric": e.expected_verdict().map(|v| json!({
                        "value": v.locally_symmetric.as_str(),
                        "condition": v.condition,
                        "variant": v.variant,
                    })),
                })
            })
            .collect(),
    )
}
