//! Parameter grids over catalog entries.

use lie_curvature::catalog::{CatalogEntry, Params};
use lie_curvature::{json, Analysis, Error, Stage};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::report::{summary_fields, SUMMARY_HEADER};

/// One grid point: explicit `(key, value)` pairs plus the variant.
#[derive(Debug, Clone)]
pub struct Point {
    pub values: Vec<(String, f64)>,
    pub variant: Option<String>,
}

pub struct Row {
    pub point: Point,
    pub outcome: Result<Analysis, Error>,
}

fn parse_axis(text: &str) -> Result<(String, Vec<f64>), Error> {
    let (k, vs) = text
        .split_once('=')
        .ok_or_else(|| Error::Parse(format!("expected key=v1,v2,..., got {text:?}")))?;
    let values = vs
        .split(',')
        .map(|v| {
            let v = v.trim();
            v.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| Error::Parse(format!("parameter {k}: not a number: {v:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((k.trim().to_string(), values))
}

/// Cartesian product of the axes; the first axis varies slowest. Keys are
/// checked against the entry up front so a typo fails the whole sweep.
pub fn grid(entry: &CatalogEntry, axes: &[String], variant: Option<&str>) -> Result<Vec<Point>, Error> {
    let mut parsed = Vec::new();
    for a in axes {
        let (k, vs) = parse_axis(a)?;
        if !entry.params.iter().any(|p| p.name == k) {
            return Err(Error::UnknownParameter {
                entry: entry.name.to_string(),
                param: k,
            });
        }
        parsed.push((k, vs));
    }
    if let Some(v) = variant {
        if !entry.variants.contains(&v) {
            return Err(Error::UnknownVariant {
                entry: entry.name.to_string(),
                variant: v.to_string(),
            });
        }
    }
    let mut points = vec![Vec::new()];
    for (k, vs) in &parsed {
        points = points
            .into_iter()
            .flat_map(|prefix: Vec<(String, f64)>| {
                vs.iter().map(move |&v| {
                    let mut p = prefix.clone();
                    p.push((k.clone(), v));
                    p
                })
            })
            .collect();
    }
    Ok(points
        .into_iter()
        .map(|values| Point {
            values,
            variant: variant.map(str::to_string),
        })
        .collect())
}

fn analyze_point(entry: &CatalogEntry, point: &Point) -> Result<Analysis, Error> {
    let mut p = Params::new();
    for (k, v) in &point.values {
        p.set(k, *v);
    }
    if let Some(v) = &point.variant {
        p.set_variant(v);
    }
    let alg = entry.build(&p)?;
    Ok(Analysis::run(&alg, Stage::All))
}

/// Evaluates every point in parallel; rows keep grid order.
pub fn evaluate(entry: &CatalogEntry, points: &[Point]) -> Vec<Row> {
    points
        .par_iter()
        .map(|pt| Row {
            point: pt.clone(),
            outcome: analyze_point(entry, pt).and_then(|a| match a.ambiguity() {
                Some(e) => Err(e.clone()),
                None => Ok(a),
            }),
        })
        .collect()
}

/// Resolved parameter values of a row, in the entry's declared order.
fn resolved(entry: &CatalogEntry, point: &Point) -> Vec<f64> {
    entry
        .params
        .iter()
        .map(|spec| {
            point
                .values
                .iter()
                .rev()
                .find(|(k, _)| k == spec.name)
                .map_or(spec.default, |(_, v)| *v)
        })
        .collect()
}

pub fn to_csv(entry: &CatalogEntry, rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = entry.params.iter().map(|p| p.name).collect();
    header.push("variant");
    header.extend(SUMMARY_HEADER);
    header.push("error");
    w.write_record(&header).expect("write to memory");
    for row in rows {
        let mut rec: Vec<String> = resolved(entry, &row.point)
            .iter()
            .map(|v| format!("{v}"))
            .collect();
        rec.push(
            row.point
                .variant
                .clone()
                .or_else(|| entry.variants.first().map(|v| v.to_string()))
                .unwrap_or_default(),
        );
        match &row.outcome {
            Ok(a) => {
                rec.extend(summary_fields(a));
                rec.push(String::new());
            }
            Err(e) => {
                rec.extend(std::iter::repeat_n(String::new(), SUMMARY_HEADER.len()));
                rec.push(format!("{}: {e}", e.kind()));
            }
        }
        w.write_record(&rec).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
}

pub fn to_json(rows: &[Row]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                let mut params = Map::new();
                for (k, v) in &row.point.values {
                    params.insert(k.clone(), json::num(*v));
                }
                let mut m = Map::new();
                m.insert("params".into(), Value::Object(params));
                m.insert("variant".into(), json!(row.point.variant));
                match &row.outcome {
                    Ok(a) => {
                        m.insert("locally_symmetric".into(), json!(a.symmetry.is_locally_symmetric));
                        m.insert("max_residual".into(), json::num(a.symmetry.max_residual));
                        m.insert("conformally_flat".into(), json!(a.conformally_flat));
                        m.insert("c_space".into(), json!(a.is_c_space()));
                        m.insert("v_exists".into(), json!(a.v_exists()));
                        m.insert("z_exists".into(), json!(a.z_exists()));
                    }
                    Err(e) => {
                        m.insert("error".into(), json::error(e));
                    }
                }
                Value::Object(m)
            })
            .collect(),
    )
}
