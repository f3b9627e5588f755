#![allow(dead_code)]

use lie_curvature::catalog::{entry, Params, Resolved};
use lie_curvature::{analyze, Analysis, MetricLieAlgebra, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn build(name: &str, params: &[(&str, f64)]) -> MetricLieAlgebra {
    build_variant(name, None, params)
}

pub fn build_variant(name: &str, variant: Option<&str>, params: &[(&str, f64)]) -> MetricLieAlgebra {
    let mut p = Params::new();
    for (k, v) in params {
        p.set(k, *v);
    }
    if let Some(v) = variant {
        p.set_variant(v);
    }
    entry(name).unwrap().build(&p).unwrap()
}

pub fn sample(
    name: &str,
    variant: Option<&'static str>,
    rng: &mut ChaCha8Rng,
) -> (Resolved, MetricLieAlgebra) {
    let e = entry(name).unwrap();
    let r = e.sample(rng, variant);
    let alg = e.build_resolved(&r).unwrap();
    (r, alg)
}

pub fn run(alg: &MetricLieAlgebra) -> Analysis {
    analyze(alg)
}

/// Span of 1-based coordinate vectors.
pub fn span(n: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(n, &idx.iter().map(|i| i - 1).collect::<Vec<_>>())
}

/// Unimodular Milnor constants, mixing generic draws with the special
/// patterns where coordinates coincide, vanish, or add up.
pub fn milnor_uni_params(rng: &mut ChaCha8Rng) -> [f64; 3] {
    let a: f64 = rng.random_range(-2.0..2.0);
    let b: f64 = rng.random_range(-2.0..2.0);
    let c = match rng.random_range(0..8) {
        0 => a,
        1 => b,
        2 => 0.0,
        3 => a + b,
        4 => a - b,
        5 => b - a,
        _ => rng.random_range(-2.0..2.0),
    };
    let mut p = [a, b, c];
    match rng.random_range(0..6) {
        0 => p.swap(0, 2),
        1 => p.swap(1, 2),
        2 => p.swap(0, 1),
        3 => p = [p[1], p[2], p[0]],
        4 => p = [p[2], p[0], p[1]],
        _ => {}
    }
    if rng.random_range(0..5) == 0 {
        let z = rng.random_range(0..3);
        p[z] = 0.0;
    }
    p
}

/// Nonunimodular Milnor constants satisfying `a + d != 0`, `ac + bd = 0`.
pub fn milnor_nonuni_params(rng: &mut ChaCha8Rng) -> [f64; 4] {
    loop {
        let a: f64 = rng.random_range(-2.0..2.0);
        let b: f64 = rng.random_range(-2.0..2.0);
        let d: f64 = rng.random_range(-2.0..2.0);
        let p = match rng.random_range(0..6) {
            0 => [a, b, -b, a],
            1 => [a, 0.0, 0.0, d],
            2 => [0.0, 0.0, b, d],
            3 => [a, a, -a, a],
            4 => [a, b, 0.0, 0.0],
            _ => [a, b, -b * d / a, d],
        };
        let scale = p.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if (p[0] + p[3]).abs() > 1e-3 * (1.0 + scale) && (p[0] * p[2] + p[1] * p[3]).abs() < 1e-12 {
            return p;
        }
    }
}
