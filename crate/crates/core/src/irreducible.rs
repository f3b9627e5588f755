//! Irreducibility of eigen-bivectors of the curvature operator.
//!
//! An eigenvector `h` is reducible when some Darboux normal form of `h`
//! splits into two nonzero partial sums that are eigenvectors too. Such a
//! split is the same thing as an orthogonal projector `P` onto an
//! `h̃`-invariant part of the image of `h̃` with `h̃P` an eigenvector. When a
//! frequency is repeated the Darboux form is not unique, and the search runs
//! over the linear space of symmetric `X` commuting with `h̃` instead: if the
//! only solutions of `(M - λ) bivec(h̃X) = 0` are multiples of the image
//! projector, no split exists.

use nalgebra::{DMatrix, DVector};

use crate::bivector::{jordan_darboux, Bivector, JordanData, JordanPlane, SkewEndomorphism};
use crate::eigen::{null_space, symmetric_eigen};
use crate::error::{Error, Result};
use crate::tol::{eps_cluster, eps_spec};

/// Relative rank threshold for the certificate's null space.
const CERT_RANK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub enum Irreducibility {
    Irreducible,
    /// `h = parts[0] + parts[1]`, both eigenvectors for the same eigenvalue.
    Reducible(Vec<Bivector>),
    Ambiguous,
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

fn residual(m: &DMatrix<f64>, h: &Bivector, lambda: f64) -> f64 {
    (m * h.coeffs() - h.coeffs() * lambda).norm()
}

/// Loose eigenvector test for partial sums, whose Darboux planes carry
/// eigen-solver error.
fn is_split_part(m: &DMatrix<f64>, s: &Bivector, lambda: f64, whole: f64) -> bool {
    let sn = s.norm();
    sn > eps_cluster(0.0) * whole && residual(m, s, lambda) < eps_cluster(m.amax()) * sn
}

pub fn is_irreducible(h: &Bivector, operator: &DMatrix<f64>, lambda: f64) -> Result<Irreducibility> {
    let hn = h.norm();
    let res = residual(operator, h, lambda);
    if hn == 0.0 || res >= eps_spec(operator.amax()) * hn.max(1.0) {
        return Err(Error::NotAnEigenvector {
            lambda,
            residual: res,
        });
    }
    let jordan = jordan_darboux(h);
    let q = jordan.rank();
    // covers dim 4 with a 2-dimensional kernel
    if q <= 1 {
        return Ok(Irreducibility::Irreducible);
    }

    // splits of the computed Darboux form; subsets containing plane 0 suffice
    let summands: Vec<Bivector> = jordan.planes.iter().map(JordanPlane::summand).collect();
    for mask in 1u64..(1u64 << (q - 1)) {
        let subset = (mask << 1) | 1;
        if subset == (1u64 << q) - 1 {
            continue;
        }
        let part = (0..q)
            .filter(|k| subset & (1 << k) != 0)
            .fold(Bivector::zero(h.ambient_dim()), |acc, k| acc.add(&summands[k]));
        if is_split_part(operator, &part, lambda, hn) {
            return Ok(Irreducibility::Reducible(vec![part.clone(), h.sub(&part)]));
        }
    }

    let groups = frequency_groups(&jordan);
    if groups.iter().all(|g| g.len() == 1) {
        return Ok(Irreducibility::Irreducible);
    }
    Ok(certificate(h, &jordan, &groups, operator, lambda))
}

/// Indices of planes sharing a frequency.
fn frequency_groups(jordan: &JordanData) -> Vec<Vec<usize>> {
    let nu_max = jordan.planes.first().map_or(0.0, |p| p.frequency);
    let tol = eps_cluster(nu_max);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (k, p) in jordan.planes.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if jordan.planes[*g.last().unwrap()].frequency - p.frequency < tol => g.push(k),
            _ => groups.push(vec![k]),
        }
    }
    groups
}

fn outer(a: &DVector<f64>, b: &DVector<f64>) -> DMatrix<f64> {
    a * b.transpose()
}

/// Basis of symmetric matrices commuting with `h̃` and vanishing on its
/// kernel: Hermitian matrices on each equal-frequency block.
fn commutant_basis(jordan: &JordanData, groups: &[Vec<usize>]) -> Vec<DMatrix<f64>> {
    let pl = &jordan.planes;
    let mut out = Vec::new();
    for g in groups {
        for (a, &k) in g.iter().enumerate() {
            out.push(outer(&pl[k].v, &pl[k].v) + outer(&pl[k].w, &pl[k].w));
            for &l in &g[a + 1..] {
                let re = outer(&pl[k].v, &pl[l].v) + outer(&pl[k].w, &pl[l].w);
                out.push(&re + re.transpose());
                let im = outer(&pl[k].w, &pl[l].v) - outer(&pl[k].v, &pl[l].w);
                out.push(&im + im.transpose());
            }
        }
    }
    out
}

fn certificate(
    h: &Bivector,
    jordan: &JordanData,
    groups: &[Vec<usize>],
    operator: &DMatrix<f64>,
    lambda: f64,
) -> Irreducibility {
    let n = h.ambient_dim();
    let hs = h.to_skew();
    let basis = commutant_basis(jordan, groups);
    let shifted = operator - DMatrix::identity(operator.nrows(), operator.nrows()) * lambda;
    let image_of = |x: &DMatrix<f64>| -> DVector<f64> {
        let prod = SkewEndomorphism::from_matrix(&(hs.matrix() * x));
        &shifted * prod.to_bivector().coeffs()
    };
    let cols: Vec<DVector<f64>> = basis.iter().map(image_of).collect();
    let a = DMatrix::from_columns(&cols);
    let kernel = null_space(&a, CERT_RANK);
    if kernel.len() <= 1 {
        return Irreducibility::Irreducible;
    }

    let combine = |coef: &DVector<f64>| -> DMatrix<f64> {
        basis
            .iter()
            .zip(coef.iter())
            .fold(DMatrix::zeros(n, n), |acc, (b, &c)| acc + b * c)
    };
    let mut candidates: Vec<DMatrix<f64>> = kernel.iter().map(combine).collect();
    // a generic element separates every invariant part at once
    let generic = kernel
        .iter()
        .enumerate()
        .fold(DVector::zeros(basis.len()), |acc, (i, k)| {
            acc + k * (1.0 + (i as f64 + 1.0).sqrt().fract())
        });
    candidates.push(combine(&generic));

    let image = jordan.image();
    let q = image.matrix();
    let hn = h.norm();
    for x in &candidates {
        let restricted = q.transpose() * x * &q;
        let eig = symmetric_eigen(&restricted);
        let tol = eps_cluster(restricted.amax());
        let mut start = 0;
        while start < eig.values.len() {
            let mut end = start + 1;
            while end < eig.values.len() && eig.values[end - 1] - eig.values[end] < tol {
                end += 1;
            }
            if end - start < eig.values.len() {
                let u = eig.vectors.columns(start, end - start);
                let qu = &q * u;
                let proj = &qu * qu.transpose();
                let part = SkewEndomorphism::from_matrix(&(hs.matrix() * proj)).to_bivector();
                if is_split_part(operator, &part, lambda, hn) && h.sub(&part).norm() > eps_cluster(0.0) * hn {
                    return Irreducibility::Reducible(vec![part.clone(), h.sub(&part)]);
                }
            }
            start = end;
        }
    }
    Irreducibility::Ambiguous
}
