//! Subspaces of a Euclidean coordinate space, stored as orthonormal bases.

use nalgebra::{DMatrix, DVector};

use crate::tol::{EPS_NUM, RANK_EPS};

/// Ties between pivot candidates closer than this are broken by index.
const PIVOT_TIE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<DVector<f64>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::coordinate(ambient_dim, &(0..ambient_dim).collect::<Vec<_>>())
    }

    /// Span of the coordinate vectors `e_i` for the given 0-based indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vecs: Vec<_> = indices
            .iter()
            .map(|&i| DVector::from_fn(ambient_dim, |r, _| if r == i { 1.0 } else { 0.0 }))
            .collect();
        Self::span(ambient_dim, &vecs)
    }

    /// Rank-revealing span: pivoted Gram-Schmidt with two-pass
    /// reorthogonalization. Directions whose residual falls below
    /// `1e-9 * max(1, largest input norm)` are dropped.
    pub fn span(ambient_dim: usize, vectors: &[DVector<f64>]) -> Self {
        let scale = vectors.iter().fold(1.0f64, |m, v| m.max(v.norm()));
        let tol = RANK_EPS * scale;
        let mut residuals: Vec<DVector<f64>> = vectors.to_vec();
        let mut basis: Vec<DVector<f64>> = Vec::new();
        while basis.len() < ambient_dim {
            let Some((idx, norm)) = residuals
                .iter()
                .enumerate()
                .map(|(i, r)| (i, r.norm()))
                .max_by(|a, b| a.1.total_cmp(&b.1).then(b.0.cmp(&a.0)))
            else {
                break;
            };
            if norm <= tol {
                break;
            }
            let mut q = residuals[idx].clone();
            for b in &basis {
                q -= b * b.dot(&q);
            }
            let qn = q.norm();
            if qn <= tol {
                residuals[idx].fill(0.0);
                continue;
            }
            q /= qn;
            for r in residuals.iter_mut() {
                let c = q.dot(r);
                *r -= &q * c;
            }
            basis.push(q);
        }
        Self { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[DVector<f64>] {
        &self.basis
    }

    /// Basis vectors as columns.
    pub fn matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.ambient_dim, self.dim(), |r, c| self.basis[c][r])
    }

    pub fn projector(&self) -> DMatrix<f64> {
        let b = self.matrix();
        &b * b.transpose()
    }

    pub fn project(&self, v: &DVector<f64>) -> DVector<f64> {
        let mut p = DVector::zeros(self.ambient_dim);
        for b in &self.basis {
            p += b * b.dot(v);
        }
        p
    }

    /// Norm of the component of `v` orthogonal to the subspace.
    pub fn residual(&self, v: &DVector<f64>) -> f64 {
        (v - self.project(v)).norm()
    }

    pub fn contains(&self, v: &DVector<f64>) -> bool {
        self.residual(v) < EPS_NUM * (1.0 + v.norm())
    }

    /// Largest out-of-`other` component over the basis of `self`; zero iff
    /// `self ⊆ other`.
    pub fn excess_over(&self, other: &Subspace) -> f64 {
        self.basis.iter().fold(0.0, |m, b| m.max(other.residual(b)))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.excess_over(other) < EPS_NUM
    }

    /// Largest |<a, b>| over the two bases; zero iff the subspaces are orthogonal.
    pub fn max_overlap(&self, other: &Subspace) -> f64 {
        let mut m = 0.0f64;
        for a in &self.basis {
            for b in &other.basis {
                m = m.max(a.dot(b).abs());
            }
        }
        m
    }

    pub fn is_orthogonal_to(&self, other: &Subspace) -> bool {
        self.max_overlap(other) < EPS_NUM
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Self::span(self.ambient_dim, &vecs)
    }

    pub fn sum_all<'a>(ambient_dim: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let vecs: Vec<_> = parts.into_iter().flat_map(|p| p.basis.iter().cloned()).collect();
        Self::span(ambient_dim, &vecs)
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        let n = self.ambient_dim;
        let residuals: Vec<_> = (0..n)
            .map(|i| {
                let e = DVector::from_fn(n, |r, _| if r == i { 1.0 } else { 0.0 });
                &e - self.project(&e)
            })
            .collect();
        let comp = Self::span(n, &residuals);
        // guard against rounding leaving a sliver of `self` in the complement
        debug_assert!(comp.dim() + self.dim() == n);
        comp
    }

    /// Sine of the largest principal angle; 1 when the dimensions differ.
    pub fn principal_angle_sin(&self, other: &Subspace) -> f64 {
        if self.dim() != other.dim() {
            return 1.0;
        }
        self.excess_over(other).max(other.excess_over(self)).min(1.0)
    }

    pub fn same_as(&self, other: &Subspace, tol: f64) -> bool {
        self.principal_angle_sin(other).asin() < tol
    }

    /// A basis-independent orthonormal basis: pivoted Gram-Schmidt on the
    /// columns of the orthogonal projector, largest residual first, ties
    /// broken by lowest coordinate index, each vector sign-normalized.
    pub fn canonical(&self) -> Subspace {
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: canonical_basis(&self.projector(), self.dim()),
        }
    }
}

/// Flips `v` so that its first coordinate of largest magnitude is positive.
pub fn normalize_sign(v: &mut DVector<f64>) {
    let max = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    if let Some(x) = v.iter().find(|x| x.abs() >= max - PIVOT_TIE * max) {
        if *x < 0.0 {
            v.neg_mut();
        }
    }
}

/// Orthonormal basis of the range of the projector `p` (of known rank),
/// chosen deterministically from its columns.
pub(crate) fn canonical_basis(p: &DMatrix<f64>, rank: usize) -> Vec<DVector<f64>> {
    let n = p.nrows();
    let mut residuals: Vec<DVector<f64>> = (0..n).map(|c| p.column(c).into_owned()).collect();
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(rank);
    for _ in 0..rank {
        let norms: Vec<f64> = residuals.iter().map(|r| r.norm()).collect();
        let max = norms.iter().fold(0.0f64, |m, &x| m.max(x));
        if max <= RANK_EPS {
            break;
        }
        let idx = norms
            .iter()
            .position(|&x| x >= max - PIVOT_TIE * max)
            .expect("max attained");
        let mut q = residuals[idx].clone();
        for b in &basis {
            q -= b * b.dot(&q);
        }
        q /= q.norm();
        for r in residuals.iter_mut() {
            let c = q.dot(r);
            *r -= &q * c;
        }
        basis.push(q);
    }
    for b in basis.iter_mut() {
        normalize_sign(b);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[f64]) -> DVector<f64> {
        DVector::from_row_slice(xs)
    }

    #[test]
    fn span_drops_dependent_vectors() {
        let s = Subspace::span(
            3,
            &[v(&[1.0, 1.0, 0.0]), v(&[2.0, 2.0, 0.0]), v(&[0.0, 0.0, 0.0])],
        );
        assert_eq!(s.dim(), 1);
        let s = Subspace::span(3, &[v(&[1.0, 0.0, 0.0]), v(&[1.0, 1e-12, 0.0])]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn complement_and_containment() {
        let s = Subspace::coordinate(4, &[0, 2]);
        let c = s.orthogonal_complement();
        assert_eq!(c.dim(), 2);
        assert!(c.is_orthogonal_to(&s));
        assert!(c.same_as(&Subspace::coordinate(4, &[1, 3]), 1e-12));
        assert!(s.is_subspace_of(&Subspace::full(4)));
        assert!(!Subspace::full(4).is_subspace_of(&s));
        assert!(Subspace::zero(4).is_subspace_of(&s));
        assert_eq!(Subspace::zero(3).orthogonal_complement().dim(), 3);
        assert_eq!(Subspace::full(3).orthogonal_complement().dim(), 0);
    }

    #[test]
    fn canonical_prefers_coordinate_axes() {
        let s = Subspace::span(3, &[v(&[1.0, 1.0, 0.0]), v(&[1.0, -1.0, 0.0])]).canonical();
        assert!((&s.basis()[0] - v(&[1.0, 0.0, 0.0])).amax() < 1e-14);
        assert!((&s.basis()[1] - v(&[0.0, 1.0, 0.0])).amax() < 1e-14);
    }

    #[test]
    fn principal_angle() {
        let a = Subspace::coordinate(2, &[0]);
        let t: f64 = 0.1;
        let b = Subspace::span(2, &[v(&[t.cos(), t.sin()])]);
        assert!((a.principal_angle_sin(&b).asin() - t).abs() < 1e-12);
    }

    #[test]
    fn sign_normalization() {
        let mut x = v(&[0.5, -0.5, 0.1]);
        normalize_sign(&mut x);
        assert_eq!(x[0], 0.5);
        let mut y = v(&[0.1, -0.9]);
        normalize_sign(&mut y);
        assert_eq!(y[1], 0.9);
    }
}
