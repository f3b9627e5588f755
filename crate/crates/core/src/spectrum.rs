//! Matrix of the curvature operator on bivectors and its clustered spectrum.

use nalgebra::{DMatrix, DVector};

use crate::bivector::{ambient_dim_for, pair_count, pairs, Bivector};
use crate::curvature::CurvatureData;
use crate::eigen::symmetric_eigen;
use crate::subspace::canonical_basis;
use crate::tol::{eps_cluster, eps_spec};

/// Entry `((i,j), (k,l))` is `R[i][j][k][l]` over the lexicographic basis.
pub fn curvature_operator_matrix(curv: &CurvatureData) -> DMatrix<f64> {
    let n = curv.dim();
    let ps = pairs(n);
    let r = curv.riemann();
    let big = pair_count(n);
    DMatrix::from_fn(big, big, |a, b| {
        let (i, j) = ps[a];
        let (k, l) = ps[b];
        r[(i, j, k, l)]
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cluster {
    pub lambda: f64,
    pub multiplicity: usize,
    /// Orthonormal, canonically chosen basis of the eigenspace.
    pub vectors: Vec<DVector<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    pub operator: DMatrix<f64>,
    /// Sorted by decreasing eigenvalue.
    pub clusters: Vec<Cluster>,
}

impl SpectralDecomposition {
    /// Max-entry norm of the operator; scale for the spectral tolerances.
    pub fn norm(&self) -> f64 {
        self.operator.amax()
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.clusters
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.lambda, c.multiplicity))
            .collect()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        ambient_dim_for(self.operator.nrows())
    }

    /// `(lambda, eigenbivector)` pairs, descending.
    pub fn eigen_bivectors(&self) -> Vec<(f64, Bivector)> {
        let n = self
            .ambient_dim()
            .expect("operator size is not a bivector dimension");
        self.clusters
            .iter()
            .flat_map(|c| {
                c.vectors
                    .iter()
                    .map(move |v| (c.lambda, Bivector::new(n, v.clone())))
            })
            .collect()
    }

    /// Largest `|M v - lambda v|` over all reported pairs.
    pub fn max_residual(&self) -> f64 {
        self.clusters
            .iter()
            .flat_map(|c| {
                c.vectors
                    .iter()
                    .map(move |v| (&self.operator * v - v * c.lambda).norm())
            })
            .fold(0.0, f64::max)
    }
}

/// Eigen-decomposition with eigenvalues closer than `1e-7 (1 + |M|)`
/// merged; each cluster reports the mean of its members.
pub fn spectrum(matrix: &DMatrix<f64>) -> SpectralDecomposition {
    let eig = symmetric_eigen(matrix);
    let norm = matrix.amax();
    let gap = eps_cluster(norm);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (idx, &val) in eig.values.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if eig.values[*g.last().unwrap()] - val < gap => g.push(idx),
            _ => groups.push(vec![idx]),
        }
    }
    let clusters = groups
        .into_iter()
        .map(|g| {
            let lambda = g.iter().map(|&i| eig.values[i]).sum::<f64>() / g.len() as f64;
            let mut proj = DMatrix::zeros(matrix.nrows(), matrix.nrows());
            for &i in &g {
                let v = eig.vector(i);
                proj += &v * v.transpose();
            }
            Cluster {
                lambda,
                multiplicity: g.len(),
                vectors: canonical_basis(&proj, g.len()),
            }
        })
        .collect();
    SpectralDecomposition {
        operator: matrix.clone(),
        clusters,
    }
}

/// Is `v` an eigenvector for `lambda` within `1e-9 (1 + |M|) |v|`?
pub fn is_eigenvector(matrix: &DMatrix<f64>, v: &DVector<f64>, lambda: f64) -> bool {
    let vn = v.norm();
    vn > 0.0 && (matrix * v - v * lambda).norm() < eps_spec(matrix.amax()) * vn
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_single_cluster() {
        let s = spectrum(&DMatrix::zeros(6, 6));
        assert_eq!(s.clusters.len(), 1);
        assert_eq!(s.clusters[0].multiplicity, 6);
        assert_eq!(s.clusters[0].lambda, 0.0);
        // canonical basis of the whole space is the coordinate basis
        for (k, v) in s.clusters[0].vectors.iter().enumerate() {
            assert_eq!(v[k], 1.0);
        }
    }

    #[test]
    fn diagonal_clusters() {
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![-1.75, 0.0, 0.25, 0.0, 0.25, 0.0]));
        let s = spectrum(&d);
        let lambdas: Vec<_> = s.clusters.iter().map(|c| (c.lambda, c.multiplicity)).collect();
        assert_eq!(lambdas, vec![(0.25, 2), (0.0, 3), (-1.75, 1)]);
        assert_eq!(s.eigenvalues(), vec![0.25, 0.25, 0.0, 0.0, 0.0, -1.75]);
        assert!(s.max_residual() < 1e-15);
        assert_eq!(s.ambient_dim(), Some(4));
    }

    #[test]
    fn near_equal_values_merge() {
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 1.0 + 1e-10, 2.0]));
        let s = spectrum(&d);
        assert_eq!(s.clusters.len(), 2);
        assert_eq!(s.clusters[1].multiplicity, 2);
    }

    #[test]
    fn eigenvector_predicate() {
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0]));
        assert!(is_eigenvector(&d, &DVector::from_vec(vec![0.0, 3.0]), 2.0));
        assert!(!is_eigenvector(&d, &DVector::from_vec(vec![1.0, 1.0]), 1.0));
        assert!(!is_eigenvector(&d, &DVector::from_vec(vec![0.0, 0.0]), 1.0));
    }
}
