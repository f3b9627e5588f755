//! Cyclic Jacobi eigen-solver for small dense symmetric matrices.

use nalgebra::{DMatrix, DVector};

use crate::tol::JACOBI_REL;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching eigenvector columns.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

impl SymmetricEigen {
    pub fn vector(&self, idx: usize) -> DVector<f64> {
        self.vectors.column(idx).into_owned()
    }
}

fn off_diagonal_norm(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[(p, q)] * a[(p, q)];
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a symmetric matrix by cyclic Jacobi rotations.
///
/// Only the symmetric part of `m` is used. Iteration stops once the
/// off-diagonal Frobenius norm is below `1e-13 * ||m||_F`.
pub fn symmetric_eigen(m: &DMatrix<f64>) -> SymmetricEigen {
    assert!(m.is_square(), "matrix must be square");
    let n = m.nrows();
    let mut a = (m + m.transpose()) * 0.5;
    let mut v = DMatrix::<f64>::identity(n, n);
    let target = JACOBI_REL * a.norm();

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].total_cmp(&a[(x, x)]).then(x.cmp(&y)));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    SymmetricEigen { values, vectors }
}

/// Orthonormal basis of the numerical null space of `m` (any shape):
/// right singular vectors whose singular value is at most
/// `rel_tol * (1 + sigma_max)`.
pub fn null_space(m: &DMatrix<f64>, rel_tol: f64) -> Vec<DVector<f64>> {
    if m.ncols() == 0 {
        return Vec::new();
    }
    let gram = m.transpose() * m;
    let eig = symmetric_eigen(&gram);
    let sigma_max = eig.values.first().copied().unwrap_or(0.0).max(0.0).sqrt();
    let cutoff = rel_tol * (1.0 + sigma_max);
    eig.values
        .iter()
        .enumerate()
        .filter(|(_, &lam)| lam.max(0.0).sqrt() <= cutoff)
        .map(|(i, _)| eig.vector(i))
        .collect()
}
