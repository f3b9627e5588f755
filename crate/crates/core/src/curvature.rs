//! Levi-Civita connection, Riemann/Ricci/Schouten/Weyl tensors and the
//! derived verdicts (local symmetry, conformal flatness, harmonic Weyl).
//!
//! Curvature uses `R(x,y) = ∇_{[x,y]} - ∇_x ∇_y + ∇_y ∇_x`, with components
//! `R[i][j][k][l] = <R(e_i,e_j)e_k, e_l>` and `K_ij = R[i][j][i][j]`.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use crate::algebra::MetricLieAlgebra;
use crate::error::{Error, Result};
use crate::tensor::{Tensor3, Tensor4};
use crate::tol::{eps_alg, eps_sym};

/// `gamma[(i, j, k)] = <∇_{e_i} e_j, e_k>`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionTable {
    gamma: Tensor3,
}

impl ConnectionTable {
    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> f64 {
        self.gamma[(i, j, k)]
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.gamma
    }

    /// `∇_{e_i} e_j` as a coordinate vector.
    pub fn nabla_basis(&self, i: usize, j: usize) -> DVector<f64> {
        DVector::from_fn(self.dim(), |k, _| self.gamma[(i, j, k)])
    }

    /// `∇_x y` for left-invariant fields with constant coordinates.
    pub fn nabla(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let n = self.dim();
        let mut out = DVector::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let w = x[i] * y[j];
                if w == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += w * self.gamma[(i, j, k)];
                }
            }
        }
        out
    }

    /// `max |gamma_ij^k - gamma_ji^k - c_ij^k|`.
    pub fn torsion_residual(&self, alg: &MetricLieAlgebra) -> f64 {
        let n = self.dim();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let t = self.gamma[(i, j, k)] - self.gamma[(j, i, k)] - alg.c(i, j, k);
                    m = m.max(t.abs());
                }
            }
        }
        m
    }

    /// `max |gamma_ij^k + gamma_ik^j|`.
    pub fn metric_residual(&self) -> f64 {
        let n = self.dim();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m = m.max((self.gamma[(i, j, k)] + self.gamma[(i, k, j)]).abs());
                }
            }
        }
        m
    }
}

/// Koszul formula in an orthonormal left-invariant frame.
pub fn levi_civita(alg: &MetricLieAlgebra) -> ConnectionTable {
    let c = alg.structure_constants();
    let gamma = Tensor3::from_fn(alg.dim(), |i, j, k| {
        0.5 * (c[(i, j, k)] - c[(j, k, i)] + c[(k, i, j)])
    });
    ConnectionTable { gamma }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureData {
    riemann: Tensor4,
    ricci: DMatrix<f64>,
    scalar: f64,
    schouten: Option<DMatrix<f64>>,
    weyl: Option<Tensor4>,
    sectional: BTreeMap<(usize, usize), f64>,
}

impl CurvatureData {
    pub fn dim(&self) -> usize {
        self.riemann.dim()
    }

    pub fn riemann(&self) -> &Tensor4 {
        &self.riemann
    }

    pub fn ricci(&self) -> &DMatrix<f64> {
        &self.ricci
    }

    pub fn scalar(&self) -> f64 {
        self.scalar
    }

    pub fn schouten(&self) -> Result<&DMatrix<f64>> {
        self.schouten.as_ref().ok_or(Error::DimensionTooSmall {
            required: 3,
            actual: self.dim(),
        })
    }

    pub fn weyl(&self) -> Result<&Tensor4> {
        self.weyl.as_ref().ok_or(Error::DimensionTooSmall {
            required: 3,
            actual: self.dim(),
        })
    }

    /// Sectional curvatures `K_ij` keyed by 0-based `(i, j)`, `i < j`.
    pub fn sectional(&self) -> &BTreeMap<(usize, usize), f64> {
        &self.sectional
    }

    pub fn sectional_at(&self, i: usize, j: usize) -> f64 {
        self.riemann[(i, j, i, j)]
    }

    /// Largest Riemann component; scale for the curvature verdicts.
    pub fn max_abs(&self) -> f64 {
        self.riemann.max_abs()
    }

    /// `R(e_i, e_j) e_k` as a vector.
    pub fn apply(&self, i: usize, j: usize, k: usize) -> DVector<f64> {
        DVector::from_fn(self.dim(), |l, _| self.riemann[(i, j, k, l)])
    }

    /// `R(e_i, e_j)` as a matrix acting on column vectors.
    pub fn endomorphism(&self, i: usize, j: usize) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |l, k| self.riemann[(i, j, k, l)])
    }

    /// Largest deviation from the pair symmetries and the first Bianchi identity.
    pub fn symmetry_residual(&self) -> f64 {
        let r = &self.riemann;
        let n = self.dim();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let x = r[(i, j, k, l)];
                        m = m
                            .max((x + r[(j, i, k, l)]).abs())
                            .max((x + r[(i, j, l, k)]).abs())
                            .max((x - r[(k, l, i, j)]).abs())
                            .max((x + r[(j, k, i, l)] + r[(k, i, j, l)]).abs());
                    }
                }
            }
        }
        m
    }

    /// `max |Σ_i W[i][j][i][l]|`; zero when the Weyl tensor is absent.
    pub fn weyl_trace_residual(&self) -> f64 {
        let Some(w) = &self.weyl else { return 0.0 };
        let n = self.dim();
        let mut m = 0.0f64;
        for j in 0..n {
            for l in 0..n {
                let t: f64 = (0..n).map(|i| w[(i, j, i, l)]).sum();
                m = m.max(t.abs());
            }
        }
        m
    }

    /// `max |R - W - A ⊙ g|`; zero when the decomposition is absent.
    pub fn decomposition_residual(&self) -> f64 {
        match (&self.schouten, &self.weyl) {
            (Some(a), Some(w)) => {
                let kn = kulkarni_nomizu_with_identity(a);
                let n = self.dim();
                let sum = Tensor4::from_fn(n, |i, j, k, l| w[(i, j, k, l)] + kn[(i, j, k, l)]);
                self.riemann.max_diff(&sum)
            }
            _ => 0.0,
        }
    }
}

/// `(A ⊙ g)(x,y,u,v) = A(x,u)g(y,v) + A(y,v)g(x,u) - A(x,v)g(y,u) - A(y,u)g(x,v)`
/// with `g` the identity.
pub fn kulkarni_nomizu_with_identity(a: &DMatrix<f64>) -> Tensor4 {
    let d = |p: usize, q: usize| if p == q { 1.0 } else { 0.0 };
    Tensor4::from_fn(a.nrows(), |x, y, u, v| {
        a[(x, u)] * d(y, v) + a[(y, v)] * d(x, u) - a[(x, v)] * d(y, u) - a[(y, u)] * d(x, v)
    })
}

pub fn curvature_tensor(alg: &MetricLieAlgebra, conn: &ConnectionTable) -> CurvatureData {
    let n = alg.dim();
    let c = alg.structure_constants();
    let g = conn.tensor();
    let riemann = Tensor4::from_fn(n, |i, j, k, l| {
        let mut s = 0.0;
        for p in 0..n {
            s += c[(i, j, p)] * g[(p, k, l)] - g[(j, k, p)] * g[(i, p, l)] + g[(i, k, p)] * g[(j, p, l)];
        }
        s
    });
    let ricci = DMatrix::from_fn(n, n, |x, y| (0..n).map(|u| riemann[(x, u, y, u)]).sum());
    let scalar = ricci.trace();
    let (schouten, weyl) = if n >= 3 {
        let nf = n as f64;
        let a = if n == 3 {
            // the general formula divides by n - 2 = 1
            &ricci - DMatrix::identity(n, n) * (scalar / 4.0)
        } else {
            (&ricci - DMatrix::identity(n, n) * (scalar / (2.0 * (nf - 1.0)))) / (nf - 2.0)
        };
        let weyl = if n == 3 {
            Tensor4::zeros(n)
        } else {
            let kn = kulkarni_nomizu_with_identity(&a);
            Tensor4::from_fn(n, |i, j, k, l| riemann[(i, j, k, l)] - kn[(i, j, k, l)])
        };
        (Some(a), Some(weyl))
    } else {
        (None, None)
    };
    let mut sectional = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            sectional.insert((i, j), riemann[(i, j, i, j)]);
        }
    }
    CurvatureData {
        riemann,
        ricci,
        scalar,
        schouten,
        weyl,
        sectional,
    }
}

/// `(∇_{e_m} T)(e_i, e_j, e_k, e_l)` for a left-invariant (0,4)-tensor,
/// returned as one tensor per direction `m`.
pub fn covariant_derivative(conn: &ConnectionTable, t: &Tensor4) -> Vec<Tensor4> {
    let n = conn.dim();
    let g = conn.tensor();
    (0..n)
        .map(|m| {
            Tensor4::from_fn(n, |i, j, k, l| {
                let mut s = 0.0;
                for p in 0..n {
                    s += g[(m, i, p)] * t[(p, j, k, l)]
                        + g[(m, j, p)] * t[(i, p, k, l)]
                        + g[(m, k, p)] * t[(i, j, p, l)]
                        + g[(m, l, p)] * t[(i, j, k, p)];
                }
                -s
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryReport {
    pub is_locally_symmetric: bool,
    pub max_residual: f64,
    /// 0-based `(m, i, j, k, l)` attaining `max_residual`.
    pub witness: [usize; 5],
}

pub fn check_locally_symmetric(
    alg: &MetricLieAlgebra,
    conn: &ConnectionTable,
    curv: &CurvatureData,
) -> SymmetryReport {
    let n = alg.dim();
    assert_eq!(conn.dim(), n);
    assert_eq!(curv.dim(), n);
    let nabla_r = covariant_derivative(conn, curv.riemann());
    let mut max_residual = 0.0;
    let mut witness = [0; 5];
    for (m, t) in nabla_r.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = t[(i, j, k, l)].abs();
                        if v > max_residual {
                            max_residual = v;
                            witness = [m, i, j, k, l];
                        }
                    }
                }
            }
        }
    }
    SymmetryReport {
        is_locally_symmetric: max_residual < eps_sym(curv.max_abs()),
        max_residual,
        witness,
    }
}

pub fn is_conformally_flat(curv: &CurvatureData) -> Result<bool> {
    let w = curv.weyl()?;
    Ok(w.max_abs() < eps_sym(curv.max_abs()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeylDivergence {
    /// `(div W)(e_x, e_y, e_z)`.
    pub div: Tensor3,
    pub max_abs: f64,
    pub is_c_space: bool,
}

pub fn divergence_weyl(
    alg: &MetricLieAlgebra,
    conn: &ConnectionTable,
    curv: &CurvatureData,
) -> Result<WeylDivergence> {
    let n = alg.dim();
    if n < 4 {
        return Err(Error::DimensionTooSmall {
            required: 4,
            actual: n,
        });
    }
    let nabla_w = covariant_derivative(conn, curv.weyl()?);
    let div = Tensor3::from_fn(n, |x, y, z| (0..n).map(|i| nabla_w[i][(i, x, y, z)]).sum());
    let max_abs = div.max_abs();
    Ok(WeylDivergence {
        is_c_space: max_abs < eps_sym(curv.max_abs()),
        div,
        max_abs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilnorKind {
    /// `[e1,e2] = a e3, [e2,e3] = c e1, [e3,e1] = b e2`.
    Unimodular,
    /// `[e1,e2] = a e2 + b e3, [e1,e3] = c e2 + d e3`.
    Nonunimodular,
}

/// Left-hand sides of the polynomial systems whose common zeros are the
/// locally symmetric 3D Milnor algebras. Unimodular takes `(a, b, c)`,
/// nonunimodular `(a, b, c, d)` with `a + d != 0` and `ac + bd = 0`.
pub fn milnor_system_residual(kind: MilnorKind, params: &[f64]) -> Result<Vec<f64>> {
    match kind {
        MilnorKind::Unimodular => {
            let &[a, b, c] = params else {
                return Err(Error::ConstraintViolation(format!(
                    "unimodular system takes 3 parameters, got {}",
                    params.len()
                )));
            };
            Ok(vec![
                (a - b) * (a + b - c).powi(2),
                (c - a) * (a - b + c).powi(2),
                (c - b) * (a - b - c).powi(2),
            ])
        }
        MilnorKind::Nonunimodular => {
            let &[a, b, c, d] = params else {
                return Err(Error::ConstraintViolation(format!(
                    "nonunimodular system takes 4 parameters, got {}",
                    params.len()
                )));
            };
            let scale = params.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if (a + d).abs() <= eps_alg(scale) {
                return Err(Error::ConstraintViolation("a + d != 0".into()));
            }
            if (a * c + b * d).abs() > eps_alg(scale * scale) {
                return Err(Error::ConstraintViolation(format!(
                    "ac + bd = 0 (got {})",
                    a * c + b * d
                )));
            }
            let p = a * a + b * b - a * d + b * c;
            let q = c * c + d * d - a * d + b * c;
            Ok(vec![
                (b - c) * (a * a + b * b - c * c - d * d),
                (b + c) * p,
                d * p * p,
                a * q,
                (b + c) * q,
                a * c + b * d,
            ])
        }
    }
}

/// Structure constants of the Milnor frames used by [`milnor_system_residual`].
pub fn milnor_algebra(kind: MilnorKind, params: &[f64]) -> Result<MetricLieAlgebra> {
    use crate::algebra::Bracket as B;
    match (kind, params) {
        (MilnorKind::Unimodular, &[a, b, c]) => {
            MetricLieAlgebra::new(3, &[B::new(1, 2, 3, a), B::new(2, 3, 1, c), B::new(3, 1, 2, b)])
        }
        (MilnorKind::Nonunimodular, &[a, b, c, d]) => {
            milnor_system_residual(kind, params)?;
            MetricLieAlgebra::new(
                3,
                &[
                    B::new(1, 2, 2, a),
                    B::new(1, 2, 3, b),
                    B::new(1, 3, 2, c),
                    B::new(1, 3, 3, d),
                ],
            )
        }
        _ => Err(Error::ConstraintViolation(format!(
            "wrong parameter count {} for {kind:?}",
            params.len()
        ))),
    }
}
