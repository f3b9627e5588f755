//! Metric Lie algebras given by structure constants in an orthonormal basis.

use std::collections::BTreeMap;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subspace::Subspace;
use crate::tensor::Tensor3;
use crate::tol::{eps_alg, EPS_NUM};

/// One sparse structure constant: `C_{i,j}^k = v`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: f64,
}

impl Bracket {
    pub fn new(i: usize, j: usize, k: usize, v: f64) -> Self {
        Self { i, j, k, v }
    }
}

/// On-disk algebra format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default)]
    pub brackets: Vec<Bracket>,
}

/// A Lie algebra with the inner product that makes the stored basis
/// orthonormal. `c[(i, j, k)]` is the coefficient of `e_k` in `[e_i, e_j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricLieAlgebra {
    c: Tensor3,
    label: Option<String>,
}

impl MetricLieAlgebra {
    /// Builds the algebra from sparse 1-based entries, completing
    /// antisymmetry and validating the Jacobi identity.
    pub fn new(dim: usize, brackets: &[Bracket]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyAlgebra);
        }
        // canonical key (min, max, k) with the sign folded into the value
        let mut entries: BTreeMap<(usize, usize, usize), f64> = BTreeMap::new();
        for b in brackets {
            let (i, j, k) = (b.i, b.j, b.k);
            if i == 0 || j == 0 || k == 0 || i > dim || j > dim || k > dim {
                return Err(Error::IndexOutOfRange { i, j, k, dim });
            }
            if i == j {
                if b.v == 0.0 {
                    continue;
                }
                return Err(Error::DiagonalBracket { i, k });
            }
            let (key, val) = if i < j {
                ((i, j, k), b.v)
            } else {
                ((j, i, k), -b.v)
            };
            if let Some(&prev) = entries.get(&key) {
                let tol = eps_alg(prev.abs().max(val.abs()));
                if (prev - val).abs() > tol {
                    let (first, second) = if i < j { (prev, val) } else { (-prev, -val) };
                    return Err(Error::ConflictingEntry {
                        i,
                        j,
                        k,
                        first,
                        second,
                    });
                }
            } else {
                entries.insert(key, val);
            }
        }
        let mut c = Tensor3::zeros(dim);
        for (&(i, j, k), &v) in &entries {
            c[(i - 1, j - 1, k - 1)] = v;
            c[(j - 1, i - 1, k - 1)] = -v;
        }
        Self::from_tensor(c)
    }

    pub fn abelian(dim: usize) -> Result<Self> {
        Self::new(dim, &[])
    }

    /// Wraps a dense tensor after checking antisymmetry and Jacobi.
    pub fn from_tensor(c: Tensor3) -> Result<Self> {
        let n = c.dim();
        if n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let alg = Self { c, label: None };
        let tol = eps_alg(alg.max_constant());
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s = alg.c[(i, j, k)] + alg.c[(j, i, k)];
                    if s.abs() > tol {
                        return Err(Error::ConflictingEntry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            first: alg.c[(i, j, k)],
                            second: -alg.c[(j, i, k)],
                        });
                    }
                }
            }
        }
        let (residual, [i, j, k, l]) = alg.jacobi_residual();
        if residual > tol {
            return Err(Error::JacobiViolation {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                l: l + 1,
                residual,
            });
        }
        Ok(alg)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn structure_constants(&self) -> &Tensor3 {
        &self.c
    }

    /// 0-based accessor for `C_{ij}^k`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i, j, k)]
    }

    pub fn max_constant(&self) -> f64 {
        self.c.max_abs()
    }

    pub fn bracket(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let n = self.dim();
        let mut out = DVector::zeros(n);
        for i in 0..n {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = x[i] * y[j];
                if w == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += w * self.c[(i, j, k)];
                }
            }
        }
        out
    }

    pub fn antisymmetry_residual(&self) -> f64 {
        let n = self.dim();
        let mut m = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    m = m.max((self.c[(i, j, k)] + self.c[(j, i, k)]).abs());
                }
            }
        }
        m
    }

    /// Largest Jacobi sum `Σ_m c_ij^m c_mk^l + cyclic` and the 0-based
    /// quadruple attaining it.
    pub fn jacobi_residual(&self) -> (f64, [usize; 4]) {
        let n = self.dim();
        let c = &self.c;
        let mut worst = (0.0, [0, 0, 0, 0]);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut s = 0.0;
                        for m in 0..n {
                            s += c[(i, j, m)] * c[(m, k, l)]
                                + c[(j, k, m)] * c[(m, i, l)]
                                + c[(k, i, m)] * c[(m, j, l)];
                        }
                        if s.abs() > worst.0 {
                            worst = (s.abs(), [i, j, k, l]);
                        }
                    }
                }
            }
        }
        worst
    }

    /// `tr(ad_{e_i}) = 0` for every basis vector.
    pub fn is_unimodular(&self) -> bool {
        let n = self.dim();
        let tol = eps_alg(self.max_constant());
        (0..n).all(|i| (0..n).map(|k| self.c[(i, k, k)]).sum::<f64>().abs() <= tol)
    }

    /// Orthogonal direct sum; the basis of `other` follows that of `self`.
    pub fn direct_sum(&self, other: &MetricLieAlgebra) -> MetricLieAlgebra {
        let (p, q) = (self.dim(), other.dim());
        let c = Tensor3::from_fn(p + q, |i, j, k| {
            if i < p && j < p && k < p {
                self.c[(i, j, k)]
            } else if i >= p && j >= p && k >= p {
                other.c[(i - p, j - p, k - p)]
            } else {
                0.0
            }
        });
        let label = match (self.label(), other.label()) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        MetricLieAlgebra { c, label }
    }

    /// Restricted bracket on a subalgebra, in the subspace's orthonormal basis.
    pub fn restrict_to_subspace(&self, s: &Subspace) -> Result<MetricLieAlgebra> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                expected: self.dim(),
                got: s.ambient_dim(),
            });
        }
        let m = s.dim();
        if m == 0 {
            return Err(Error::EmptyAlgebra);
        }
        let basis = s.basis();
        let tol = EPS_NUM * (1.0 + self.max_constant());
        let mut c = Tensor3::zeros(m);
        for a in 0..m {
            for b in 0..m {
                let br = self.bracket(&basis[a], &basis[b]);
                let residual = s.residual(&br);
                if residual > tol {
                    return Err(Error::NotASubalgebra {
                        a: a + 1,
                        b: b + 1,
                        residual,
                    });
                }
                for r in 0..m {
                    c[(a, b, r)] = br.dot(&basis[r]);
                }
            }
        }
        MetricLieAlgebra::from_tensor(c)
    }

    /// Non-zero constants with `i < j`, lexicographic, 1-based.
    pub fn brackets(&self) -> Vec<Bracket> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in 0..n {
                    let v = self.c[(i, j, k)];
                    if v != 0.0 {
                        out.push(Bracket::new(i + 1, j + 1, k + 1, v));
                    }
                }
            }
        }
        out
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            dim: self.dim(),
            label: self.label.clone(),
            brackets: self.brackets(),
        }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let alg = Self::new(file.dim, &file.brackets)?;
        Ok(match &file.label {
            Some(l) => alg.with_label(l.clone()),
            None => alg,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("algebra serializes")
    }
}
