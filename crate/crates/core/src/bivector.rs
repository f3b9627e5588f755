//! Bivectors over the lexicographic basis `(e_i ∧ e_j)_{i<j}`, their skew
//! endomorphisms and Jordan/Darboux normal forms.

use nalgebra::{DMatrix, DVector};

use crate::eigen::symmetric_eigen;
use crate::subspace::{normalize_sign, Subspace};
use crate::tol::EPS_NUM;

/// `n (n - 1) / 2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Inverse of [`pair_count`], if `count` is triangular.
pub fn ambient_dim_for(count: usize) -> Option<usize> {
    let mut n = 0;
    while pair_count(n) < count {
        n += 1;
    }
    (pair_count(n) == count).then_some(n.max(1))
}

/// 0-based index pairs `(i, j)`, `i < j`, in basis order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

/// Position of `e_i ∧ e_j` (0-based, `i < j`) in the basis.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Basis labels `"e1^e2"`, ... (1-based).
pub fn basis_labels(n: usize) -> Vec<String> {
    pairs(n)
        .into_iter()
        .map(|(i, j)| format!("e{}^e{}", i + 1, j + 1))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Bivector {
    n: usize,
    coeffs: DVector<f64>,
}

impl Bivector {
    pub fn new(n: usize, coeffs: DVector<f64>) -> Self {
        assert_eq!(coeffs.len(), pair_count(n), "coefficient count for dimension {n}");
        Self { n, coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(n, DVector::zeros(pair_count(n)))
    }

    /// `e_i ∧ e_j` for 0-based `i != j`.
    pub fn basis(n: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i < n && j < n);
        let mut b = Self::zero(n);
        if i < j {
            b.coeffs[pair_index(n, i, j)] = 1.0;
        } else {
            b.coeffs[pair_index(n, j, i)] = -1.0;
        }
        b
    }

    /// `(v ∧ w)_{ij} = v_i w_j - v_j w_i`.
    pub fn wedge(v: &DVector<f64>, w: &DVector<f64>) -> Self {
        let n = v.len();
        assert_eq!(w.len(), n);
        let coeffs = DVector::from_iterator(
            pair_count(n),
            pairs(n).into_iter().map(|(i, j)| v[i] * w[j] - v[j] * w[i]),
        );
        Self { n, coeffs }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &DVector<f64> {
        &self.coeffs
    }

    pub fn inner(&self, other: &Bivector) -> f64 {
        self.coeffs.dot(&other.coeffs)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.norm()
    }

    pub fn scaled(&self, s: f64) -> Bivector {
        Self::new(self.n, &self.coeffs * s)
    }

    pub fn normalized(&self) -> Bivector {
        self.scaled(1.0 / self.norm())
    }

    pub fn add(&self, other: &Bivector) -> Bivector {
        Self::new(self.n, &self.coeffs + &other.coeffs)
    }

    pub fn sub(&self, other: &Bivector) -> Bivector {
        Self::new(self.n, &self.coeffs - &other.coeffs)
    }

    /// `e_i ∧ e_j` acts as `e_i ↦ e_j`, `e_j ↦ -e_i`.
    pub fn to_skew(&self) -> SkewEndomorphism {
        let n = self.n;
        let mut m = DMatrix::zeros(n, n);
        for (p, (i, j)) in pairs(n).into_iter().enumerate() {
            let h = self.coeffs[p];
            m[(j, i)] += h;
            m[(i, j)] -= h;
        }
        SkewEndomorphism { matrix: m }
    }

    pub fn from_skew(s: &SkewEndomorphism) -> Bivector {
        let n = s.dim();
        let coeffs =
            DVector::from_iterator(pair_count(n), pairs(n).into_iter().map(|(i, j)| s.matrix[(j, i)]));
        Self { n, coeffs }
    }
}

/// Skew-symmetric matrix `h̃` of a bivector.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewEndomorphism {
    matrix: DMatrix<f64>,
}

impl SkewEndomorphism {
    /// Skew part `(m - mᵀ) / 2` of a square matrix.
    pub fn from_matrix(m: &DMatrix<f64>) -> Self {
        assert!(m.is_square());
        Self {
            matrix: (m - m.transpose()) * 0.5,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn apply(&self, v: &DVector<f64>) -> DVector<f64> {
        &self.matrix * v
    }

    pub fn to_bivector(&self) -> Bivector {
        Bivector::from_skew(self)
    }
}

/// One Darboux summand `nu * (v ∧ w)` with `w = h̃ v / nu`.
#[derive(Debug, Clone, PartialEq)]
pub struct JordanPlane {
    pub frequency: f64,
    pub v: DVector<f64>,
    pub w: DVector<f64>,
}

impl JordanPlane {
    pub fn subspace(&self) -> Subspace {
        Subspace::span(self.v.len(), &[self.v.clone(), self.w.clone()])
    }

    /// Unit simple bivector `v ∧ w`.
    pub fn unit_bivector(&self) -> Bivector {
        Bivector::wedge(&self.v, &self.w)
    }

    pub fn summand(&self) -> Bivector {
        self.unit_bivector().scaled(self.frequency)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JordanData {
    pub kernel: Subspace,
    /// Ordered by decreasing frequency.
    pub planes: Vec<JordanPlane>,
}

impl JordanData {
    pub fn rank(&self) -> usize {
        self.planes.len()
    }

    /// Unit summands `v_k ∧ w_k`.
    pub fn darboux(&self) -> Vec<Bivector> {
        self.planes.iter().map(JordanPlane::unit_bivector).collect()
    }

    pub fn frequencies(&self) -> Vec<f64> {
        self.planes.iter().map(|p| p.frequency).collect()
    }

    /// Sum of the planes.
    pub fn image(&self) -> Subspace {
        let n = self.kernel.ambient_dim();
        let vecs: Vec<_> = self
            .planes
            .iter()
            .flat_map(|p| [p.v.clone(), p.w.clone()])
            .collect();
        Subspace::span(n, &vecs)
    }

    /// `Σ nu_k v_k ∧ w_k`.
    pub fn reconstruct(&self) -> Bivector {
        let n = self.kernel.ambient_dim();
        self.planes
            .iter()
            .fold(Bivector::zero(n), |acc, p| acc.add(&p.summand()))
    }
}

/// Jordan planes from the eigenspaces of `S = -h̃²`; each plane is
/// `(v, h̃ v / nu)` for a unit eigenvector `v` with `nu² > 0`.
pub fn jordan_darboux(h: &Bivector) -> JordanData {
    let n = h.ambient_dim();
    let skew = h.to_skew();
    let a = skew.matrix();
    let s = -(a * a);
    let eig = symmetric_eigen(&s);
    let smax = s.amax();
    let threshold = EPS_NUM * (1.0 + smax);
    let active = eig.values.iter().filter(|&&x| x > threshold).count();

    let mut planes: Vec<JordanPlane> = Vec::new();
    for idx in 0..active {
        if 2 * planes.len() >= active {
            break;
        }
        let mut v = eig.vector(idx);
        for p in &planes {
            v -= &p.v * p.v.dot(&v);
            v -= &p.w * p.w.dot(&v);
        }
        let norm = v.norm();
        // a vector of an earlier plane, up to rounding
        if norm < 0.5 {
            continue;
        }
        v /= norm;
        normalize_sign(&mut v);
        let hv = a * &v;
        let nu = hv.norm();
        if nu * nu <= threshold {
            continue;
        }
        planes.push(JordanPlane {
            frequency: nu,
            w: hv / nu,
            v,
        });
    }
    planes.sort_by(|x, y| y.frequency.total_cmp(&x.frequency));
    let image = Subspace::span(
        n,
        &planes
            .iter()
            .flat_map(|p| [p.v.clone(), p.w.clone()])
            .collect::<Vec<_>>(),
    );
    JordanData {
        kernel: image.orthogonal_complement(),
        planes,
    }
}
