//! V- and Z-decompositions of a metric Lie algebra driven by the irreducible
//! eigen-bivectors of the curvature operator.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{DMatrix, DVector};

use crate::algebra::MetricLieAlgebra;
use crate::bivector::{jordan_darboux, Bivector, SkewEndomorphism};
use crate::curvature::{ConnectionTable, CurvatureData};
use crate::error::{Error, Result};
use crate::irreducible::{is_irreducible, Irreducibility};
use crate::spectrum::SpectralDecomposition;
use crate::subspace::Subspace;
use crate::tol::{eps_spec, EPS_NUM};

/// Recursion guard for splitting reducible eigenvectors.
const MAX_SPLIT_DEPTH: usize = 16;

/// Irreducible eigen-bivector with its kernel `h0` and image `h1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPair {
    pub lambda: f64,
    pub h: Bivector,
    pub h0: Subspace,
    pub h1: Subspace,
}

impl HPair {
    pub fn new(lambda: f64, h: Bivector) -> Self {
        let jordan = jordan_darboux(&h);
        let h1 = jordan.image().canonical();
        let h0 = jordan.kernel.canonical();
        Self { lambda, h, h0, h1 }
    }
}

/// Irreducible eigenvectors for the nonzero eigenvalues; reducible ones are
/// replaced by their eigenvector parts.
pub fn irreducible_eigen_system(spec: &SpectralDecomposition) -> Result<Vec<HPair>> {
    let tol = eps_spec(spec.norm());
    let mut out = Vec::new();
    for (lambda, h) in spec.eigen_bivectors() {
        if lambda.abs() <= tol {
            continue;
        }
        push_irreducible(&spec.operator, lambda, h, 0, &mut out)?;
    }
    Ok(out)
}

fn push_irreducible(
    op: &DMatrix<f64>,
    lambda: f64,
    h: Bivector,
    depth: usize,
    out: &mut Vec<HPair>,
) -> Result<()> {
    match is_irreducible(&h, op, lambda)? {
        Irreducibility::Irreducible => out.push(HPair::new(lambda, h)),
        Irreducibility::Reducible(parts) if depth < MAX_SPLIT_DEPTH => {
            for p in parts {
                push_irreducible(op, lambda, p.normalized(), depth + 1, out)?;
            }
        }
        _ => return Err(Error::AmbiguousIrreducibility { eigenvalue: lambda }),
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    V,
    Z,
}

impl fmt::Display for DecompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecompositionKind::V => "V",
            DecompositionKind::Z => "Z",
        })
    }
}

/// Where `[P_i, P_j]` lands, as indices of the parts it meets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketRelation {
    Zero,
    Equals(Vec<usize>),
    SubsetOf(Vec<usize>),
}

impl fmt::Display for BracketRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join("+");
        match self {
            BracketRelation::Zero => f.write_str("zero"),
            BracketRelation::Equals(v) => write!(f, "equals_{}", join(v)),
            BracketRelation::SubsetOf(v) => write!(f, "subset_of_{}", join(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceDecomposition {
    pub kind: DecompositionKind,
    /// `parts[0]` is the flat part (possibly zero); empty when `exists` is false.
    pub parts: Vec<Subspace>,
    pub exists: bool,
    pub reason: Option<String>,
    /// Keyed by `(i, j)`, `i <= j`, over nonzero parts.
    pub bracket_table: BTreeMap<(usize, usize), BracketRelation>,
}

impl SubspaceDecomposition {
    fn absent(kind: DecompositionKind, reason: impl Into<String>) -> Self {
        Self {
            kind,
            parts: Vec::new(),
            exists: false,
            reason: Some(reason.into()),
            bracket_table: BTreeMap::new(),
        }
    }

    fn present(kind: DecompositionKind, alg: &MetricLieAlgebra, parts: Vec<Subspace>) -> Self {
        let bracket_table = bracket_table(alg, &parts);
        Self {
            kind,
            parts,
            exists: true,
            reason: None,
            bracket_table,
        }
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.parts.first().map(Subspace::ambient_dim)
    }
}

/// Parts are the connected components of the pairs under "images not
/// orthogonal"; `V_0` is the complement of their sum.
pub fn v_decomposition(alg: &MetricLieAlgebra, pairs: &[HPair]) -> SubspaceDecomposition {
    let n = alg.dim();
    if pairs.is_empty() {
        return SubspaceDecomposition::absent(DecompositionKind::V, "curvature operator vanishes");
    }
    let m = pairs.len();
    let mut comp: Vec<usize> = (0..m).collect();
    fn find(comp: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while comp[r] != r {
            r = comp[r];
        }
        comp[x] = r;
        r
    }
    for k in 0..m {
        for i in (k + 1)..m {
            let linked =
                !pairs[k].h1.is_subspace_of(&pairs[i].h0) || !pairs[i].h1.is_subspace_of(&pairs[k].h0);
            if linked {
                let (a, b) = (find(&mut comp, k), find(&mut comp, i));
                comp[a.max(b)] = a.min(b);
            }
        }
    }
    // components ordered by their lowest pair index
    let mut order: Vec<usize> = Vec::new();
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..m {
        let root = find(&mut comp, k);
        if !members.contains_key(&root) {
            order.push(root);
        }
        members.entry(root).or_default().push(k);
    }
    let mut parts = vec![Subspace::zero(n)];
    for root in order {
        let vi = Subspace::sum_all(n, members[&root].iter().map(|&k| &pairs[k].h1));
        parts.push(vi.canonical());
    }
    parts[0] = Subspace::sum_all(n, parts[1..].iter())
        .orthogonal_complement()
        .canonical();
    if parts.len() == 2 && parts[0].is_zero() {
        return SubspaceDecomposition::absent(
            DecompositionKind::V,
            "a single irreducible part exhausts the algebra",
        );
    }
    SubspaceDecomposition::present(DecompositionKind::V, alg, parts)
}

/// `S ↦ S + span{∇_v x : v ∈ V_i, x ∈ S}` from `S = V_i` until stable.
pub fn z_closure(conn: &ConnectionTable, vi: &Subspace) -> Subspace {
    let n = conn.dim();
    let mut s = vi.clone();
    for _ in 0..=n {
        let mut vecs: Vec<DVector<f64>> = s.basis().to_vec();
        for v in vi.basis() {
            for x in s.basis() {
                vecs.push(conn.nabla(v, x));
            }
        }
        let next = Subspace::span(n, &vecs);
        if next.dim() == s.dim() {
            return s;
        }
        s = next;
    }
    unreachable!("closure grows at most n times")
}

pub fn z_decomposition(
    alg: &MetricLieAlgebra,
    conn: &ConnectionTable,
    vdec: &SubspaceDecomposition,
) -> Result<SubspaceDecomposition> {
    if !vdec.exists {
        return Err(Error::NoVDecomposition);
    }
    let n = alg.dim();
    let zs: Vec<Subspace> = vdec.parts[1..]
        .iter()
        .map(|vi| z_closure(conn, vi).canonical())
        .collect();
    for a in 0..zs.len() {
        for b in (a + 1)..zs.len() {
            let overlap = zs[a].max_overlap(&zs[b]);
            if overlap >= EPS_NUM {
                return Err(Error::NonOrthogonalZ {
                    first: a + 1,
                    second: b + 1,
                    overlap,
                });
            }
        }
    }
    if let Some(i) = zs.iter().position(Subspace::is_full) {
        return Ok(SubspaceDecomposition::absent(
            DecompositionKind::Z,
            format!("Z_{} is the whole algebra", i + 1),
        ));
    }
    let z0 = Subspace::sum_all(n, zs.iter())
        .orthogonal_complement()
        .canonical();
    let mut parts = vec![z0];
    parts.extend(zs);
    Ok(SubspaceDecomposition::present(DecompositionKind::Z, alg, parts))
}

/// Span of `[x, y]` over basis vectors of `a` and `b`.
pub fn bracket_span(alg: &MetricLieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            vecs.push(alg.bracket(x, y));
        }
    }
    Subspace::span(alg.dim(), &vecs)
}

/// Largest out-of-`s` component of `[x, y]` for `x, y` in `s`.
pub fn subalgebra_residual(alg: &MetricLieAlgebra, s: &Subspace) -> f64 {
    let mut m = 0.0f64;
    for x in s.basis() {
        for y in s.basis() {
            m = m.max(s.residual(&alg.bracket(x, y)));
        }
    }
    m
}

fn bracket_table(alg: &MetricLieAlgebra, parts: &[Subspace]) -> BTreeMap<(usize, usize), BracketRelation> {
    let mut table = BTreeMap::new();
    for i in 0..parts.len() {
        for j in i..parts.len() {
            if parts[i].is_zero() || parts[j].is_zero() {
                continue;
            }
            let br = bracket_span(alg, &parts[i], &parts[j]);
            let rel = if br.is_zero() {
                BracketRelation::Zero
            } else {
                let support: Vec<usize> = (0..parts.len())
                    .filter(|&k| br.basis().iter().any(|v| parts[k].project(v).norm() >= EPS_NUM))
                    .collect();
                let target = Subspace::sum_all(alg.dim(), support.iter().map(|&k| &parts[k]));
                if target.dim() == br.dim() {
                    BracketRelation::Equals(support)
                } else {
                    BracketRelation::SubsetOf(support)
                }
            };
            table.insert((i, j), rel);
        }
    }
    table
}

#[derive(Debug, Clone, PartialEq)]
pub struct VRelation {
    pub name: String,
    pub residual: f64,
}

/// Residuals of the containments satisfied by a V-decomposition:
/// `∇_{V0}V0 ⊂ V0`, `∇_{V0}Vi ⊂ Vi`, `∇_{Vi}Vi ⊂ V0+Vi`,
/// `∇_{Vi}V0 ⊂ V0+Vi`, `∇_{Vi}Vj ⊂ Vj` (`i != j`), and closure of
/// `V0+Vi` under the bracket.
pub fn verify_v_relations(
    alg: &MetricLieAlgebra,
    conn: &ConnectionTable,
    vdec: &SubspaceDecomposition,
) -> Result<Vec<VRelation>> {
    if !vdec.exists {
        return Err(Error::NoVDecomposition);
    }
    let p = &vdec.parts;
    let v0 = &p[0];
    let nabla_excess = |a: &Subspace, b: &Subspace, target: &Subspace| -> f64 {
        let mut m = 0.0f64;
        for x in a.basis() {
            for y in b.basis() {
                m = m.max(target.residual(&conn.nabla(x, y)));
            }
        }
        m
    };
    let mut r = [0.0f64; 6];
    r[0] = nabla_excess(v0, v0, v0);
    for i in 1..p.len() {
        let v0i = v0.sum(&p[i]);
        r[1] = r[1].max(nabla_excess(v0, &p[i], &p[i]));
        r[2] = r[2].max(nabla_excess(&p[i], &p[i], &v0i));
        r[3] = r[3].max(nabla_excess(&p[i], v0, &v0i));
        for j in 1..p.len() {
            if j != i {
                r[4] = r[4].max(nabla_excess(&p[i], &p[j], &p[j]));
            }
        }
        r[5] = r[5].max(subalgebra_residual(alg, &v0i));
    }
    let names = [
        "nabla_V0 V0 in V0",
        "nabla_V0 Vi in Vi",
        "nabla_Vi Vi in V0+Vi",
        "nabla_Vi V0 in V0+Vi",
        "nabla_Vi Vj in Vj",
        "[V0+Vi, V0+Vi] in V0+Vi",
    ];
    Ok(names
        .iter()
        .zip(r)
        .map(|(name, residual)| VRelation {
            name: (*name).to_string(),
            residual,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureSpan {
    /// Orthonormal (as bivectors) basis of `span{R(e_i, e_j)}`.
    pub basis: Vec<SkewEndomorphism>,
    /// Dimension of the smallest commutator-closed space containing it.
    pub bracket_closure_dim: usize,
}

pub fn curvature_span(curv: &CurvatureData) -> CurvatureSpan {
    let n = curv.dim();
    let mut vecs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let m = SkewEndomorphism::from_matrix(&curv.endomorphism(i, j));
            vecs.push(m.to_bivector().coeffs().clone());
        }
    }
    let big = vecs.first().map_or(0, |v| v.len());
    let span = Subspace::span(big, &vecs);
    let to_skew = |v: &DVector<f64>| Bivector::new(n, v.clone()).to_skew();
    let basis: Vec<SkewEndomorphism> = span.basis().iter().map(to_skew).collect();

    let mut closure = span;
    loop {
        let mats: Vec<DMatrix<f64>> = closure
            .basis()
            .iter()
            .map(|v| to_skew(v).matrix().clone())
            .collect();
        let mut vecs = closure.basis().to_vec();
        for a in 0..mats.len() {
            for b in (a + 1)..mats.len() {
                let c = &mats[a] * &mats[b] - &mats[b] * &mats[a];
                vecs.push(SkewEndomorphism::from_matrix(&c).to_bivector().coeffs().clone());
            }
        }
        let next = Subspace::span(big, &vecs);
        if next.dim() == closure.dim() {
            break;
        }
        closure = next;
    }
    CurvatureSpan {
        basis,
        bracket_closure_dim: closure.dim(),
    }
}
