//! Curvature of left-invariant metrics on Lie groups, computed from the
//! structure constants of a metric Lie algebra in an orthonormal basis.
//!
//! The pipeline runs from [`MetricLieAlgebra`] through the Levi-Civita
//! connection and curvature tensors to the curvature operator on bivectors,
//! its spectrum and irreducible eigenvectors, and the V- and
//! Z-decompositions. [`analysis::analyze`] runs every stage at once.

pub mod algebra;
pub mod analysis;
pub mod bivector;
pub mod catalog;
pub mod curvature;
pub mod decomposition;
pub mod eigen;
pub mod error;
pub mod irreducible;
pub mod json;
pub mod spectrum;
pub mod subspace;
pub mod tensor;
pub mod tol;

pub use algebra::{AlgebraFile, Bracket, MetricLieAlgebra};
pub use analysis::{analyze, Analysis, Stage};
pub use bivector::{jordan_darboux, Bivector, JordanData, SkewEndomorphism};
pub use curvature::{
    check_locally_symmetric, curvature_tensor, divergence_weyl, is_conformally_flat, levi_civita,
    milnor_system_residual, ConnectionTable, CurvatureData, MilnorKind, SymmetryReport, WeylDivergence,
};
pub use decomposition::{
    curvature_span, irreducible_eigen_system, v_decomposition, verify_v_relations, z_decomposition, HPair,
    SubspaceDecomposition,
};
pub use error::{Error, Result};
pub use irreducible::{is_irreducible, Irreducibility};
pub use spectrum::{curvature_operator_matrix, spectrum, SpectralDecomposition};
pub use subspace::Subspace;
pub use tensor::{Tensor3, Tensor4};
