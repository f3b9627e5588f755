//! Numerical tolerances shared across the crate.
//!
//! Scaled tolerances take the magnitude of the object they judge so that
//! verdicts do not change when a fixture is rescaled.

/// Orthonormality and subspace-membership threshold.
pub const EPS_NUM: f64 = 1e-9;

/// Rank threshold for orthonormalization.
pub const RANK_EPS: f64 = 1e-9;

/// Jacobi eigen-solver stops once the off-diagonal Frobenius norm drops
/// below this fraction of the matrix norm.
pub const JACOBI_REL: f64 = 1e-13;

/// Validation tolerance for structure constants with largest magnitude `cmax`.
pub fn eps_alg(cmax: f64) -> f64 {
    1e-9 * (1.0 + cmax)
}

/// Tolerance for the symmetric / conformally flat / C-space verdicts given
/// the largest Riemann component.
pub fn eps_sym(rmax: f64) -> f64 {
    1e-8 * (1.0 + rmax)
}

/// Eigenvalue clustering gap for an operator of max-entry norm `norm`.
pub fn eps_cluster(norm: f64) -> f64 {
    1e-7 * (1.0 + norm)
}

/// Eigenpair residual bound for an operator of max-entry norm `norm`.
pub fn eps_spec(norm: f64) -> f64 {
    1e-9 * (1.0 + norm)
}
