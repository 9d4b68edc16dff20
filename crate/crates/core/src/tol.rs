//! Numerical tolerances shared by every module.

/// Two spectral quantities computed by different routes agree to this.
pub const EIG_EQ: f64 = 1e-9;
/// Absolute accuracy of the polynomial root solvers.
pub const ROOT: f64 = crate::poly::ROOT_TOL;
/// Per-vertex block row sums of an equitable partition agree to this.
pub const EQUITABLE: f64 = 1e-12;
/// `ρ_α(K_n) = n - 1` is checked to this.
pub const COMPLETE_RADIUS: f64 = 1e-10;
/// Coefficient identities between assembled polynomials.
pub const COEFF: f64 = 1e-12;
/// Slack used by interlacing and bound comparisons on eigenvalues.
pub const INTERLACE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    pub eig: f64,
    pub root: f64,
    pub equitable: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { eig: EIG_EQ, root: ROOT, equitable: EQUITABLE }
    }
}
