//! Error type shared by all modules.

use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A 0-homogeneous symbol has no value at the origin.
    #[error("symbol is undefined at the origin")]
    OriginEvaluation,

    /// A direction that must lie on the unit sphere does not.
    #[error("expected a unit vector, got |p| = {norm}")]
    NotUnit { norm: f64 },

    /// Argument outside the documented domain of an operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Symbol id string that the catalog cannot resolve.
    #[error("unknown symbol id `{0}`")]
    UnknownSymbol(String),

    /// Quadrature or refinement ran out of budget before meeting the
    /// tolerance. Carries the best estimate and the remaining gap.
    #[error("quadrature budget exhausted: estimate {estimate}, gap {gap:.3e} > tol {tol:.3e} ({nodes} nodes)")]
    QuadratureBudget {
        estimate: Complex64,
        gap: f64,
        tol: f64,
        nodes: u64,
    },

    /// Newton failed to converge within the iteration limit.
    #[error("Newton did not converge: residual {residual:.3e} after {iterations} iterations")]
    NonConvergence {
        residual: f64,
        iterations: usize,
        last: Vec<f64>,
    },

    /// Backtracking damping underflowed; the step direction is unusable.
    #[error("Newton damping underflow at residual {residual:.3e}")]
    DampingUnderflow { residual: f64, last: Vec<f64> },

    /// A matrix that must be invertible is numerically singular.
    #[error("matrix is numerically singular (condition estimate {cond:.3e})")]
    SingularMatrix { cond: f64 },

    /// A Hessian eigenvalue sits below the degeneracy threshold.
    #[error("degenerate Hessian: |eigenvalue| {eigenvalue:.3e} below threshold {threshold:.3e}")]
    DegenerateHessian { eigenvalue: f64, threshold: f64 },

    /// The witness search could not find a point with nonzero chart gradient.
    #[error("witness search failed after {tries} seeds: chart gradient vanishes near the pole")]
    WitnessSearch { tries: usize },

    /// Domain certification could not produce a usable box.
    #[error("domain certification failed: {0}")]
    DomainCertification(String),

    /// The low-discrepancy sample of the inner domain came back empty.
    #[error("no samples landed in the inner domain U1")]
    EmptySample,

    /// Log-log fitting requires strictly positive values.
    #[error("nonpositive values in fit input at t = {offenders:?}")]
    NonPositiveFit { offenders: Vec<f64> },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
