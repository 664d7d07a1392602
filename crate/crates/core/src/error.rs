use thiserror::Error;

/// Errors produced by the numerical kernels in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature hit the depth cap before meeting the requested
    /// tolerance. The best available estimate is attached.
    #[error("quadrature did not converge at depth {depth}: best estimate {best:e}, error estimate {err:e}")]
    QuadratureDidNotConverge { best: f64, err: f64, depth: u32 },

    /// An off-center operation was requested for a space whose geodesic
    /// spheres are not round (field dimension k > 1).
    #[error("family {family} is not a constant-curvature model; this operation needs k = 1")]
    UnsupportedFamily { family: String },

    /// Side lengths do not form a triangle in the requested space form.
    #[error("triangle inequality violated for sides p={p}, q={q}, r={r}")]
    TriangleInequality { p: f64, q: f64, r: f64 },

    /// A scalar root could not be bracketed or refined.
    #[error("root finding failed: {0}")]
    RootFind(String),

    /// A computed quantity contradicted an invariant the geometry guarantees.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    /// The singular-value scan found no significant minimum inside the
    /// bracket. The full trace is attached for diagnosis.
    #[error("no singular-value minimum inside the scan bracket ({} scan points)", trace.len())]
    NoMinimumInBracket { trace: Vec<(f64, f64)> },

    /// The one-sided Jacobi sweep did not reach orthogonality.
    #[error("Jacobi SVD did not converge after {0} sweeps")]
    SvdDidNotConverge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
