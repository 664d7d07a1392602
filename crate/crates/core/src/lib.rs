//! First mixed Steklov-Dirichlet eigenvalues of geodesic shells in
//! two-point homogeneous spaces.
//!
//! The crate computes the first eigenvalue of the mixed problem on the
//! region between two geodesic balls (Dirichlet zero on the inner boundary,
//! spectral condition on the outer one), evaluates the off-center
//! Rayleigh-quotient functionals built from the concentric eigenfunction,
//! and certifies numerically that the quotient is maximal for concentric
//! shells. An independent collocation eigensolver for the planar eccentric
//! annulus cross-validates the bound where the exact eigenvalue is
//! computable.
//!
//! Module map:
//!
//! * [`spaces`] - the model spaces, their volume densities and radius bounds;
//! * [`quad`] - adaptive Gauss-Legendre quadrature;
//! * [`trig`] - constant-curvature triangle kernel and sampling checks;
//! * [`radial`] - radial eigenfunctions and concentric eigenvalues;
//! * [`shell`] - off-center functionals, sweeps, and comparison checks;
//! * [`mps`] - method-of-particular-solutions solver for the planar annulus.
//!
//! Everything is deterministic: sampling checks take explicit seeds, and
//! parallel evaluation (sweeps, singular-value scans) never changes results.

// Validation uses `!(x > 0.0)` throughout so that NaN inputs fail the
// precondition; `x <= 0.0` would let NaN through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod mps;
pub mod quad;
pub mod radial;
pub mod shell;
pub mod spaces;
pub mod trig;

pub use error::{Error, Result};
pub use mps::{solve_eccentric, smallest_singular_value, DenseMatrix, MpsConfig, MpsResult};
pub use quad::{gauss_legendre_nodes, integrate, try_integrate, QuadEstimate, Quadrature1D};
pub use radial::{
    first_radial, mode_ordering_check, radial_mode, sigma1_concentric, FirstRadial, RadialProfile,
};
pub use shell::{
    cap_measure_compare, default_d_grid, density_asymmetry, newton_shell_residual,
    r_from_outer_center, rayleigh_denominator, rayleigh_denominator_via_pushforward,
    rayleigh_numerator, rayleigh_quotient, sweep, ShellGeometry, SweepFlags, SweepOutcome,
    SweepRecord,
};
pub use spaces::{unit_sphere_area, Extent, Family, ModelSpace};
pub use trig::{
    acute_opposite_angle_check, angle_from_sss, axis_symmetry_check, boundary_distance,
    side_from_sas, Kappa, Triangle,
};
