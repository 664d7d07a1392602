//! Radial eigenfunction machinery.
//!
//! On a shell between radii `R1 < R2`, separation of variables reduces the
//! eigenvalue problem to radial ODEs. The lowest (mode-0) radial solution
//! with a Dirichlet zero at `R1` is
//!
//! ```text
//! a(r) = integral_{R1}^{r} dt / omega(t),      a'(r) = 1 / omega(r),
//! ```
//!
//! and the first eigenvalue of the concentric shell is
//! `sigma_1 = a'(R2)/a(R2) = 1 / (omega(R2) a(R2))`. Higher angular modes
//! solve `a'' + (omega'/omega) a' - lambda_l(r) a = 0` with
//! `lambda_l(r) = l (l + m - 2) / s(r)^2`, the eigenvalue of the round
//! geodesic sphere; that formula is hard-wired to the constant-curvature
//! families (for `k > 1` the geodesic spheres are not round, and only the
//! mode-0 solution, which needs no `lambda`, is available).

use crate::error::{Error, Result};
use crate::quad::{try_integrate, QuadEstimate, Quadrature1D};
use crate::spaces::ModelSpace;

/// Grid resolution used by [`first_radial`].
const PROFILE_POINTS: usize = 513;

/// Default number of fixed RK4 steps for [`radial_mode`].
pub const DEFAULT_ODE_STEPS: usize = 4096;

/// A sampled radial solution on `[R1, r_max]` with its derivative.
#[derive(Clone, Debug)]
pub struct RadialProfile {
    pub space: ModelSpace,
    pub r1: f64,
    pub grid: Vec<f64>,
    pub a_values: Vec<f64>,
    pub a_prime_values: Vec<f64>,
    /// Angular mode number; 0 is the radial (first) mode.
    pub mode_l: u32,
}

impl RadialProfile {
    /// `a'(r_end) / a(r_end)`, the Steklov eigenvalue of this mode on the
    /// shell ending at the last grid point.
    pub fn steklov_eigenvalue(&self) -> f64 {
        let last = self.grid.len() - 1;
        self.a_prime_values[last] / self.a_values[last]
    }

    fn validate(&self) -> Result<()> {
        if self.a_values[0] != 0.0 {
            return Err(Error::InvariantViolation(format!(
                "radial profile must vanish at R1, got a(R1) = {}",
                self.a_values[0]
            )));
        }
        if self.a_values[1..].iter().any(|&a| a < 0.0) {
            return Err(Error::InvariantViolation(
                "radial profile must be nonnegative".into(),
            ));
        }
        if self.mode_l == 0
            && self
                .a_values
                .windows(2)
                .any(|w| w[1] <= w[0])
        {
            return Err(Error::InvariantViolation(
                "mode-0 radial profile must be strictly increasing".into(),
            ));
        }
        Ok(())
    }
}

/// Evaluator for the mode-0 radial solution of a fixed `(space, R1)`.
/// Values are computed by adaptive quadrature of `1/omega`, so they carry
/// the quadrature's accuracy rather than grid-interpolation error.
#[derive(Clone, Copy, Debug)]
pub struct FirstRadial {
    space: ModelSpace,
    r1: f64,
}

impl FirstRadial {
    pub fn new(space: ModelSpace, r1: f64) -> Result<Self> {
        if !(r1 > 0.0) || !space.injectivity_radius().admits(r1) {
            return Err(Error::Domain(format!(
                "R1 must lie in (0, inj), got {r1} for {space}"
            )));
        }
        Ok(Self { space, r1 })
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    /// `a(r)` with its quadrature error estimate.
    pub fn value(&self, r: f64, cfg: &Quadrature1D) -> Result<QuadEstimate> {
        if r < self.r1 || !self.space.injectivity_radius().admits(r) {
            return Err(Error::Domain(format!(
                "radial evaluation point {r} outside [R1, inj) for {}",
                self.space
            )));
        }
        try_integrate(|t| Ok(1.0 / self.space.density(t)?), self.r1, r, cfg)
    }

    /// `a'(r) = 1/omega(r)`, evaluated analytically.
    pub fn slope(&self, r: f64) -> Result<f64> {
        Ok(1.0 / self.space.density(r)?)
    }
}

/// Mode-0 radial profile on a uniform grid over `[R1, r_max]`, built by
/// cumulative adaptive quadrature of `1/omega`.
pub fn first_radial(
    space: ModelSpace,
    r1: f64,
    r_max: f64,
    cfg: &Quadrature1D,
) -> Result<RadialProfile> {
    let eval = FirstRadial::new(space, r1)?;
    if !(r_max > r1) || !space.injectivity_radius().admits(r_max) {
        return Err(Error::Domain(format!(
            "need R1 < r_max < inj, got R1={r1}, r_max={r_max} for {space}"
        )));
    }
    let n = PROFILE_POINTS;
    let mut grid = Vec::with_capacity(n);
    let mut a_values = Vec::with_capacity(n);
    let mut a_prime_values = Vec::with_capacity(n);
    let mut acc = 0.0;
    for i in 0..n {
        let r = r1 + (r_max - r1) * i as f64 / (n - 1) as f64;
        if i > 0 {
            let prev = grid[i - 1];
            acc += try_integrate(|t| Ok(1.0 / space.density(t)?), prev, r, cfg)?.value;
        }
        grid.push(r);
        a_values.push(acc);
        a_prime_values.push(eval.slope(r)?);
    }
    let profile = RadialProfile {
        space,
        r1,
        grid,
        a_values,
        a_prime_values,
        mode_l: 0,
    };
    profile.validate()?;
    Ok(profile)
}

/// First mixed eigenvalue of the concentric shell `R1 < r < R2`:
/// `1 / (omega(R2) a(R2))`.
pub fn sigma1_concentric(space: ModelSpace, r1: f64, r2: f64, cfg: &Quadrature1D) -> Result<f64> {
    check_shell_radii(space, r1, r2)?;
    let a = FirstRadial::new(space, r1)?.value(r2, cfg)?.value;
    Ok(1.0 / (space.density(r2)? * a))
}

pub(crate) fn check_shell_radii(space: ModelSpace, r1: f64, r2: f64) -> Result<()> {
    if !(r1 > 0.0 && r2 > r1) {
        return Err(Error::Domain(format!("need 0 < R1 < R2, got R1={r1}, R2={r2}")));
    }
    if !space.max_outer_radius().admits(r2) {
        return Err(Error::Domain(format!(
            "R2={r2} must be below half the injectivity radius ({}) of {space}",
            space.max_outer_radius()
        )));
    }
    Ok(())
}

/// Mode-`l` radial solution on `[R1, R2]` by fixed-step RK4 with initial
/// data `a(R1) = 0`, `a'(R1) = 1`. The initial slope is an arbitrary
/// normalization; every downstream quantity is a ratio, so it cancels.
/// `ode_step` of `None` selects `(R2 - R1) / 4096`; an explicit step is
/// rounded to the nearest uniform subdivision.
pub fn radial_mode(
    space: ModelSpace,
    r1: f64,
    r2: f64,
    l: u32,
    ode_step: Option<f64>,
) -> Result<RadialProfile> {
    check_shell_radii(space, r1, r2)?;
    if space.kappa().is_none() && l > 0 {
        return Err(Error::UnsupportedFamily {
            family: space.family().to_string(),
        });
    }
    let span = r2 - r1;
    let steps = match ode_step {
        None => DEFAULT_ODE_STEPS,
        Some(h) => {
            if !(h > 0.0) || h > span {
                return Err(Error::Domain(format!(
                    "ode_step must lie in (0, R2 - R1], got {h}"
                )));
            }
            (span / h).round().max(1.0) as usize
        }
    };
    let h = span / steps as f64;

    let m = space.m() as f64;
    let lam = |r: f64| -> Result<f64> {
        if l == 0 {
            return Ok(0.0);
        }
        // Round geodesic sphere of radius r: l (l + m - 2) / s(r)^2.
        let s = match space.kappa().expect("checked above").sign() {
            0 => r,
            1 => r.sin(),
            _ => r.sinh(),
        };
        Ok(l as f64 * (l as f64 + m - 2.0) / (s * s))
    };
    let rhs = |r: f64, a: f64, ap: f64| -> Result<(f64, f64)> {
        Ok((ap, lam(r)? * a - space.density_log_derivative(r)? * ap))
    };

    let mut grid = Vec::with_capacity(steps + 1);
    let mut a_values = Vec::with_capacity(steps + 1);
    let mut a_prime_values = Vec::with_capacity(steps + 1);
    let (mut a, mut ap) = (0.0_f64, 1.0_f64);
    grid.push(r1);
    a_values.push(a);
    a_prime_values.push(ap);
    for i in 0..steps {
        let r = r1 + i as f64 * h;
        let (k1a, k1p) = rhs(r, a, ap)?;
        let (k2a, k2p) = rhs(r + 0.5 * h, a + 0.5 * h * k1a, ap + 0.5 * h * k1p)?;
        let (k3a, k3p) = rhs(r + 0.5 * h, a + 0.5 * h * k2a, ap + 0.5 * h * k2p)?;
        let (k4a, k4p) = rhs(r + h, a + h * k3a, ap + h * k3p)?;
        a += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
        ap += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        grid.push(r1 + (i + 1) as f64 * h);
        a_values.push(a);
        a_prime_values.push(ap);
    }
    let profile = RadialProfile {
        space,
        r1,
        grid,
        a_values,
        a_prime_values,
        mode_l: l,
    };
    profile.validate()?;
    Ok(profile)
}

/// Eigenvalues `sigma_l` of the modes `0..=l_max` on the concentric shell,
/// plus whether the radial mode has the strictly smallest eigenvalue.
pub fn mode_ordering_check(
    space: ModelSpace,
    r1: f64,
    r2: f64,
    l_max: u32,
    ode_step: Option<f64>,
) -> Result<(Vec<(u32, f64)>, bool)> {
    let mut table = Vec::with_capacity(l_max as usize + 1);
    for l in 0..=l_max {
        let sigma = radial_mode(space, r1, r2, l, ode_step)?.steklov_eigenvalue();
        table.push((l, sigma));
    }
    let sigma0 = table[0].1;
    let ok = table[1..].iter().all(|&(_, s)| sigma0 < s);
    Ok((table, ok))
}
