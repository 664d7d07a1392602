//! Off-center Rayleigh-quotient functionals for geodesic shells, reduced to
//! one-dimensional integrals by the rotational symmetry about the axis
//! through the two centers.
//!
//! Setup: an inner ball of radius `R1` about `C`, an outer ball of radius
//! `R2` about `C'`, displacement `d = |CC'|` with `d + R1 < R2`, and the
//! mode-0 radial solution `a` of the concentric problem used as a test
//! function on the off-center shell. With `A_w = |S^(m-2)|` and the angle
//! conventions of [`crate::trig`]:
//!
//! * numerator (Dirichlet energy), integrating `|grad(a o r_C)|^2 = 1/omega^2`
//!   over the shell in polar coordinates at `C`, where the radial integral
//!   collapses to `a` itself:
//!   `N(d) = A_w * int_0^pi a(rho(theta)) sin^(m-2)(theta) dtheta`,
//!   with `rho(theta)` the boundary distance from `C`;
//! * denominator (boundary mass), in polar coordinates at `C'`:
//!   `D(d) = A_w * omega(R2) * int_0^pi a(r_C(psi))^2 sin^(m-2)(psi) dpsi`;
//! * the same denominator in the `C`-based parametrization, using the change
//!   of boundary measure `dS = (omega(r_C)/cos(lambda_C)) d(pushforward)`:
//!   `D_alt(d) = A_w * int_0^pi a(rho)^2 omega(rho)/cos(lambda(theta))
//!    sin^(m-2)(theta) dtheta`.
//!
//! Agreement of `D` and `D_alt` is the numerical certificate for the change
//! of measure; the sweep flags certify that `D` grows, `N` shrinks, and the
//! quotient `Q = N/D` drops as the shell decentres, which bounds the first
//! eigenvalue of every off-center shell by the concentric one.
//!
//! Off-center functionals are restricted to the constant-curvature families:
//! for `k > 1` the boundary distance is not a function of `(d, R2, angle)`
//! alone, so no honest scalar parametrization exists. Concentric quantities
//! and the pure density comparisons remain available for every family.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quad::{integrate, try_integrate, QuadEstimate, Quadrature1D};
use crate::radial::{check_shell_radii, FirstRadial};
use crate::spaces::{unit_sphere_area, ModelSpace};
use crate::trig::{angle_from_sss, boundary_distance, side_from_sas, Kappa};

/// Inner radial evaluations run this much tighter than the surrounding
/// angular integral, so their noise stays below the outer error estimator.
const INNER_TOL_FACTOR: f64 = 1e-2;

/// A pair of geodesic balls with the inner one strictly inside the outer.
#[derive(Clone, Copy, Debug)]
pub struct ShellGeometry {
    pub space: ModelSpace,
    pub r1: f64,
    pub r2: f64,
    /// Center displacement `|CC'|`.
    pub d: f64,
}

impl ShellGeometry {
    pub fn new(space: ModelSpace, r1: f64, r2: f64, d: f64) -> Result<Self> {
        check_shell_radii(space, r1, r2)?;
        if !(d >= 0.0) || !d.is_finite() {
            return Err(Error::Domain(format!("displacement must be nonnegative, got {d}")));
        }
        if d + r1 >= r2 {
            return Err(Error::Domain(format!(
                "inner ball must stay strictly inside the outer one: need d + R1 < R2, got d={d}, R1={r1}, R2={r2}"
            )));
        }
        Ok(Self { space, r1, r2, d })
    }

    /// Same shell radii with a different displacement.
    pub fn with_displacement(&self, d: f64) -> Result<Self> {
        Self::new(self.space, self.r1, self.r2, d)
    }

    fn kappa(&self) -> Result<Kappa> {
        self.space.kappa().ok_or_else(|| Error::UnsupportedFamily {
            family: self.space.family().to_string(),
        })
    }

    fn weight_exponent(&self) -> i32 {
        self.space.m() as i32 - 2
    }
}

/// One sweep entry: the functionals of a single displacement.
#[derive(Clone, Copy, Debug)]
pub struct SweepRecord {
    pub d: f64,
    /// Dirichlet energy `N(d)` of the radial test function.
    pub numerator: f64,
    /// Boundary mass `D(d)` in the outer parametrization.
    pub denominator: f64,
    /// `D(d)` recomputed through the change of boundary measure.
    pub denominator_alt: f64,
    /// Rayleigh quotient `N/D`; an upper bound for the first eigenvalue.
    pub quotient: f64,
    /// Axial component of the shell force integral for a point at distance
    /// `d` from the outer center; zero in exact arithmetic.
    pub newton_residual: f64,
    /// Summed quadrature error estimates of the three functionals.
    pub quad_err: f64,
}

/// Inequality flags for a sweep, each asserted only when the gap exceeds
/// ten times the relevant quadrature error estimates ("strict by margin").
#[derive(Clone, Copy, Debug)]
pub struct SweepFlags {
    /// `D` strictly increases along the (sorted) displacement grid.
    pub denominator_increasing: bool,
    /// `N(d) < N(0)` for every positive displacement.
    pub numerator_max_at_zero: bool,
    /// `Q(d) < Q(0) = sigma_1` for every positive displacement.
    pub quotient_below_concentric: bool,
    /// Observed only, not part of the certified chain: whether `Q` decreased
    /// monotonically along the grid.
    pub quotient_monotone_observed: bool,
}

impl SweepFlags {
    /// The certified inequalities; excludes the monotonicity diagnostic.
    pub fn all_hold(&self) -> bool {
        self.denominator_increasing && self.numerator_max_at_zero && self.quotient_below_concentric
    }
}

/// Result of [`sweep`]: per-displacement records in input order, failures
/// collected rather than aborting, and the inequality flags.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub failures: Vec<(f64, String)>,
    pub flags: SweepFlags,
    pub sigma1_concentric: f64,
}

/// Distance `r_C(P)` from the inner center to the outer-boundary point at
/// polar angle `psi` from the ray `C' -> C`. Satisfies `r(0) = R2 - d` and
/// `r(pi) = R2 + d`.
pub fn r_from_outer_center(geom: &ShellGeometry, psi: f64) -> Result<f64> {
    let kappa = geom.kappa()?;
    if geom.d == 0.0 {
        return Ok(geom.r2);
    }
    side_from_sas(kappa, geom.d, geom.r2, psi)
}

/// Boundary mass `D(d)` of the squared radial test function over the outer
/// boundary, in the outer-center parametrization.
pub fn rayleigh_denominator(geom: &ShellGeometry, cfg: &Quadrature1D) -> Result<QuadEstimate> {
    geom.kappa()?;
    let radial = FirstRadial::new(geom.space, geom.r1)?;
    let inner_cfg = cfg.tightened(INNER_TOL_FACTOR);
    let w_exp = geom.weight_exponent();
    let est = try_integrate(
        |psi| {
            let r = r_from_outer_center(geom, psi)?;
            let a = radial.value(r, &inner_cfg)?.value;
            Ok(a * a * psi.sin().powi(w_exp))
        },
        0.0,
        std::f64::consts::PI,
        cfg,
    )?;
    let scale = unit_sphere_area(geom.space.m() - 1)? * geom.space.density(geom.r2)?;
    Ok(QuadEstimate {
        value: scale * est.value,
        err_estimate: scale * est.err_estimate,
    })
}

/// `D(d)` recomputed in the inner-center parametrization through the change
/// of boundary measure; agreement with [`rayleigh_denominator`] certifies
/// the measure identity numerically.
pub fn rayleigh_denominator_via_pushforward(
    geom: &ShellGeometry,
    cfg: &Quadrature1D,
) -> Result<QuadEstimate> {
    let kappa = geom.kappa()?;
    let radial = FirstRadial::new(geom.space, geom.r1)?;
    let inner_cfg = cfg.tightened(INNER_TOL_FACTOR);
    let w_exp = geom.weight_exponent();
    let est = try_integrate(
        |theta| {
            let rho = boundary_distance(kappa, geom.d, geom.r2, theta)?;
            let cos_lambda = if geom.d == 0.0 {
                1.0
            } else {
                let lambda = angle_from_sss(kappa, geom.d, rho, geom.r2)?;
                let c = lambda.cos();
                if c <= 0.0 {
                    return Err(Error::InvariantViolation(format!(
                        "boundary angle not acute at theta={theta}: cos(lambda)={c}"
                    )));
                }
                c
            };
            let a = radial.value(rho, &inner_cfg)?.value;
            Ok(a * a * geom.space.density(rho)? / cos_lambda * theta.sin().powi(w_exp))
        },
        0.0,
        std::f64::consts::PI,
        cfg,
    )?;
    let scale = unit_sphere_area(geom.space.m() - 1)?;
    Ok(QuadEstimate {
        value: scale * est.value,
        err_estimate: scale * est.err_estimate,
    })
}

/// Dirichlet energy `N(d)` of the radial test function over the off-center
/// shell. The radial integral collapses: `int_{R1}^{rho} omega^{-1} = a(rho)`.
pub fn rayleigh_numerator(geom: &ShellGeometry, cfg: &Quadrature1D) -> Result<QuadEstimate> {
    let kappa = geom.kappa()?;
    let radial = FirstRadial::new(geom.space, geom.r1)?;
    let inner_cfg = cfg.tightened(INNER_TOL_FACTOR);
    let w_exp = geom.weight_exponent();
    let est = try_integrate(
        |theta| {
            let rho = boundary_distance(kappa, geom.d, geom.r2, theta)?;
            Ok(radial.value(rho, &inner_cfg)?.value * theta.sin().powi(w_exp))
        },
        0.0,
        std::f64::consts::PI,
        cfg,
    )?;
    let scale = unit_sphere_area(geom.space.m() - 1)?;
    Ok(QuadEstimate {
        value: scale * est.value,
        err_estimate: scale * est.err_estimate,
    })
}

/// Axial component of the force-balance integral
/// `int cos(alpha) / omega(r_X) dS` over a geodesic sphere of radius `R2`,
/// for a point `X` at distance `x` from the sphere's center. The transverse
/// components vanish by symmetry and the axial one vanishes identically
/// (the shell exerts no net force on interior points), so the returned value
/// is a pure discretization residual.
pub fn newton_shell_residual(
    space: ModelSpace,
    r2: f64,
    x: f64,
    cfg: &Quadrature1D,
) -> Result<f64> {
    let kappa = space.kappa().ok_or_else(|| Error::UnsupportedFamily {
        family: space.family().to_string(),
    })?;
    if !(x >= 0.0) || x >= r2 {
        return Err(Error::Domain(format!("need 0 <= x < R2, got x={x}, R2={r2}")));
    }
    if !space.max_outer_radius().admits(r2) {
        return Err(Error::Domain(format!(
            "R2={r2} must be below half the injectivity radius of {space}"
        )));
    }
    let w_exp = space.m() as i32 - 2;
    let est = try_integrate(
        |psi| {
            let (r_x, cos_alpha) = if x == 0.0 {
                (r2, psi.cos())
            } else {
                let r_x = side_from_sas(kappa, x, r2, psi)?;
                let alpha = angle_from_sss(kappa, r2, x, r_x)?;
                (r_x, alpha.cos())
            };
            Ok(cos_alpha / space.density(r_x)? * psi.sin().powi(w_exp))
        },
        0.0,
        std::f64::consts::PI,
        cfg,
    )?;
    Ok(unit_sphere_area(space.m() - 1)? * space.density(r2)? * est.value)
}

/// All functionals of a single shell configuration.
pub fn rayleigh_quotient(geom: &ShellGeometry, cfg: &Quadrature1D) -> Result<SweepRecord> {
    let num = rayleigh_numerator(geom, cfg)?;
    let den = rayleigh_denominator(geom, cfg)?;
    let den_alt = rayleigh_denominator_via_pushforward(geom, cfg)?;
    let newton = newton_shell_residual(geom.space, geom.r2, geom.d, cfg)?;
    Ok(SweepRecord {
        d: geom.d,
        numerator: num.value,
        denominator: den.value,
        denominator_alt: den_alt.value,
        quotient: num.value / den.value,
        newton_residual: newton,
        quad_err: num.err_estimate + den.err_estimate + den_alt.err_estimate,
    })
}

/// Default displacement grid: `steps` uniform points on
/// `[0, 0.95 (R2 - R1)]`; the 0.95 guard keeps the inner ball clear of the
/// outer boundary.
pub fn default_d_grid(geom: &ShellGeometry, steps: usize) -> Vec<f64> {
    let hi = 0.95 * (geom.r2 - geom.r1);
    if steps <= 1 {
        return vec![0.0];
    }
    (0..steps)
        .map(|i| hi * i as f64 / (steps - 1) as f64)
        .collect()
}

/// Evaluates the functionals on every displacement of `d_values` (records in
/// input order; failures collected per displacement) and derives the
/// inequality flags against the concentric reference. Records are
/// independent and evaluated in parallel; the output is identical for any
/// thread count.
pub fn sweep(geom: &ShellGeometry, d_values: &[f64], cfg: &Quadrature1D) -> Result<SweepOutcome> {
    geom.kappa()?;
    let evaluated: Vec<(f64, std::result::Result<SweepRecord, String>)> = d_values
        .par_iter()
        .map(|&d| {
            let res = geom
                .with_displacement(d)
                .and_then(|g| rayleigh_quotient(&g, cfg))
                .map_err(|e| e.to_string());
            (d, res)
        })
        .collect();

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for (d, res) in evaluated {
        match res {
            Ok(rec) => records.push(rec),
            Err(msg) => failures.push((d, msg)),
        }
    }

    // Concentric reference values from the closed concentric forms.
    let radial = FirstRadial::new(geom.space, geom.r1)?;
    let a_r2 = radial.value(geom.r2, cfg)?;
    let omega_r2 = geom.space.density(geom.r2)?;
    let area = unit_sphere_area(geom.space.m())?;
    let sigma1 = 1.0 / (omega_r2 * a_r2.value);
    let n0 = area * a_r2.value;
    let n0_err = area * a_r2.err_estimate;
    let q0_err = sigma1 * (a_r2.err_estimate / a_r2.value);

    let mut sorted: Vec<&SweepRecord> = records.iter().collect();
    sorted.sort_by(|a, b| a.d.total_cmp(&b.d));

    let mut denominator_increasing = true;
    let mut quotient_monotone_observed = true;
    for pair in sorted.windows(2) {
        let margin = 10.0 * (pair[0].quad_err + pair[1].quad_err);
        if pair[1].denominator <= pair[0].denominator + margin {
            denominator_increasing = false;
        }
        if pair[1].quotient >= pair[0].quotient {
            quotient_monotone_observed = false;
        }
    }
    let mut numerator_max_at_zero = true;
    let mut quotient_below_concentric = true;
    for rec in &records {
        if rec.d == 0.0 {
            continue;
        }
        if rec.numerator >= n0 - 10.0 * (rec.quad_err + n0_err) {
            numerator_max_at_zero = false;
        }
        let q_err = rec.quad_err / rec.denominator * (1.0 + rec.quotient.abs());
        if rec.quotient >= sigma1 - 10.0 * (q_err + q0_err) {
            quotient_below_concentric = false;
        }
    }

    Ok(SweepOutcome {
        records,
        failures,
        flags: SweepFlags {
            denominator_increasing,
            numerator_max_at_zero,
            quotient_below_concentric,
            quotient_monotone_observed,
        },
        sigma1_concentric: sigma1,
    })
}

/// Direction-set measures of the two boundary caps cut from spheres of radii
/// `R2 -+ s` about `C` by the displaced ball about `C'` (compact
/// constant-curvature models). Returns `(far_cap, near_cap, ok)` where `ok`
/// certifies `far_cap <= near_cap` up to quadrature tolerance.
pub fn cap_measure_compare(
    space: ModelSpace,
    r2: f64,
    d: f64,
    s: f64,
) -> Result<(f64, f64, bool)> {
    match space.kappa() {
        Some(Kappa::Spherical) => {}
        _ => {
            return Err(Error::UnsupportedFamily {
                family: space.family().to_string(),
            })
        }
    }
    if !space.max_outer_radius().admits(r2) {
        return Err(Error::Domain(format!(
            "R2={r2} must be below half the injectivity radius of {space}"
        )));
    }
    if d == 0.0 && s == 0.0 {
        // Coincident balls: both caps are empty for every offset.
        return Ok((0.0, 0.0, true));
    }
    if !(d > 0.0 && d < r2) {
        return Err(Error::Domain(format!("need 0 < d < R2, got d={d}, R2={r2}")));
    }
    if !(s > 0.0 && s <= d) {
        return Err(Error::Domain(format!("need 0 < s <= d, got s={s}, d={d}")));
    }
    if s == d {
        // Both spheres touch the displaced boundary tangentially and the
        // open caps are empty.
        return Ok((0.0, 0.0, true));
    }
    let kappa = Kappa::Spherical;
    // Directions from C: the far sphere of radius R2 + s lies inside the
    // displaced ball for angles below theta_plus; the near sphere of radius
    // R2 - s lies outside it for angles above theta_minus.
    let theta_plus = angle_from_sss(kappa, r2, d, r2 + s)?;
    let theta_minus = angle_from_sss(kappa, r2, d, r2 - s)?;
    let w_exp = space.m() as i32 - 2;
    let cfg = Quadrature1D::default();
    let area = unit_sphere_area(space.m() - 1)?;
    let far = integrate(|t| t.sin().powi(w_exp), 0.0, theta_plus, &cfg)?;
    let near = integrate(|t| t.sin().powi(w_exp), theta_minus, std::f64::consts::PI, &cfg)?;
    let left = area * far.value;
    let right = area * near.value;
    // Near the degenerate angles the arccosine carries sqrt(eps)-level
    // noise, which enters the measures through the integrand at the cap rim.
    let rim_noise =
        area * 2e-8 * (theta_plus.sin().powi(w_exp) + theta_minus.sin().powi(w_exp));
    let tol = 1e-10 * (1.0 + left + right)
        + rim_noise
        + 10.0 * area * (far.err_estimate + near.err_estimate);
    Ok((left, right, left <= right + tol))
}

/// Checks `omega(R2 - s) < omega(R2 + s)` strictly at every grid point, for
/// any compact family (this is a pure one-dimensional density comparison, so
/// `k > 1` is fine here).
pub fn density_asymmetry(space: ModelSpace, r2: f64, s_grid: &[f64]) -> Result<bool> {
    if !space.family().is_compact() {
        return Err(Error::Domain(format!(
            "density asymmetry concerns compact families, got {space}"
        )));
    }
    if !space.max_outer_radius().admits(r2) {
        return Err(Error::Domain(format!(
            "R2={r2} must be below half the injectivity radius of {space}"
        )));
    }
    for &s in s_grid {
        if !(s > 0.0 && s < r2) {
            return Err(Error::Domain(format!("need 0 < s < R2, got s={s}, R2={r2}")));
        }
        if space.density(r2 - s)? >= space.density(r2 + s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radial::sigma1_concentric;
    use crate::spaces::Family;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn euclid3_shell(d: f64) -> ShellGeometry {
        ShellGeometry::new(ModelSpace::euclidean(3).unwrap(), 1.0, 2.0, d).unwrap()
    }

    #[test]
    fn geometry_invariants() {
        assert!(ShellGeometry::new(ModelSpace::euclidean(3).unwrap(), 1.0, 2.0, 0.99).is_ok());
        assert!(ShellGeometry::new(ModelSpace::euclidean(3).unwrap(), 1.0, 2.0, 1.0).is_err());
        assert!(ShellGeometry::new(ModelSpace::euclidean(3).unwrap(), 2.0, 1.0, 0.0).is_err());
        assert!(ShellGeometry::new(ModelSpace::sphere(2).unwrap(), 0.3, 1.6, 0.0).is_err());
    }

    #[test]
    fn r_from_outer_center_examples() {
        let g = euclid3_shell(0.5);
        assert_eq!(r_from_outer_center(&g, 0.0).unwrap(), 1.5);
        assert_eq!(r_from_outer_center(&g, PI).unwrap(), 2.5);
        assert_relative_eq!(
            r_from_outer_center(&g, 0.5 * PI).unwrap(),
            4.25_f64.sqrt(),
            max_relative = 1e-14
        );
        let conc = euclid3_shell(0.0);
        assert_eq!(r_from_outer_center(&conc, 1.234).unwrap(), 2.0);

        let cp2 = ModelSpace::new(Family::ComplexProjective, 2).unwrap();
        let g = ShellGeometry::new(cp2, 0.2, 0.6, 0.1).unwrap();
        assert!(matches!(
            r_from_outer_center(&g, 0.3),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn concentric_closed_forms() {
        let cfg = Quadrature1D::default();
        let g = euclid3_shell(0.0);
        // a(2) = 1/2 in R^3, |S^2| = 4 pi, omega(2) = 4.
        let den = rayleigh_denominator(&g, &cfg).unwrap();
        assert_relative_eq!(den.value, 4.0 * PI, max_relative = 1e-11);
        let num = rayleigh_numerator(&g, &cfg).unwrap();
        assert_relative_eq!(num.value, 2.0 * PI, max_relative = 1e-11);
        let rec = rayleigh_quotient(&g, &cfg).unwrap();
        assert_relative_eq!(rec.quotient, 0.5, max_relative = 1e-11);
    }

    #[test]
    fn quotient_matches_concentric_eigenvalue() {
        let cfg = Quadrature1D::default();
        for (space, r1, r2) in [
            (ModelSpace::euclidean(2).unwrap(), 1.0, 2.5),
            (ModelSpace::sphere(3).unwrap(), 0.2, 1.1),
            (ModelSpace::real_hyperbolic(4).unwrap(), 0.4, 1.3),
            (ModelSpace::real_projective(2).unwrap(), 0.1, 0.7),
        ] {
            let g = ShellGeometry::new(space, r1, r2, 0.0).unwrap();
            let rec = rayleigh_quotient(&g, &cfg).unwrap();
            let sigma1 = sigma1_concentric(space, r1, r2, &cfg).unwrap();
            assert_relative_eq!(rec.quotient, sigma1, max_relative = 1e-10);
        }
    }

    #[test]
    fn denominator_parametrizations_agree() {
        let cfg = Quadrature1D::default();
        for (space, r1, r2, d) in [
            (ModelSpace::euclidean(3).unwrap(), 1.0, 2.0, 0.5),
            (ModelSpace::sphere(2).unwrap(), 0.3, 1.2, 0.2),
            (ModelSpace::real_hyperbolic(3).unwrap(), 0.5, 1.5, 0.7),
        ] {
            let g = ShellGeometry::new(space, r1, r2, d).unwrap();
            let den = rayleigh_denominator(&g, &cfg).unwrap().value;
            let alt = rayleigh_denominator_via_pushforward(&g, &cfg).unwrap().value;
            assert!(
                ((den - alt) / den).abs() < 1e-8,
                "{space} d={d}: D={den}, D_alt={alt}"
            );
        }
    }

    #[test]
    fn denominator_grows_when_decentred() {
        let cfg = Quadrature1D::default();
        let base = rayleigh_denominator(&euclid3_shell(0.0), &cfg).unwrap().value;
        let moved = rayleigh_denominator(&euclid3_shell(0.5), &cfg).unwrap().value;
        assert!(moved > base + 1e-6);
    }

    #[test]
    fn newton_residual_examples() {
        let cfg = Quadrature1D::default();
        let e3 = ModelSpace::euclidean(3).unwrap();
        assert!(newton_shell_residual(e3, 1.0, 0.4, &cfg).unwrap().abs() < 1e-10);
        assert!(newton_shell_residual(e3, 1.0, 0.0, &cfg).unwrap().abs() < 1e-12);
        let s2 = ModelSpace::sphere(2).unwrap();
        assert!(newton_shell_residual(s2, 1.2, 0.5, &cfg).unwrap().abs() < 1e-8);
        let h4 = ModelSpace::real_hyperbolic(4).unwrap();
        assert!(newton_shell_residual(h4, 1.5, 0.9, &cfg).unwrap().abs() < 1e-8);
    }

    #[test]
    fn sweep_flags_on_reference_grids() {
        let cfg = Quadrature1D::default();
        let g = euclid3_shell(0.0);
        let out = sweep(&g, &[0.0, 0.2, 0.4, 0.6, 0.8], &cfg).unwrap();
        assert_eq!(out.records.len(), 5);
        assert!(out.failures.is_empty());
        assert!(out.flags.all_hold(), "{:?}", out.flags);
        assert_relative_eq!(out.records[0].quotient, out.sigma1_concentric, max_relative = 1e-10);

        // Sphere configuration with R2 beyond a quarter of the injectivity
        // radius, where the density is no longer concave.
        let s2 = ShellGeometry::new(ModelSpace::sphere(2).unwrap(), 0.2, 1.3, 0.0).unwrap();
        let out = sweep(&s2, &[0.0, 0.2, 0.5, 0.9], &cfg).unwrap();
        assert!(out.failures.is_empty());
        assert!(out.flags.all_hold(), "{:?}", out.flags);
    }

    #[test]
    fn single_point_sweep_is_the_concentric_record() {
        let cfg = Quadrature1D::default();
        let out = sweep(&euclid3_shell(0.0), &[0.0], &cfg).unwrap();
        assert_eq!(out.records.len(), 1);
        assert_relative_eq!(
            out.records[0].quotient,
            out.sigma1_concentric,
            max_relative = 1e-10
        );
        assert!(out.flags.all_hold());
    }

    #[test]
    fn sweep_collects_per_displacement_failures() {
        let cfg = Quadrature1D::default();
        let g = euclid3_shell(0.0);
        let out = sweep(&g, &[0.0, 0.5, 7.0], &cfg).unwrap();
        assert_eq!(out.records.len(), 2);
        assert_eq!(out.failures.len(), 1);
        assert_eq!(out.failures[0].0, 7.0);
    }

    #[test]
    fn default_grid_shape() {
        let g = euclid3_shell(0.0);
        let grid = default_d_grid(&g, 17);
        assert_eq!(grid.len(), 17);
        assert_eq!(grid[0], 0.0);
        assert_relative_eq!(grid[16], 0.95, max_relative = 1e-15);
    }

    #[test]
    fn cap_measures_ordered() {
        let s2 = ModelSpace::sphere(2).unwrap();
        let (left, right, ok) = cap_measure_compare(s2, 1.3, 0.3, 0.15).unwrap();
        assert!(ok, "left={left}, right={right}");
        assert!(left > 0.0 && right > 0.0);
        let s3 = ModelSpace::sphere(3).unwrap();
        let (_, _, ok) = cap_measure_compare(s3, 1.4, 0.4, 0.3).unwrap();
        assert!(ok);
        // s = d degenerates both caps to measure (nearly) zero.
        let (l, r, ok) = cap_measure_compare(s3, 1.4, 0.4, 0.4).unwrap();
        assert!(ok);
        assert!(l < 1e-9 && r < 1e-9);
        // Coincident balls are the fully degenerate case.
        let (l, r, ok) = cap_measure_compare(s2, 1.3, 0.0, 0.0).unwrap();
        assert!(ok && l == 0.0 && r == 0.0);
        assert!(cap_measure_compare(s2, 1.3, 0.3, 0.31).is_err());
        assert!(cap_measure_compare(ModelSpace::euclidean(3).unwrap(), 1.0, 0.3, 0.1).is_err());
    }

    #[test]
    fn density_asymmetry_examples() {
        let s3 = ModelSpace::sphere(3).unwrap();
        assert!(density_asymmetry(s3, 1.2, &[0.5]).unwrap());
        // sin^2(0.7) < sin^2(1.7) by supplementary-angle comparison.
        assert!(s3.density(0.7).unwrap() < s3.density(1.7).unwrap());

        let cp2 = ModelSpace::new(Family::ComplexProjective, 2).unwrap();
        let grid: Vec<f64> = (1..100).map(|i| 0.7 * i as f64 / 100.0).collect();
        assert!(density_asymmetry(cp2, 0.7, &grid).unwrap());

        // The gap closes as s -> 0.
        let gap = s3.density(1.2 + 1e-6).unwrap() - s3.density(1.2 - 1e-6).unwrap();
        assert!(gap > 0.0 && gap < 1e-5);

        assert!(density_asymmetry(ModelSpace::real_hyperbolic(3).unwrap(), 1.0, &[0.5]).is_err());
    }
}
