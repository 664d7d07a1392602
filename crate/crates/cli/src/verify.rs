//! The `verify` command: every certified property as a named check with a
//! pass flag and a deterministic detail string.
//!
//! `Level::Full` runs the grids at certification scale; `Level::Fast` keeps
//! the same checks on coarser grids for quick iteration. All randomness is
//! seeded, so a fixed `(seed, level)` produces a byte-identical report.

use std::f64::consts::E;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use steklov_core::{
    acute_opposite_angle_check, axis_symmetry_check, cap_measure_compare, density_asymmetry,
    mode_ordering_check, newton_shell_residual, radial_mode, rayleigh_denominator,
    rayleigh_denominator_via_pushforward, rayleigh_quotient, sigma1_concentric, solve_eccentric,
    sweep, Family, Kappa, ModelSpace, MpsConfig, Quadrature1D, ShellGeometry,
};

use crate::emit::fmt17;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, pass: bool, detail: String) -> Self {
        Self { name, pass, detail }
    }

    fn failed(name: &'static str, err: impl std::fmt::Display) -> Self {
        Self {
            name,
            pass: false,
            detail: format!("error: {err}"),
        }
    }
}

fn quad_cfg() -> Quadrature1D {
    Quadrature1D::default()
}

/// Twelve concentric configurations spanning the four constant-curvature
/// families and real dimensions 2 through 4.
fn concentric_configs() -> Vec<(ModelSpace, f64, f64)> {
    vec![
        (ModelSpace::euclidean(2).unwrap(), 1.0, 2.0),
        (ModelSpace::euclidean(3).unwrap(), 1.0, 2.0),
        (ModelSpace::euclidean(4).unwrap(), 0.5, 1.5),
        (ModelSpace::sphere(2).unwrap(), 0.3, 1.2),
        (ModelSpace::sphere(3).unwrap(), 0.2, 1.1),
        (ModelSpace::sphere(4).unwrap(), 0.25, 1.0),
        (ModelSpace::real_projective(2).unwrap(), 0.1, 0.7),
        (ModelSpace::real_projective(3).unwrap(), 0.15, 0.6),
        (ModelSpace::real_projective(4).unwrap(), 0.2, 0.65),
        (ModelSpace::real_hyperbolic(2).unwrap(), 0.5, 2.0),
        (ModelSpace::real_hyperbolic(3).unwrap(), 0.4, 1.4),
        (ModelSpace::real_hyperbolic(4).unwrap(), 0.3, 1.2),
    ]
}

/// Closed-form first eigenvalues: inverted-cube shell in R^3, logarithmic
/// annulus in R^2, and the tangent/tanh antiderivatives on the 2-sphere and
/// the hyperbolic plane.
pub fn check_sigma1_closed_forms(_seed: u64, _level: Level) -> Check {
    const NAME: &str = "sigma1_closed_forms";
    let cfg = quad_cfg();
    let run = || -> steklov_core::Result<f64> {
        let mut worst = 0.0_f64;
        let mut track = |got: f64, expect: f64| {
            worst = worst.max(((got - expect) / expect).abs());
        };

        let e3 = ModelSpace::euclidean(3).unwrap();
        track(sigma1_concentric(e3, 1.0, 2.0, &cfg)?, 0.5);

        let e2 = ModelSpace::euclidean(2).unwrap();
        track(sigma1_concentric(e2, 1.0, E, &cfg)?, 1.0 / E);

        let s2 = ModelSpace::sphere(2).unwrap();
        let (r1, r2) = (0.3_f64, 1.2_f64);
        let exact = 1.0 / (r2.sin() * ((0.5 * r2).tan() / (0.5 * r1).tan()).ln());
        track(sigma1_concentric(s2, r1, r2, &cfg)?, exact);

        let h2 = ModelSpace::real_hyperbolic(2).unwrap();
        let (r1, r2) = (0.5_f64, 2.0_f64);
        let exact = 1.0 / (r2.sinh() * ((0.5 * r2).tanh() / (0.5 * r1).tanh()).ln());
        track(sigma1_concentric(h2, r1, r2, &cfg)?, exact);

        Ok(worst)
    };
    match run() {
        Ok(worst) => Check::new(
            NAME,
            worst < 1e-10,
            format!("4 closed forms, max rel err {}", fmt17(worst)),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// The Rayleigh quotient of the concentric shell reproduces the eigenvalue.
pub fn check_rayleigh_matches_concentric(_seed: u64, level: Level) -> Check {
    const NAME: &str = "rayleigh_matches_concentric";
    let cfg = quad_cfg();
    let configs = concentric_configs();
    let configs = match level {
        Level::Full => configs,
        Level::Fast => configs.into_iter().step_by(3).collect(),
    };
    let count = configs.len();
    let run = || -> steklov_core::Result<f64> {
        let mut worst = 0.0_f64;
        for (space, r1, r2) in configs {
            let g = ShellGeometry::new(space, r1, r2, 0.0)?;
            let q = rayleigh_quotient(&g, &cfg)?.quotient;
            let sigma1 = sigma1_concentric(space, r1, r2, &cfg)?;
            worst = worst.max(((q - sigma1) / sigma1).abs());
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => Check::new(
            NAME,
            worst < 1e-10,
            format!("{count} configurations, max rel err {}", fmt17(worst)),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// The two parametrizations of the boundary integral agree pointwise on a
/// grid of displaced shells.
pub fn check_boundary_measure_change(_seed: u64, level: Level) -> Check {
    const NAME: &str = "boundary_measure_change";
    let cfg = quad_cfg();
    let d_fracs: &[f64] = match level {
        Level::Full => &[0.15, 0.4, 0.65, 0.9],
        Level::Fast => &[0.4, 0.9],
    };
    let configs = match level {
        Level::Full => concentric_configs(),
        Level::Fast => concentric_configs().into_iter().step_by(4).collect(),
    };
    let count = configs.len() * d_fracs.len();
    let run = || -> steklov_core::Result<f64> {
        let mut worst = 0.0_f64;
        for (space, r1, r2) in configs {
            for &frac in d_fracs {
                let d = frac * 0.95 * (r2 - r1);
                let g = ShellGeometry::new(space, r1, r2, d)?;
                let den = rayleigh_denominator(&g, &cfg)?.value;
                let alt = rayleigh_denominator_via_pushforward(&g, &cfg)?.value;
                worst = worst.max(((den - alt) / den).abs());
            }
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => Check::new(
            NAME,
            worst < 1e-8,
            format!("{count} grid points, max rel gap {}", fmt17(worst)),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// Shared sweep computation for the three inequality checks.
fn certification_sweeps(level: Level) -> steklov_core::Result<Vec<steklov_core::SweepOutcome>> {
    let cfg = quad_cfg();
    let steps = match level {
        Level::Full => 9,
        Level::Fast => 5,
    };
    // The sphere entry uses R2 = 1.3 > pi/4, the regime where the density is
    // no longer concave on the shell.
    let bases = [
        (ModelSpace::euclidean(3).unwrap(), 1.0, 2.0),
        (ModelSpace::sphere(2).unwrap(), 0.2, 1.3),
        (ModelSpace::real_projective(3).unwrap(), 0.15, 0.7),
        (ModelSpace::real_hyperbolic(3).unwrap(), 0.5, 1.5),
    ];
    bases
        .iter()
        .map(|&(space, r1, r2)| {
            let g = ShellGeometry::new(space, r1, r2, 0.0)?;
            let grid: Vec<f64> = (0..steps)
                .map(|i| 0.95 * (r2 - r1) * i as f64 / (steps - 1) as f64)
                .collect();
            let out = sweep(&g, &grid, &cfg)?;
            if let Some((d, msg)) = out.failures.first() {
                return Err(steklov_core::Error::Domain(format!(
                    "sweep record d={d} failed: {msg}"
                )));
            }
            Ok(out)
        })
        .collect()
}

pub fn check_denominator_monotone(_seed: u64, level: Level) -> Check {
    const NAME: &str = "denominator_monotone";
    match certification_sweeps(level) {
        Ok(outs) => {
            let pass = outs.iter().all(|o| o.flags.denominator_increasing);
            Check::new(
                NAME,
                pass,
                format!("{} sweeps, strictly increasing with 10x error margin: {pass}", outs.len()),
            )
        }
        Err(e) => Check::failed(NAME, e),
    }
}

pub fn check_numerator_max_at_concentric(_seed: u64, level: Level) -> Check {
    const NAME: &str = "numerator_max_at_concentric";
    match certification_sweeps(level) {
        Ok(outs) => {
            let pass = outs.iter().all(|o| o.flags.numerator_max_at_zero);
            Check::new(
                NAME,
                pass,
                format!("{} sweeps, strict drop for d > 0 with 10x error margin: {pass}", outs.len()),
            )
        }
        Err(e) => Check::failed(NAME, e),
    }
}

pub fn check_quotient_max_at_concentric(_seed: u64, level: Level) -> Check {
    const NAME: &str = "quotient_max_at_concentric";
    match certification_sweeps(level) {
        Ok(outs) => {
            let pass = outs.iter().all(|o| o.flags.quotient_below_concentric);
            let worst_gap = outs
                .iter()
                .flat_map(|o| {
                    let s1 = o.sigma1_concentric;
                    o.records
                        .iter()
                        .filter(|r| r.d > 0.0)
                        .map(move |r| s1 - r.quotient)
                })
                .fold(f64::INFINITY, f64::min);
            Check::new(
                NAME,
                pass,
                format!("{} sweeps, smallest gap sigma1 - Q(d) = {}", outs.len(), fmt17(worst_gap)),
            )
        }
        Err(e) => Check::failed(NAME, e),
    }
}

/// Zero net force inside a shell: seeded random draws across the four
/// constant-curvature families.
pub fn check_shell_force_balance(seed: u64, level: Level) -> Check {
    const NAME: &str = "shell_force_balance";
    let cfg = quad_cfg();
    let draws = match level {
        Level::Full => 50,
        Level::Fast => 12,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e11);
    let mut run = || -> steklov_core::Result<f64> {
        let mut worst = 0.0_f64;
        for i in 0..draws {
            let space = match i % 4 {
                0 => ModelSpace::euclidean(rng.gen_range(2..=5))?,
                1 => ModelSpace::sphere(rng.gen_range(2..=5))?,
                2 => ModelSpace::real_projective(rng.gen_range(2..=5))?,
                _ => ModelSpace::real_hyperbolic(rng.gen_range(2..=5))?,
            };
            let r2_hi = match space.max_outer_radius() {
                steklov_core::Extent::Finite(v) => 0.95 * v,
                steklov_core::Extent::Infinite => 1.6,
            };
            let r2 = rng.gen_range(0.3 * r2_hi..r2_hi);
            let x = rng.gen_range(0.0..0.9 * r2);
            let residual = newton_shell_residual(space, r2, x, &cfg)?;
            worst = worst.max(residual.abs());
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => Check::new(
            NAME,
            worst < 1e-8,
            format!("{draws} draws, max |residual| {}", fmt17(worst)),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// The angle opposite the not-larger side is acute, in every curvature.
pub fn check_acute_angle_sampling(seed: u64, level: Level) -> Check {
    const NAME: &str = "acute_angle_sampling";
    let samples = match level {
        Level::Full => 10_000,
        Level::Fast => 1_000,
    };
    let run = || -> steklov_core::Result<bool> {
        Ok(acute_opposite_angle_check(Kappa::Flat, samples, seed)?
            && acute_opposite_angle_check(Kappa::Spherical, samples, seed.wrapping_add(1))?
            && acute_opposite_angle_check(Kappa::Hyperbolic, samples, seed.wrapping_add(2))?)
    };
    match run() {
        Ok(pass) => Check::new(NAME, pass, format!("{samples} samples per curvature")),
        Err(e) => Check::failed(NAME, e),
    }
}

/// Symmetry of boundary distances and angles about the center axis.
pub fn check_distance_symmetry_sampling(seed: u64, level: Level) -> Check {
    const NAME: &str = "distance_symmetry_sampling";
    let samples = match level {
        Level::Full => 400,
        Level::Fast => 80,
    };
    let configs = [
        (Kappa::Flat, 0.5, 2.0),
        (Kappa::Spherical, 0.3, 1.2),
        (Kappa::Hyperbolic, 0.7, 2.0),
    ];
    let run = || -> steklov_core::Result<bool> {
        for (i, &(kappa, d, r2)) in configs.iter().enumerate() {
            if !axis_symmetry_check(kappa, d, r2, samples, seed.wrapping_add(i as u64))? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match run() {
        Ok(pass) => Check::new(
            NAME,
            pass,
            format!("{samples} samples per curvature, tolerance 1e-10"),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// Directional cap measures of the displaced ball are ordered.
pub fn check_cap_measure_comparison(_seed: u64, level: Level) -> Check {
    const NAME: &str = "cap_measure_comparison";
    let s_fracs: &[f64] = match level {
        Level::Full => &[0.25, 0.5, 0.75, 1.0],
        Level::Fast => &[0.5, 1.0],
    };
    let run = || -> steklov_core::Result<(usize, bool)> {
        let mut count = 0;
        for m in [2u32, 3] {
            let space = ModelSpace::sphere(m)?;
            for r2 in [1.0, 1.3] {
                for d_frac in [0.2, 0.45] {
                    let d = d_frac * r2;
                    for &sf in s_fracs {
                        let s = sf * d;
                        let (_, _, ok) = cap_measure_compare(space, r2, d, s)?;
                        if !ok {
                            return Ok((count, false));
                        }
                        count += 1;
                    }
                }
            }
        }
        Ok((count, true))
    };
    match run() {
        Ok((count, pass)) => Check::new(NAME, pass, format!("{count} admissible (R2, d, s) triples")),
        Err(e) => Check::failed(NAME, e),
    }
}

/// The density is strictly larger past the outer radius than short of it,
/// for every compact family.
pub fn check_density_asymmetry(_seed: u64, level: Level) -> Check {
    const NAME: &str = "density_asymmetry";
    let grid_points = match level {
        Level::Full => 100,
        Level::Fast => 25,
    };
    let spaces: Vec<(ModelSpace, f64)> = vec![
        (ModelSpace::sphere(2).unwrap(), 1.3),
        (ModelSpace::sphere(3).unwrap(), 1.3),
        (ModelSpace::sphere(4).unwrap(), 1.3),
        (ModelSpace::sphere(5).unwrap(), 1.3),
        (ModelSpace::real_projective(3).unwrap(), 0.7),
        (ModelSpace::new(Family::ComplexProjective, 2).unwrap(), 0.7),
        (ModelSpace::new(Family::ComplexProjective, 3).unwrap(), 0.7),
        (ModelSpace::new(Family::QuaternionicProjective, 2).unwrap(), 0.7),
        (ModelSpace::new(Family::OctonionicProjective, 2).unwrap(), 0.7),
    ];
    let count = spaces.len();
    let run = || -> steklov_core::Result<bool> {
        for (space, r2) in spaces {
            let grid: Vec<f64> = (1..=grid_points)
                .map(|i| r2 * i as f64 / (grid_points + 1) as f64)
                .collect();
            if !density_asymmetry(space, r2, &grid)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match run() {
        Ok(pass) => Check::new(
            NAME,
            pass,
            format!("{count} compact families, {grid_points}-point offset grids"),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// The radial mode has the smallest eigenvalue, and the planar-shell mode
/// eigenvalues match the power-law oracle.
pub fn check_mode_ordering(_seed: u64, level: Level) -> Check {
    const NAME: &str = "mode_ordering";
    let l_max = 5;
    let configs = [
        (ModelSpace::euclidean(2).unwrap(), 1.0, 2.0),
        (ModelSpace::euclidean(3).unwrap(), 1.0, 2.0),
        (ModelSpace::sphere(2).unwrap(), 0.3, 1.2),
        (ModelSpace::sphere(3).unwrap(), 0.2, 1.1),
        (ModelSpace::real_projective(3).unwrap(), 0.15, 0.7),
        (ModelSpace::real_hyperbolic(2).unwrap(), 0.5, 2.0),
        (ModelSpace::real_hyperbolic(3).unwrap(), 0.4, 1.4),
    ];
    let configs: &[(ModelSpace, f64, f64)] = match level {
        Level::Full => &configs,
        Level::Fast => &configs[..3],
    };
    let run = || -> steklov_core::Result<(bool, f64)> {
        let mut ordered = true;
        for &(space, r1, r2) in configs {
            let (table, ok) = mode_ordering_check(space, r1, r2, l_max, None)?;
            // The computed eigenvalues are strictly increasing in l across
            // the whole table, not just above the radial mode.
            ordered &= ok && table.windows(2).all(|w| w[0].1 < w[1].1);
        }
        // Pinned oracle: R^3 shell with R1 = 1, R2 = 2.
        let e3 = ModelSpace::euclidean(3).unwrap();
        let mut worst = 0.0_f64;
        for (l, exact) in [(0u32, 0.5), (1, 5.0 / 7.0), (2, 67.0 / 62.0)] {
            let got = radial_mode(e3, 1.0, 2.0, l, None)?.steklov_eigenvalue();
            worst = worst.max(((got - exact) / exact).abs());
        }
        Ok((ordered, worst))
    };
    match run() {
        Ok((ordered, worst)) => Check::new(
            NAME,
            ordered && worst < 1e-8,
            format!(
                "{} configurations ordered through l = {l_max}; oracle max rel err {}",
                configs.len(),
                fmt17(worst)
            ),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

fn mps_cfg(level: Level) -> MpsConfig {
    match level {
        Level::Full => MpsConfig::default(),
        Level::Fast => MpsConfig {
            basis_order: 10,
            scan_points: 80,
            ..Default::default()
        },
    }
}

/// The collocation solver reproduces the logarithmic concentric eigenvalue.
pub fn check_mps_concentric_recovery(_seed: u64, level: Level) -> Check {
    const NAME: &str = "mps_concentric_recovery";
    let cfg = mps_cfg(level);
    let pairs: &[(f64, f64)] = match level {
        Level::Full => &[(1.0, 2.0), (0.5, 1.0), (1.0, 3.0), (0.3, 1.1), (2.0, 5.0)],
        Level::Fast => &[(1.0, 2.0), (0.5, 1.0)],
    };
    let run = || -> steklov_core::Result<f64> {
        let mut worst = 0.0_f64;
        for &(r1, r2) in pairs {
            let exact = 1.0 / (r2 * (r2 / r1).ln());
            let got = solve_eccentric(r1, r2, 0.0, &cfg)?.sigma;
            worst = worst.max((got - exact).abs());
        }
        Ok(worst)
    };
    match run() {
        Ok(worst) => Check::new(
            NAME,
            worst < 1e-6,
            format!("{} radius pairs, max |error| {}", pairs.len(), fmt17(worst)),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// The solver's eigenvalue sits below the Rayleigh bound at every
/// displacement and below its own concentric value.
pub fn check_mps_upper_bound_sandwich(_seed: u64, level: Level) -> Check {
    const NAME: &str = "mps_upper_bound_sandwich";
    let cfg = mps_cfg(level);
    let quad = quad_cfg();
    let displacements: &[f64] = match level {
        Level::Full => &[0.1, 0.3, 0.5],
        Level::Fast => &[0.3],
    };
    let space = ModelSpace::euclidean(2).unwrap();
    let (r1, r2) = (1.0, 2.0);
    let run = || -> steklov_core::Result<(bool, f64)> {
        let conc = solve_eccentric(r1, r2, 0.0, &cfg)?.sigma;
        let mut pass = true;
        let mut slack = f64::INFINITY;
        for &d in displacements {
            let sigma = solve_eccentric(r1, r2, d, &cfg)?.sigma;
            let g = ShellGeometry::new(space, r1, r2, d)?;
            let q = rayleigh_quotient(&g, &quad)?.quotient;
            pass &= sigma <= q + 1e-6 && sigma < conc;
            slack = slack.min(q - sigma);
        }
        Ok((pass, slack))
    };
    match run() {
        Ok((pass, slack)) => Check::new(
            NAME,
            pass,
            format!(
                "{} displacements, min slack Q(d) - sigma(d) = {}",
                displacements.len(),
                fmt17(slack)
            ),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// Doubling the basis does not move the eigenvalue.
pub fn check_mps_self_convergence(_seed: u64, level: Level) -> Check {
    const NAME: &str = "mps_self_convergence";
    let ((n_lo, n_hi), tol) = match level {
        Level::Full => ((16, 32), 1e-7),
        Level::Fast => ((10, 16), 1e-6),
    };
    let run = || -> steklov_core::Result<f64> {
        let lo = solve_eccentric(
            1.0,
            2.0,
            0.5,
            &MpsConfig {
                basis_order: n_lo,
                ..Default::default()
            },
        )?
        .sigma;
        let hi = solve_eccentric(
            1.0,
            2.0,
            0.5,
            &MpsConfig {
                basis_order: n_hi,
                ..Default::default()
            },
        )?
        .sigma;
        Ok((hi - lo).abs())
    };
    match run() {
        Ok(diff) => Check::new(
            NAME,
            diff < tol,
            format!("|sigma(N={n_hi}) - sigma(N={n_lo})| = {}", fmt17(diff)),
        ),
        Err(e) => Check::failed(NAME, e),
    }
}

/// Runs every check in report order.
pub fn run_all(seed: u64, level: Level) -> Vec<Check> {
    vec![
        check_sigma1_closed_forms(seed, level),
        check_rayleigh_matches_concentric(seed, level),
        check_boundary_measure_change(seed, level),
        check_denominator_monotone(seed, level),
        check_numerator_max_at_concentric(seed, level),
        check_quotient_max_at_concentric(seed, level),
        check_shell_force_balance(seed, level),
        check_acute_angle_sampling(seed, level),
        check_distance_symmetry_sampling(seed, level),
        check_cap_measure_comparison(seed, level),
        check_density_asymmetry(seed, level),
        check_mode_ordering(seed, level),
        check_mps_concentric_recovery(seed, level),
        check_mps_upper_bound_sandwich(seed, level),
        check_mps_self_convergence(seed, level),
    ]
}

/// Renders the report; one line per check plus a summary line.
pub fn render_text(checks: &[Check], seed: u64, level: Level) -> String {
    let mut out = String::new();
    for c in checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {} ({})\n", c.name, c.detail));
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let mode = match level {
        Level::Fast => "fast",
        Level::Full => "full",
    };
    out.push_str(&format!(
        "verify: {passed}/{} checks passed (seed {seed}, {mode})\n",
        checks.len()
    ));
    out
}

/// Renders the report as a JSON array.
pub fn render_json(checks: &[Check], seed: u64, level: Level) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"seed\": {seed},\n"));
    out.push_str(&format!(
        "  \"level\": \"{}\",\n",
        match level {
            Level::Fast => "fast",
            Level::Full => "full",
        }
    ));
    out.push_str("  \"checks\": [\n");
    for (i, c) in checks.iter().enumerate() {
        let comma = if i + 1 < checks.len() { "," } else { "" };
        out.push_str(&format!(
            "    {{\"name\": \"{}\", \"pass\": {}, \"detail\": \"{}\"}}{comma}\n",
            c.name,
            c.pass,
            c.detail.replace('"', "\\\"")
        ));
    }
    out.push_str("  ],\n");
    let passed = checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!("  \"passed\": {passed},\n"));
    out.push_str(&format!("  \"total\": {}\n", checks.len()));
    out.push_str("}\n");
    out
}
