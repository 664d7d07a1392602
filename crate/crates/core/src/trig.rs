//! Triangle kernel for the three constant-curvature space forms.
//!
//! Side/angle conventions: a triangle has vertices `P`, `Q`, `R` and side
//! lengths `p`, `q`, `r` opposite the same-named vertex, so the angle at `P`
//! sits between the sides `q` and `r`. All angles are Riemannian angles in
//! `[0, pi]`.
//!
//! Shared axis convention for two-center configurations (centers `C`, `C'`):
//! the polar angle `theta` at `C` is measured from the ray `C -> C'`, and the
//! polar angle `psi` at `C'` is measured from the ray `C' -> C`. Every module
//! in this crate uses these conventions.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Curvature sign of a space form: `-1`, `0`, or `+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kappa {
    Hyperbolic,
    Flat,
    Spherical,
}

impl Kappa {
    pub fn sign(self) -> i8 {
        match self {
            Kappa::Hyperbolic => -1,
            Kappa::Flat => 0,
            Kappa::Spherical => 1,
        }
    }
}

fn check_side(kappa: Kappa, name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::Domain(format!("side {name} must be positive, got {v}")));
    }
    if kappa == Kappa::Spherical && v >= PI {
        return Err(Error::Domain(format!(
            "side {name} must be below pi on the sphere, got {v}"
        )));
    }
    Ok(())
}

fn check_angle(name: &str, v: f64) -> Result<()> {
    if !(0.0..=PI).contains(&v) {
        return Err(Error::Domain(format!("angle {name} must lie in [0, pi], got {v}")));
    }
    Ok(())
}

/// Side opposite the vertex `P` from the two adjacent sides `q`, `r` and the
/// included angle `lambda_p` (the SAS data at `P`), by the curvature-`kappa`
/// law of cosines. Collinear inputs (`lambda_p` of `0` or `pi`) reproduce
/// `|q - r|` and `q + r` exactly.
pub fn side_from_sas(kappa: Kappa, q: f64, r: f64, lambda_p: f64) -> Result<f64> {
    check_side(kappa, "q", q)?;
    check_side(kappa, "r", r)?;
    check_angle("lambda_p", lambda_p)?;
    if lambda_p == 0.0 {
        return Ok((q - r).abs());
    }
    if lambda_p == PI {
        let sum = q + r;
        return Ok(if kappa == Kappa::Spherical && sum > PI {
            2.0 * PI - sum
        } else {
            sum
        });
    }
    let cl = lambda_p.cos();
    Ok(match kappa {
        Kappa::Flat => (q * q + r * r - 2.0 * q * r * cl).max(0.0).sqrt(),
        Kappa::Spherical => {
            let c = q.cos() * r.cos() + q.sin() * r.sin() * cl;
            c.clamp(-1.0, 1.0).acos()
        }
        Kappa::Hyperbolic => {
            let c = q.cosh() * r.cosh() - q.sinh() * r.sinh() * cl;
            c.max(1.0).acosh()
        }
    })
}

/// Angle at the vertex opposite side `p`, from the three sides (SSS data).
/// Violations of the curvature-`kappa` triangle inequality beyond roundoff
/// are rejected.
pub fn angle_from_sss(kappa: Kappa, p: f64, q: f64, r: f64) -> Result<f64> {
    check_side(kappa, "p", p)?;
    check_side(kappa, "q", q)?;
    check_side(kappa, "r", r)?;
    let c = match kappa {
        Kappa::Flat => (q * q + r * r - p * p) / (2.0 * q * r),
        Kappa::Spherical => (p.cos() - q.cos() * r.cos()) / (q.sin() * r.sin()),
        Kappa::Hyperbolic => (q.cosh() * r.cosh() - p.cosh()) / (q.sinh() * r.sinh()),
    };
    if c.abs() > 1.0 + 1e-9 {
        return Err(Error::TriangleInequality { p, q, r });
    }
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// A geodesic triangle with all sides and angles resolved.
#[derive(Clone, Copy, Debug)]
pub struct Triangle {
    pub kappa: Kappa,
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub lambda_p: f64,
    pub lambda_q: f64,
    pub lambda_r: f64,
}

impl Triangle {
    pub fn from_sides(kappa: Kappa, p: f64, q: f64, r: f64) -> Result<Self> {
        Ok(Self {
            kappa,
            p,
            q,
            r,
            lambda_p: angle_from_sss(kappa, p, q, r)?,
            lambda_q: angle_from_sss(kappa, q, r, p)?,
            lambda_r: angle_from_sss(kappa, r, p, q)?,
        })
    }

    pub fn from_sas(kappa: Kappa, q: f64, r: f64, lambda_p: f64) -> Result<Self> {
        let p = side_from_sas(kappa, q, r, lambda_p)?;
        Self::from_sides(kappa, p, q, r)
    }

    /// Largest defect of the law of cosines over the three vertices; a
    /// consistency diagnostic for externally supplied data.
    pub fn law_of_cosines_residual(&self) -> f64 {
        let per = |p: f64, q: f64, r: f64, lam: f64| -> f64 {
            match self.kappa {
                Kappa::Flat => (p * p - (q * q + r * r - 2.0 * q * r * lam.cos())).abs(),
                Kappa::Spherical => (p.cos() - (q.cos() * r.cos() + q.sin() * r.sin() * lam.cos())).abs(),
                Kappa::Hyperbolic => {
                    (p.cosh() - (q.cosh() * r.cosh() - q.sinh() * r.sinh() * lam.cos())).abs()
                }
            }
        };
        per(self.p, self.q, self.r, self.lambda_p)
            .max(per(self.q, self.r, self.p, self.lambda_q))
            .max(per(self.r, self.p, self.q, self.lambda_r))
    }
}

/// Distance from `C` to the boundary point of the radius-`R2` ball about
/// `C'` in the direction making angle `theta` with the ray `C -> C'`, where
/// `d = |CC'|`. This is the unique `rho > 0` whose SAS triangle
/// `(d, rho, theta)` has opposite side `R2`; it satisfies
/// `rho(0) = R2 + d` and `rho(pi) = R2 - d`.
///
/// Solved in closed form per curvature: a quadratic for `kappa = 0`, the
/// reduction of `A cos(rho) + B sin(rho) = C` (resp. `cosh`/`sinh`) to
/// amplitude-phase form for `kappa = +-1`. A bisection fallback guards the
/// rare ill-conditioned case, detected by the law-of-cosines residual.
pub fn boundary_distance(kappa: Kappa, d: f64, r2: f64, theta: f64) -> Result<f64> {
    if !(d >= 0.0) || !d.is_finite() {
        return Err(Error::Domain(format!("displacement d must be nonnegative, got {d}")));
    }
    check_side(kappa, "R2", r2)?;
    if d >= r2 {
        return Err(Error::Domain(format!("need d < R2, got d={d}, R2={r2}")));
    }
    if kappa == Kappa::Spherical && r2 >= FRAC_PI_2 {
        return Err(Error::Domain(format!("need R2 < pi/2 on the sphere, got {r2}")));
    }
    check_angle("theta", theta)?;
    if d == 0.0 {
        return Ok(r2);
    }
    if theta == 0.0 {
        return Ok(r2 + d);
    }
    if theta == PI {
        return Ok(r2 - d);
    }

    let ct = theta.cos();
    let rho = match kappa {
        Kappa::Flat => d * ct + (r2 * r2 - d * d * (1.0 - ct * ct)).max(0.0).sqrt(),
        Kappa::Spherical => {
            // cos(R2) = cos(d) cos(rho) + sin(d) cos(theta) sin(rho)
            let a = d.cos();
            let b = d.sin() * ct;
            let amp = (a * a + b * b).sqrt();
            let phase = b.atan2(a);
            phase + (r2.cos() / amp).clamp(-1.0, 1.0).acos()
        }
        Kappa::Hyperbolic => {
            // cosh(R2) = cosh(d) cosh(rho) - sinh(d) cos(theta) sinh(rho)
            let a = d.cosh();
            let b = d.sinh() * ct;
            let amp = (a * a - b * b).sqrt();
            let phase = (b / a).atanh();
            phase + (r2.cosh() / amp).max(1.0).acosh()
        }
    };

    let residual = (side_from_sas(kappa, d, rho.max(1e-300), theta)? - r2).abs();
    if residual <= 1e-9 * r2.max(1.0) {
        return Ok(rho);
    }
    bisect_boundary_distance(kappa, d, r2, theta)
}

fn bisect_boundary_distance(kappa: Kappa, d: f64, r2: f64, theta: f64) -> Result<f64> {
    // The target rho always lies in [R2 - d, R2 + d].
    let mut lo = (r2 - d).max(1e-12);
    let mut hi = r2 + d;
    let g = |rho: f64| -> Result<f64> { Ok(side_from_sas(kappa, d, rho, theta)? - r2) };
    let mut glo = g(lo)?;
    let ghi = g(hi)?;
    if glo == 0.0 {
        return Ok(lo);
    }
    if ghi == 0.0 {
        return Ok(hi);
    }
    if glo * ghi > 0.0 {
        return Err(Error::RootFind(format!(
            "no sign change on [{lo}, {hi}] for d={d}, R2={r2}, theta={theta}: g(lo)={glo}, g(hi)={ghi}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo < 1e-15 * r2.max(1.0) {
            return Ok(mid);
        }
        let gm = g(mid)?;
        if gm == 0.0 {
            return Ok(mid);
        }
        if glo * gm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Samples triangles with `p <= q` under each curvature's admissible radius
/// bounds and checks that the angle opposite the not-larger side is acute.
/// Returns `true` iff every sample satisfies `lambda(P) < pi/2`.
pub fn acute_opposite_angle_check(kappa: Kappa, sample_count: usize, seed: u64) -> Result<bool> {
    if sample_count < 1 {
        return Err(Error::Domain("sample_count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q_hi = match kappa {
        Kappa::Spherical => FRAC_PI_2 - 1e-6,
        _ => 3.0,
    };
    for _ in 0..sample_count {
        let q: f64 = rng.gen_range(0.05..q_hi);
        let p: f64 = q * rng.gen_range(0.02..=1.0);
        // r stays inside the open triangle-inequality interval (q-p, q+p).
        let u: f64 = rng.gen_range(1e-3..(1.0 - 1e-3));
        let r = (q - p) + 2.0 * p * u;
        let lambda_p = angle_from_sss(kappa, p, q, r.max(1e-9))?;
        if lambda_p >= FRAC_PI_2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a point `X` at distance `d` from the center `C'` of a radius-`R2`
/// ball, samples boundary points `P` with angle `alpha` at `X` between
/// `X -> P` and `X -> C'` in `[0, pi/2]` and checks, within `1e-10`, that
///
/// * the triangle angle at `P` is acute,
/// * the distance is symmetric across the axis (exact in this
///   parametrization),
/// * `|XP| >= |X(-P)|` with equality only in the perpendicular direction
///   `alpha = pi/2`.
pub fn axis_symmetry_check(
    kappa: Kappa,
    d: f64,
    r2: f64,
    sample_count: usize,
    seed: u64,
) -> Result<bool> {
    if sample_count < 1 {
        return Err(Error::Domain("sample_count must be at least 1".into()));
    }
    if d == 0.0 {
        // Concentric: r_X is constant, every statement holds trivially.
        return Ok(true);
    }
    let tol = 1e-10;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alphas: Vec<f64> = (0..sample_count.saturating_sub(1))
        .map(|_| rng.gen_range(0.0..FRAC_PI_2))
        .collect();
    alphas.push(FRAC_PI_2);
    for alpha in alphas {
        let fwd = boundary_distance(kappa, d, r2, alpha)?;
        let bwd = boundary_distance(kappa, d, r2, PI - alpha)?;
        let mirrored = boundary_distance(kappa, d, r2, alpha)?;
        if (fwd - mirrored).abs() > tol {
            return Ok(false);
        }
        if alpha > 1e-12 {
            let lambda_p = angle_from_sss(kappa, d, fwd, r2)?;
            if lambda_p >= FRAC_PI_2 + tol {
                return Ok(false);
            }
        }
        if (alpha - FRAC_PI_2).abs() < 1e-12 {
            if (fwd - bwd).abs() > tol {
                return Ok(false);
            }
        } else if fwd <= bwd {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sas_examples() {
        assert_relative_eq!(
            side_from_sas(Kappa::Flat, 3.0, 4.0, FRAC_PI_2).unwrap(),
            5.0,
            max_relative = 1e-15
        );
        // Octant triangle on the sphere.
        assert_relative_eq!(
            side_from_sas(Kappa::Spherical, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap(),
            FRAC_PI_2,
            max_relative = 1e-15
        );
        // Hyperbolic SAS cross-checked against the hyperboloid model: two
        // points at distance 1 from the apex with angle pi/3 between them.
        let apex_a = (1.0_f64.cosh(), 1.0_f64.sinh(), 0.0);
        let c3 = (PI / 3.0).cos();
        let s3 = (PI / 3.0).sin();
        let apex_b = (1.0_f64.cosh(), 1.0_f64.sinh() * c3, 1.0_f64.sinh() * s3);
        let minkowski = apex_a.0 * apex_b.0 - apex_a.1 * apex_b.1 - apex_a.2 * apex_b.2;
        let embedded = minkowski.acosh();
        assert_relative_eq!(
            side_from_sas(Kappa::Hyperbolic, 1.0, 1.0, PI / 3.0).unwrap(),
            embedded,
            max_relative = 1e-14
        );
    }

    #[test]
    fn sas_collinear_is_exact() {
        assert_eq!(side_from_sas(Kappa::Hyperbolic, 1.25, 0.5, 0.0).unwrap(), 0.75);
        assert_eq!(side_from_sas(Kappa::Spherical, 1.0, 0.5, PI).unwrap(), 1.5);
        assert_eq!(side_from_sas(Kappa::Flat, 2.0, 3.0, PI).unwrap(), 5.0);
    }

    #[test]
    fn sss_examples() {
        assert_relative_eq!(
            angle_from_sss(Kappa::Flat, 5.0, 3.0, 4.0).unwrap(),
            FRAC_PI_2,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            angle_from_sss(Kappa::Flat, 1.0, 1.0, 1.0).unwrap(),
            PI / 3.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            angle_from_sss(Kappa::Spherical, FRAC_PI_2, FRAC_PI_2, FRAC_PI_2).unwrap(),
            FRAC_PI_2,
            max_relative = 1e-15
        );
        assert!(matches!(
            angle_from_sss(Kappa::Flat, 10.0, 1.0, 2.0),
            Err(Error::TriangleInequality { .. })
        ));
    }

    #[test]
    fn triangle_construction() {
        let t = Triangle::from_sas(Kappa::Spherical, 0.8, 0.6, 1.1).unwrap();
        assert!(t.law_of_cosines_residual() < 1e-10);
        let t = Triangle::from_sides(Kappa::Hyperbolic, 1.0, 1.2, 0.7).unwrap();
        assert!(t.law_of_cosines_residual() < 1e-10);
    }

    #[test]
    fn boundary_distance_examples() {
        // Concentric and collinear cases are exact.
        assert_eq!(boundary_distance(Kappa::Spherical, 0.0, 1.2, 0.3).unwrap(), 1.2);
        assert_eq!(boundary_distance(Kappa::Flat, 0.5, 2.0, 0.0).unwrap(), 2.5);
        assert_eq!(boundary_distance(Kappa::Hyperbolic, 0.5, 2.0, PI).unwrap(), 1.5);
        // Euclidean right-angle case: sqrt(R2^2 - d^2).
        assert_relative_eq!(
            boundary_distance(Kappa::Flat, 0.5, 2.0, FRAC_PI_2).unwrap(),
            3.75_f64.sqrt(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn boundary_distance_satisfies_defining_identity() {
        for &kappa in &[Kappa::Flat, Kappa::Spherical, Kappa::Hyperbolic] {
            let r2 = if kappa == Kappa::Spherical { 1.3 } else { 2.0 };
            for &d in &[1e-8, 0.1, 0.45, 0.9 * r2] {
                for i in 0..=40 {
                    let theta = PI * i as f64 / 40.0;
                    let rho = boundary_distance(kappa, d, r2, theta).unwrap();
                    let back = side_from_sas(kappa, d, rho.max(1e-300), theta).unwrap();
                    assert!(
                        (back - r2).abs() < 1e-10,
                        "kappa={kappa:?} d={d} theta={theta}: rho={rho} back={back}"
                    );
                }
            }
        }
    }

    #[test]
    fn boundary_distance_monotone_on_the_sphere() {
        // Convexity of the ball: rho decreases as theta sweeps from the far
        // axis point to the near one.
        let (d, r2) = (0.4, 1.3);
        let mut prev = boundary_distance(Kappa::Spherical, d, r2, 0.0).unwrap();
        for i in 1..=80 {
            let theta = PI * i as f64 / 80.0;
            let rho = boundary_distance(Kappa::Spherical, d, r2, theta).unwrap();
            assert!(rho < prev, "theta={theta}: {rho} !< {prev}");
            prev = rho;
        }
    }

    #[test]
    fn acute_angle_sampling_all_curvatures() {
        for &kappa in &[Kappa::Flat, Kappa::Spherical, Kappa::Hyperbolic] {
            assert!(acute_opposite_angle_check(kappa, 10_000, 42).unwrap(), "{kappa:?}");
        }
    }

    #[test]
    fn axis_symmetry_sampling() {
        assert!(axis_symmetry_check(Kappa::Flat, 0.5, 2.0, 200, 7).unwrap());
        assert!(axis_symmetry_check(Kappa::Spherical, 0.3, 1.2, 200, 7).unwrap());
        assert!(axis_symmetry_check(Kappa::Hyperbolic, 0.7, 2.0, 200, 7).unwrap());
        assert!(axis_symmetry_check(Kappa::Flat, 0.0, 2.0, 10, 7).unwrap());
    }

    #[test]
    fn far_axis_point_dominates_near_one() {
        // Collinear boundary points: R2 + d on one side, R2 - d on the other.
        let fwd = boundary_distance(Kappa::Flat, 0.5, 2.0, 0.0).unwrap();
        let bwd = boundary_distance(Kappa::Flat, 0.5, 2.0, PI).unwrap();
        assert_eq!(fwd, 2.5);
        assert_eq!(bwd, 1.5);
    }
}
