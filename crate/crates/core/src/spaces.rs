//! Two-point homogeneous model spaces.
//!
//! Every space here is either a Euclidean space or a rank-one symmetric
//! space, normalized so that the sectional curvature lies in `[1, 4]`
//! (compact case), `[-4, -1]` (noncompact case), or is zero. A space is
//! described by its real dimension `m`, the field dimension
//! `k = dim_R(K) in {1, 2, 4, 8}`, the metric generators `s(r)` and `c(r)`,
//! and its injectivity radius. The radial volume density in geodesic polar
//! coordinates is
//!
//! ```text
//! omega(r) = s(r)^(m-1) * c(r)^(k-1)
//! ```
//!
//! with `s = sin` (compact), `sinh` (noncompact), or the identity
//! (Euclidean), and `c = cos`, `cosh`, or `1` correspondingly. For `k = 1`
//! the `c` factor is absent.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::trig::Kappa;

/// The ten families of two-point homogeneous spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Euclidean,
    Sphere,
    RealProjective,
    ComplexProjective,
    QuaternionicProjective,
    OctonionicProjective,
    RealHyperbolic,
    ComplexHyperbolic,
    QuaternionicHyperbolic,
    OctonionicHyperbolic,
}

impl Family {
    /// Field dimension `k = dim_R(K)`.
    pub fn field_dim(self) -> u32 {
        use Family::*;
        match self {
            Euclidean | Sphere | RealProjective | RealHyperbolic => 1,
            ComplexProjective | ComplexHyperbolic => 2,
            QuaternionicProjective | QuaternionicHyperbolic => 4,
            OctonionicProjective | OctonionicHyperbolic => 8,
        }
    }

    pub fn is_compact(self) -> bool {
        use Family::*;
        matches!(
            self,
            Sphere | RealProjective | ComplexProjective | QuaternionicProjective | OctonionicProjective
        )
    }

    pub fn is_projective(self) -> bool {
        use Family::*;
        matches!(
            self,
            RealProjective | ComplexProjective | QuaternionicProjective | OctonionicProjective
        )
    }

    /// Short name used on the command line and in CSV output.
    pub fn cli_name(self) -> &'static str {
        use Family::*;
        match self {
            Euclidean => "euclidean",
            Sphere => "sphere",
            RealProjective => "rp",
            ComplexProjective => "cp",
            QuaternionicProjective => "hp",
            OctonionicProjective => "op2",
            RealHyperbolic => "rh",
            ComplexHyperbolic => "ch",
            QuaternionicHyperbolic => "hh",
            OctonionicHyperbolic => "oh2",
        }
    }

    /// Case-insensitive inverse of [`cli_name`](Self::cli_name).
    pub fn from_cli_name(name: &str) -> Option<Self> {
        use Family::*;
        match name.to_ascii_lowercase().as_str() {
            "euclidean" => Some(Euclidean),
            "sphere" => Some(Sphere),
            "rp" => Some(RealProjective),
            "cp" => Some(ComplexProjective),
            "hp" => Some(QuaternionicProjective),
            "op2" => Some(OctonionicProjective),
            "rh" => Some(RealHyperbolic),
            "ch" => Some(ComplexHyperbolic),
            "hh" => Some(QuaternionicHyperbolic),
            "oh2" => Some(OctonionicHyperbolic),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

/// A radius bound that may be infinite. Euclidean and hyperbolic spaces have
/// unbounded injectivity radius; representing that with a dedicated variant
/// keeps radius preconditions exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Extent {
    Finite(f64),
    Infinite,
}

impl Extent {
    /// Whether `r` lies strictly below the bound.
    pub fn admits(self, r: f64) -> bool {
        match self {
            Extent::Finite(v) => r < v,
            Extent::Infinite => true,
        }
    }

    pub fn halved(self) -> Extent {
        match self {
            Extent::Finite(v) => Extent::Finite(0.5 * v),
            Extent::Infinite => Extent::Infinite,
        }
    }

    pub fn as_f64(self) -> f64 {
        match self {
            Extent::Finite(v) => v,
            Extent::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => f.write_str("inf"),
        }
    }
}

/// One space from the classification table, with its dimension data resolved.
///
/// `n` is the rank parameter: the real dimension for `Euclidean` and
/// `Sphere`, the projective/hyperbolic dimension over the field otherwise.
/// The real dimension is `m = n * k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelSpace {
    family: Family,
    n: u32,
    m: u32,
    k: u32,
}

impl ModelSpace {
    pub fn new(family: Family, n: u32) -> Result<Self> {
        use Family::*;
        let k = family.field_dim();
        match family {
            Euclidean | Sphere | RealProjective | RealHyperbolic => {
                if n < 2 {
                    return Err(Error::Domain(format!(
                        "{family} needs dimension >= 2, got {n}"
                    )));
                }
            }
            OctonionicProjective | OctonionicHyperbolic => {
                if n != 2 {
                    return Err(Error::Domain(format!(
                        "{family} exists only for n = 2, got {n}"
                    )));
                }
            }
            _ => {
                if n < 2 {
                    return Err(Error::Domain(format!("{family} needs n >= 2, got {n}")));
                }
            }
        }
        Ok(Self { family, n, m: n * k, k })
    }

    pub fn euclidean(m: u32) -> Result<Self> {
        Self::new(Family::Euclidean, m)
    }

    pub fn sphere(m: u32) -> Result<Self> {
        Self::new(Family::Sphere, m)
    }

    pub fn real_projective(n: u32) -> Result<Self> {
        Self::new(Family::RealProjective, n)
    }

    pub fn real_hyperbolic(n: u32) -> Result<Self> {
        Self::new(Family::RealHyperbolic, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Rank parameter from the classification table.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Real dimension.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field dimension.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Injectivity radius: `pi` for the sphere, `pi/2` for the projective
    /// families, unbounded otherwise.
    pub fn injectivity_radius(&self) -> Extent {
        if self.family == Family::Sphere {
            Extent::Finite(PI)
        } else if self.family.is_projective() {
            Extent::Finite(0.5 * PI)
        } else {
            Extent::Infinite
        }
    }

    /// Largest admissible outer-ball radius, `inj/2`.
    pub fn max_outer_radius(&self) -> Extent {
        self.injectivity_radius().halved()
    }

    /// Constant-curvature sign for the `k = 1` families; `None` when the
    /// geodesic spheres are not round (k > 1) and the scalar triangle kernel
    /// does not apply.
    pub fn kappa(&self) -> Option<Kappa> {
        use Family::*;
        match self.family {
            Euclidean => Some(Kappa::Flat),
            Sphere | RealProjective => Some(Kappa::Spherical),
            RealHyperbolic => Some(Kappa::Hyperbolic),
            _ => None,
        }
    }

    fn s(&self, r: f64) -> f64 {
        if self.family == Family::Euclidean {
            r
        } else if self.family.is_compact() {
            r.sin()
        } else {
            r.sinh()
        }
    }

    fn s_prime(&self, r: f64) -> f64 {
        if self.family == Family::Euclidean {
            1.0
        } else if self.family.is_compact() {
            r.cos()
        } else {
            r.cosh()
        }
    }

    fn c(&self, r: f64) -> f64 {
        if self.family.is_compact() {
            r.cos()
        } else {
            r.cosh()
        }
    }

    fn c_prime(&self, r: f64) -> f64 {
        if self.family.is_compact() {
            -r.sin()
        } else {
            r.sinh()
        }
    }

    fn check_radius(&self, r: f64) -> Result<()> {
        if !(r > 0.0) || !r.is_finite() {
            return Err(Error::Domain(format!("radius must be positive, got {r}")));
        }
        if !self.injectivity_radius().admits(r) {
            return Err(Error::Domain(format!(
                "radius {r} is not below the injectivity radius {} of {}",
                self.injectivity_radius(),
                self.family
            )));
        }
        Ok(())
    }

    /// Radial volume density `omega(r) = s(r)^(m-1) c(r)^(k-1)`.
    pub fn density(&self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        let s = self.s(r).powi(self.m as i32 - 1);
        Ok(if self.k == 1 {
            s
        } else {
            s * self.c(r).powi(self.k as i32 - 1)
        })
    }

    /// Analytic derivative `omega'(r)`.
    pub fn density_derivative(&self, r: f64) -> Result<f64> {
        self.check_radius(r)?;
        let m = self.m as i32;
        let k = self.k as i32;
        let s = self.s(r);
        let sp = self.s_prime(r);
        let term_s = (m - 1) as f64 * s.powi(m - 2) * sp;
        if self.k == 1 {
            Ok(term_s)
        } else {
            let c = self.c(r);
            let cp = self.c_prime(r);
            Ok(term_s * c.powi(k - 1) + (k - 1) as f64 * s.powi(m - 1) * c.powi(k - 2) * cp)
        }
    }

    /// `omega'(r) / omega(r)`, the logarithmic derivative of the density.
    pub fn density_log_derivative(&self, r: f64) -> Result<f64> {
        Ok(self.density_derivative(r)? / self.density(r)?)
    }
}

impl fmt::Display for ModelSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(m={}, k={})", self.family, self.m, self.k)
    }
}

/// Surface measure of the unit `(m-1)`-sphere in `R^m`:
/// `|S^(m-1)| = 2 pi^(m/2) / Gamma(m/2)`.
///
/// `m/2` is an integer or a half-integer, so the Gamma factor is evaluated
/// exactly by the upward recursion from `Gamma(1) = 1` or
/// `Gamma(1/2) = sqrt(pi)`.
pub fn unit_sphere_area(m: u32) -> Result<f64> {
    if m < 1 {
        return Err(Error::Domain(format!("sphere dimension m must be >= 1, got {m}")));
    }
    let (mut gamma, mut x, pi_pow) = if m.is_multiple_of(2) {
        (1.0_f64, 1.0_f64, PI.powi(m as i32 / 2))
    } else {
        (PI.sqrt(), 0.5_f64, PI.powi((m as i32 - 1) / 2) * PI.sqrt())
    };
    while x < 0.5 * m as f64 {
        gamma *= x;
        x += 1.0;
    }
    Ok(2.0 * pi_pow / gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_spaces() -> Vec<ModelSpace> {
        vec![
            ModelSpace::euclidean(2).unwrap(),
            ModelSpace::euclidean(3).unwrap(),
            ModelSpace::sphere(2).unwrap(),
            ModelSpace::sphere(5).unwrap(),
            ModelSpace::real_projective(3).unwrap(),
            ModelSpace::new(Family::ComplexProjective, 2).unwrap(),
            ModelSpace::new(Family::QuaternionicProjective, 2).unwrap(),
            ModelSpace::new(Family::OctonionicProjective, 2).unwrap(),
            ModelSpace::real_hyperbolic(4).unwrap(),
            ModelSpace::new(Family::ComplexHyperbolic, 2).unwrap(),
            ModelSpace::new(Family::QuaternionicHyperbolic, 3).unwrap(),
            ModelSpace::new(Family::OctonionicHyperbolic, 2).unwrap(),
        ]
    }

    #[test]
    fn dimension_table() {
        let cp2 = ModelSpace::new(Family::ComplexProjective, 2).unwrap();
        assert_eq!((cp2.m(), cp2.k()), (4, 2));
        let hp3 = ModelSpace::new(Family::QuaternionicProjective, 3).unwrap();
        assert_eq!((hp3.m(), hp3.k()), (12, 4));
        let op2 = ModelSpace::new(Family::OctonionicProjective, 2).unwrap();
        assert_eq!((op2.m(), op2.k()), (16, 8));
        assert!(ModelSpace::new(Family::OctonionicProjective, 3).is_err());
        assert!(ModelSpace::new(Family::ComplexHyperbolic, 1).is_err());
        assert!(ModelSpace::euclidean(1).is_err());
    }

    #[test]
    fn density_examples() {
        let s3 = ModelSpace::sphere(3).unwrap();
        assert_relative_eq!(s3.density(0.5 * PI).unwrap(), 1.0, max_relative = 1e-15);

        // sin^3(pi/6) cos(pi/6) = sqrt(3)/16
        let cp2 = ModelSpace::new(Family::ComplexProjective, 2).unwrap();
        assert_relative_eq!(
            cp2.density(PI / 6.0).unwrap(),
            3.0_f64.sqrt() / 16.0,
            max_relative = 1e-14
        );

        let e2 = ModelSpace::euclidean(2).unwrap();
        assert_eq!(e2.density(2.0).unwrap(), 2.0);
    }

    #[test]
    fn density_domain_errors() {
        let rp = ModelSpace::real_projective(3).unwrap();
        assert!(rp.density(0.0).is_err());
        assert!(rp.density(-0.1).is_err());
        assert!(rp.density(0.5 * PI).is_err());
        assert!(rp.density(0.5 * PI - 1e-6).is_ok());
        let e3 = ModelSpace::euclidean(3).unwrap();
        assert!(e3.density(1e9).is_ok());
    }

    #[test]
    fn density_derivative_examples() {
        let e3 = ModelSpace::euclidean(3).unwrap();
        assert_eq!(e3.density_derivative(2.0).unwrap(), 4.0);
        let s2 = ModelSpace::sphere(2).unwrap();
        assert_relative_eq!(s2.density_derivative(0.5 * PI).unwrap(), 0.0, epsilon = 1e-16);
    }

    #[test]
    fn density_derivative_matches_finite_differences() {
        // 100 random radii per family; Richardson-extrapolated central
        // differences so the oracle's truncation error stays below the
        // 1e-8 comparison even where the density grows exponentially.
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for space in all_spaces() {
            let hi = match space.injectivity_radius() {
                Extent::Finite(v) => v - 0.05,
                Extent::Infinite => 3.0,
            };
            for _ in 0..100 {
                let r = rng.gen_range(0.05..hi);
                let h = 1e-4 * r.max(0.1);
                let central = |h: f64| {
                    (space.density(r + h).unwrap() - space.density(r - h).unwrap()) / (2.0 * h)
                };
                let fd = (4.0 * central(0.5 * h) - central(h)) / 3.0;
                let exact = space.density_derivative(r).unwrap();
                let scale = exact.abs().max(space.density(r).unwrap());
                assert!(
                    (fd - exact).abs() <= 1e-8 * scale.max(1.0),
                    "{space} r={r}: fd={fd} exact={exact}"
                );
            }
        }
    }

    #[test]
    fn density_positive_and_vanishing_at_origin() {
        for space in all_spaces() {
            let hi = match space.injectivity_radius() {
                Extent::Finite(v) => v - 1e-9,
                Extent::Infinite => 5.0,
            };
            for &r in &[1e-6, 0.1, 0.5 * hi, hi] {
                assert!(space.density(r).unwrap() > 0.0, "{space} at {r}");
            }
            // omega ~ r^(m-1) near zero
            let tiny = space.density(1e-8).unwrap();
            assert!(tiny < 1e-8_f64.powi(space.m() as i32 - 1) * 2.0, "{space}");
        }
    }

    #[test]
    fn sphere_and_projective_share_local_density() {
        let s3 = ModelSpace::sphere(3).unwrap();
        let rp3 = ModelSpace::real_projective(3).unwrap();
        for &r in &[0.1, 0.7, 1.4] {
            assert_eq!(s3.density(r).unwrap(), rp3.density(r).unwrap());
        }
    }

    #[test]
    fn max_outer_radius_table() {
        assert_eq!(
            ModelSpace::sphere(5).unwrap().max_outer_radius(),
            Extent::Finite(0.5 * PI)
        );
        assert_eq!(
            ModelSpace::real_projective(3).unwrap().max_outer_radius(),
            Extent::Finite(0.25 * PI)
        );
        assert_eq!(
            ModelSpace::real_hyperbolic(4).unwrap().max_outer_radius(),
            Extent::Infinite
        );
    }

    #[test]
    fn unit_sphere_areas() {
        assert_relative_eq!(unit_sphere_area(1).unwrap(), 2.0, max_relative = 1e-15);
        assert_relative_eq!(unit_sphere_area(2).unwrap(), 2.0 * PI, max_relative = 1e-15);
        assert_relative_eq!(unit_sphere_area(3).unwrap(), 4.0 * PI, max_relative = 1e-15);
        assert_relative_eq!(unit_sphere_area(4).unwrap(), 2.0 * PI * PI, max_relative = 1e-15);
        assert!(unit_sphere_area(0).is_err());
        // |S^(m-1)| = 2 pi / (m - 2) * |S^(m-3)| for m >= 3
        for m in 3..=12 {
            let expected = 2.0 * PI / (m as f64 - 2.0) * unit_sphere_area(m - 2).unwrap();
            assert_relative_eq!(unit_sphere_area(m).unwrap(), expected, max_relative = 1e-14);
        }
    }

    #[test]
    fn cli_names_round_trip() {
        for space in all_spaces() {
            let name = space.family().cli_name();
            assert_eq!(Family::from_cli_name(name), Some(space.family()));
            assert_eq!(Family::from_cli_name(&name.to_uppercase()), Some(space.family()));
        }
        assert_eq!(Family::from_cli_name("torus"), None);
    }
}
