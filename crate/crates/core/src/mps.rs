//! Eigensolver for the eccentric planar annulus by the method of particular
//! solutions.
//!
//! The domain is the region between a circle of radius `R1` about `C` and a
//! circle of radius `R2` about `C'` at distance `d`, with a Dirichlet zero
//! on the inner circle and the spectral condition `du/dn = sigma u` on the
//! outer one. Trial functions are exact harmonic functions adapted to the
//! two centers:
//!
//! ```text
//! 1,  ln r_C,  r_C^(-j) cos(j theta_C),  r_C'^(j) cos(j theta_C'),  1 <= j <= N
//! ```
//!
//! (cosine-only: the domain is mirror-symmetric about the axis through the
//! centers and the first eigenfunction is simple, hence symmetric, so the
//! odd half of the basis can be dropped). For a trial `sigma` the boundary
//! conditions are collocated on both circles and the smallest singular value
//! of the resulting matrix measures how close `sigma` is to an eigenvalue:
//! the solver scans a bracket, then refines each dip by golden-section.
//!
//! Each basis function is rescaled by a `sigma`-independent factor (the norm
//! of its stacked value and normal-derivative samples). The factor must not
//! depend on `sigma`: when an eigenfunction is a single basis element (the
//! pure `ln r_C` mode of an annulus with `ln R1 = 0`), per-`sigma` column
//! normalization would rescale the vanishing column back to unit size and
//! erase the dip.
//!
//! The default bracket deliberately spans past the second symmetric
//! eigenvalue, so the scan can see several dips; the solver reports the dip
//! at the smallest `sigma` among those that refine significantly below the
//! trace background.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Solver configuration.
#[derive(Clone, Copy, Debug)]
pub struct MpsConfig {
    /// Harmonic orders per center.
    pub basis_order: usize,
    /// Collocation points per basis function per boundary.
    pub collocation_factor: usize,
    /// Scan bracket for `sigma`; `None` selects
    /// `(0.1, 1.5) * sigma_concentric` for the same radii.
    pub sigma_bracket: Option<(f64, f64)>,
    /// Points in the coarse scan.
    pub scan_points: usize,
    /// Width at which golden-section refinement stops.
    pub refine_tol: f64,
}

impl Default for MpsConfig {
    fn default() -> Self {
        Self {
            basis_order: 24,
            collocation_factor: 4,
            sigma_bracket: None,
            scan_points: 200,
            refine_tol: 1e-10,
        }
    }
}

impl MpsConfig {
    pub fn validate(&self) -> Result<()> {
        if self.basis_order < 4 {
            return Err(Error::Domain(format!(
                "basis_order must be at least 4, got {}",
                self.basis_order
            )));
        }
        if self.collocation_factor < 2 {
            return Err(Error::Domain(format!(
                "collocation_factor must be at least 2, got {}",
                self.collocation_factor
            )));
        }
        if self.scan_points < 10 {
            return Err(Error::Domain(format!(
                "scan_points must be at least 10, got {}",
                self.scan_points
            )));
        }
        if !(self.refine_tol > 0.0) {
            return Err(Error::Domain("refine_tol must be positive".into()));
        }
        if let Some((lo, hi)) = self.sigma_bracket {
            if !(0.0 < lo && lo < hi) {
                return Err(Error::Domain(format!(
                    "sigma bracket must satisfy 0 < low < high, got ({lo}, {hi})"
                )));
            }
        }
        Ok(())
    }
}

/// Solver output.
#[derive(Clone, Debug)]
pub struct MpsResult {
    /// Located eigenvalue.
    pub sigma: f64,
    /// Smallest singular value at `sigma` (the dip floor).
    pub min_singular_value: f64,
    /// The coarse scan: `(sigma, smallest singular value)` pairs.
    pub scan_trace: Vec<(f64, f64)>,
    pub basis_order: usize,
    /// Ratio of the largest to smallest basis scaling factor; values above
    /// 1e12 indicate the basis is too large for the geometry.
    pub column_norm_ratio: f64,
}

/// Dense column-major matrix for the in-repo singular value routine.
#[derive(Clone, Debug)]
pub struct DenseMatrix {
    nrows: usize,
    columns: Vec<Vec<f64>>,
}

impl DenseMatrix {
    pub fn from_columns(nrows: usize, columns: Vec<Vec<f64>>) -> Result<Self> {
        if columns.is_empty() || nrows == 0 {
            return Err(Error::Domain("matrix must be nonempty".into()));
        }
        if columns.iter().any(|c| c.len() != nrows) {
            return Err(Error::Domain("ragged columns".into()));
        }
        Ok(Self { nrows, columns })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.columns[j]
    }
}

const MAX_JACOBI_SWEEPS: usize = 64;

/// Smallest singular value by one-sided Jacobi orthogonalization: plane
/// rotations are applied to column pairs until all pairs are orthogonal to
/// working precision; the singular values are then the column norms.
pub fn smallest_singular_value(matrix: &DenseMatrix) -> Result<f64> {
    let (m, n) = (matrix.nrows(), matrix.ncols());
    if m < n {
        return Err(Error::Domain(format!(
            "need rows >= columns, got {m} x {n}"
        )));
    }
    if m > 2000 || n > 500 {
        return Err(Error::Domain(format!("matrix too large: {m} x {n}")));
    }
    if matrix.columns.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::Domain("matrix entries must be finite".into()));
    }
    let mut cols = matrix.columns.clone();
    let mut norms_sq: Vec<f64> = cols.iter().map(|c| dot(c, c)).collect();
    let tol = 1e-14;
    for _ in 0..MAX_JACOBI_SWEEPS {
        // Refresh cached norms once per sweep to stop rounding drift.
        for (j, c) in cols.iter().enumerate() {
            norms_sq[j] = dot(c, c);
        }
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let alpha = norms_sq[p];
                let beta = norms_sq[q];
                let gamma = dot(&cols[p], &cols[q]);
                if gamma.abs() <= tol * (alpha * beta).sqrt() || gamma == 0.0 {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = cols.split_at_mut(q);
                let cp = &mut left[p];
                let cq = &mut right[0];
                for i in 0..m {
                    let vp = cp[i];
                    let vq = cq[i];
                    cp[i] = c * vp - s * vq;
                    cq[i] = s * vp + c * vq;
                }
                norms_sq[p] = alpha * c * c - 2.0 * c * s * gamma + beta * s * s;
                norms_sq[q] = alpha * s * s + 2.0 * c * s * gamma + beta * c * c;
            }
        }
        if !rotated {
            let min_sq = cols.iter().map(|c| dot(c, c)).fold(f64::INFINITY, f64::min);
            return Ok(min_sq.sqrt());
        }
    }
    Err(Error::SvdDidNotConverge(MAX_JACOBI_SWEEPS))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Collocation samples of the trial basis, assembled once per geometry.
/// Rows for trial `sigma` are `u = 0` on the inner circle and
/// `du/dn - sigma u = 0` on the outer one.
struct Collocation {
    inner_vals: Vec<Vec<f64>>,
    outer_vals: Vec<Vec<f64>>,
    outer_dn: Vec<Vec<f64>>,
    scale: Vec<f64>,
    npts: usize,
}

impl Collocation {
    fn new(r1: f64, r2: f64, d: f64, basis_order: usize, collocation_factor: usize) -> Self {
        let nb = 2 + 2 * basis_order;
        let npts = collocation_factor * nb;
        // The basis is even in the angle, so half circles suffice.
        let angles: Vec<f64> = (0..npts)
            .map(|i| std::f64::consts::PI * i as f64 / (npts - 1) as f64)
            .collect();

        let mut inner_vals = vec![vec![0.0; npts]; nb];
        let mut outer_vals = vec![vec![0.0; npts]; nb];
        let mut outer_dn = vec![vec![0.0; npts]; nb];

        for (i, &t) in angles.iter().enumerate() {
            // Inner circle about C = (0, 0); normal derivative not needed.
            let (x, y) = (r1 * t.cos(), r1 * t.sin());
            let vals = basis_values(x, y, d, basis_order);
            for (b, v) in vals.into_iter().enumerate() {
                inner_vals[b][i] = v;
            }

            // Outer circle about C' = (d, 0); outward normal (cos t, sin t).
            let (x, y) = (d + r2 * t.cos(), r2 * t.sin());
            let (nx, ny) = (t.cos(), t.sin());
            let (vals, grads) = basis_values_and_gradients(x, y, d, basis_order);
            for b in 0..nb {
                outer_vals[b][i] = vals[b];
                outer_dn[b][i] = grads[b].0 * nx + grads[b].1 * ny;
            }
        }

        let scale: Vec<f64> = (0..nb)
            .map(|b| {
                let s = dot(&inner_vals[b], &inner_vals[b])
                    + dot(&outer_vals[b], &outer_vals[b])
                    + dot(&outer_dn[b], &outer_dn[b]);
                let s = s.sqrt();
                if s > 0.0 {
                    s
                } else {
                    1.0
                }
            })
            .collect();

        Self {
            inner_vals,
            outer_vals,
            outer_dn,
            scale,
            npts,
        }
    }

    fn assemble(&self, sigma: f64) -> DenseMatrix {
        let nb = self.scale.len();
        let columns: Vec<Vec<f64>> = (0..nb)
            .map(|b| {
                let inv = 1.0 / self.scale[b];
                let mut col = Vec::with_capacity(2 * self.npts);
                col.extend(self.inner_vals[b].iter().map(|v| v * inv));
                col.extend(
                    self.outer_dn[b]
                        .iter()
                        .zip(&self.outer_vals[b])
                        .map(|(dn, v)| (dn - sigma * v) * inv),
                );
                col
            })
            .collect();
        DenseMatrix::from_columns(2 * self.npts, columns).expect("assembled columns are rectangular")
    }

    fn smin(&self, sigma: f64) -> Result<f64> {
        smallest_singular_value(&self.assemble(sigma))
    }

    fn column_norm_ratio(&self) -> f64 {
        let max = self.scale.iter().cloned().fold(0.0_f64, f64::max);
        let min = self.scale.iter().cloned().fold(f64::INFINITY, f64::min);
        max / min
    }
}

/// Values of the `2 + 2N` basis functions at `(x, y)` for centers `C = 0`
/// and `C' = (d, 0)`.
fn basis_values(x: f64, y: f64, d: f64, n: usize) -> Vec<f64> {
    let mut vals = Vec::with_capacity(2 + 2 * n);
    let r_sq = x * x + y * y;
    vals.push(1.0);
    vals.push(0.5 * r_sq.ln());
    // Re(z^-j): negative powers of z = x + iy.
    let (iz_re, iz_im) = (x / r_sq, -y / r_sq);
    let (mut p_re, mut p_im) = (1.0, 0.0);
    for _ in 0..n {
        let (nr, ni) = (p_re * iz_re - p_im * iz_im, p_re * iz_im + p_im * iz_re);
        p_re = nr;
        p_im = ni;
        vals.push(p_re);
    }
    // Re(w^j): positive powers of w = (x - d) + iy.
    let (w_re, w_im) = (x - d, y);
    let (mut p_re, mut p_im) = (1.0, 0.0);
    for _ in 0..n {
        let (nr, ni) = (p_re * w_re - p_im * w_im, p_re * w_im + p_im * w_re);
        p_re = nr;
        p_im = ni;
        vals.push(p_re);
    }
    vals
}

/// Values and gradients together. For a holomorphic `f`,
/// `grad Re f = (Re f', -Im f')`.
fn basis_values_and_gradients(x: f64, y: f64, d: f64, n: usize) -> (Vec<f64>, Vec<(f64, f64)>) {
    let nb = 2 + 2 * n;
    let mut vals = Vec::with_capacity(nb);
    let mut grads = Vec::with_capacity(nb);
    let r_sq = x * x + y * y;
    vals.push(1.0);
    grads.push((0.0, 0.0));
    vals.push(0.5 * r_sq.ln());
    grads.push((x / r_sq, y / r_sq));

    // z^-j with derivative -j z^-(j+1).
    let (iz_re, iz_im) = (x / r_sq, -y / r_sq);
    let (mut p_re, mut p_im) = (1.0, 0.0); // z^-(j-1)
    for j in 1..=n {
        let (nr, ni) = (p_re * iz_re - p_im * iz_im, p_re * iz_im + p_im * iz_re);
        p_re = nr;
        p_im = ni;
        vals.push(p_re);
        let (d_re, d_im) = (
            -(j as f64) * (p_re * iz_re - p_im * iz_im),
            -(j as f64) * (p_re * iz_im + p_im * iz_re),
        );
        grads.push((d_re, -d_im));
    }

    // w^j with derivative j w^(j-1).
    let (w_re, w_im) = (x - d, y);
    let (mut prev_re, mut prev_im) = (1.0, 0.0); // w^(j-1)
    for j in 1..=n {
        let (cur_re, cur_im) = (
            prev_re * w_re - prev_im * w_im,
            prev_re * w_im + prev_im * w_re,
        );
        vals.push(cur_re);
        let (d_re, d_im) = (j as f64 * prev_re, j as f64 * prev_im);
        grads.push((d_re, -d_im));
        prev_re = cur_re;
        prev_im = cur_im;
    }

    (vals, grads)
}

fn golden_section<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    let mid = 0.5 * (a + b);
    let fm = f(mid)?;
    Ok((mid, fm))
}

fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// First eigenvalue of the eccentric annulus with inner radius `R1`, outer
/// radius `R2`, and center displacement `d`.
pub fn solve_eccentric(r1: f64, r2: f64, d: f64, cfg: &MpsConfig) -> Result<MpsResult> {
    cfg.validate()?;
    if !(r1 > 0.0 && r2 > r1) {
        return Err(Error::Domain(format!("need 0 < R1 < R2, got R1={r1}, R2={r2}")));
    }
    if !(0.0..r2 - r1).contains(&d) {
        return Err(Error::Domain(format!(
            "need 0 <= d < R2 - R1, got d={d}, R2 - R1 = {}",
            r2 - r1
        )));
    }

    let sigma_concentric = 1.0 / (r2 * (r2 / r1).ln());
    let (lo, hi) = cfg
        .sigma_bracket
        .unwrap_or((0.1 * sigma_concentric, 1.5 * sigma_concentric));

    let coll = Collocation::new(r1, r2, d, cfg.basis_order, cfg.collocation_factor);
    let ratio = coll.column_norm_ratio();

    let k = cfg.scan_points;
    let sigmas: Vec<f64> = (0..k)
        .map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64)
        .collect();
    let trace: Vec<(f64, f64)> = sigmas
        .par_iter()
        .map(|&s| coll.smin(s).map(|v| (s, v)))
        .collect::<Result<_>>()?;

    let values: Vec<f64> = trace.iter().map(|&(_, v)| v).collect();
    let background = median(&values);

    // Interior local minima of the trace.
    let dips: Vec<usize> = (1..k - 1)
        .filter(|&i| values[i] < values[i - 1] && values[i] <= values[i + 1])
        .collect();
    if dips.is_empty() {
        return Err(Error::NoMinimumInBracket { trace });
    }

    // Refine every dip, then keep those that drop significantly below the
    // background; the eigenvalue is the qualifying dip at the smallest sigma.
    let mut refined = Vec::with_capacity(dips.len());
    for &i in &dips {
        let (s, v) = golden_section(|s| coll.smin(s), sigmas[i - 1], sigmas[i + 1], cfg.refine_tol)?;
        refined.push((s, v));
    }
    let deepest = refined
        .iter()
        .map(|&(_, v)| v)
        .fold(f64::INFINITY, f64::min);
    if !(deepest < 1e-2 * background) {
        return Err(Error::NoMinimumInBracket { trace });
    }
    let threshold = (deepest * background).sqrt();
    let (sigma, min_singular_value) = refined
        .iter()
        .filter(|&&(_, v)| v <= threshold)
        .min_by(|a, b| a.0.total_cmp(&b.0))
        .copied()
        .expect("at least the deepest dip qualifies");

    Ok(MpsResult {
        sigma,
        min_singular_value,
        scan_trace: trace,
        basis_order: cfg.basis_order,
        column_norm_ratio: ratio,
    })
}
