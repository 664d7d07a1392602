//! Adaptive Gauss-Legendre quadrature.
//!
//! Every integral in this crate is one-dimensional (the axisymmetric
//! reduction removes the angular directions), and all integrands are smooth
//! on closed subintervals of their domain, so a plain panel-bisection
//! strategy with a fixed-order Gauss-Legendre rule is enough: a panel is
//! accepted when the rule applied to the whole panel agrees with the
//! composite rule on its two halves.
//!
//! Node tables are generated on demand by Newton iteration on the Legendre
//! polynomials and memoized behind a read-mostly lock.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub const MIN_ORDER: usize = 2;
pub const MAX_ORDER: usize = 64;

/// Configuration for [`integrate`].
#[derive(Clone, Copy, Debug)]
pub struct Quadrature1D {
    /// Gauss-Legendre nodes per panel.
    pub rule_order: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum bisection depth before reporting failure.
    pub max_depth: u32,
}

impl Default for Quadrature1D {
    fn default() -> Self {
        Self {
            rule_order: 16,
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_depth: 40,
        }
    }
}

impl Quadrature1D {
    pub fn validate(&self) -> Result<()> {
        if self.rule_order < MIN_ORDER || self.rule_order > MAX_ORDER {
            return Err(Error::Domain(format!(
                "rule order must lie in [{MIN_ORDER}, {MAX_ORDER}], got {}",
                self.rule_order
            )));
        }
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(Error::Domain("quadrature tolerances must be positive".into()));
        }
        if self.max_depth < 1 {
            return Err(Error::Domain("max_depth must be at least 1".into()));
        }
        Ok(())
    }

    /// Same configuration with both tolerances tightened by `factor`, floored
    /// near machine precision. Used for inner integrals nested inside an
    /// outer adaptive pass, so the inner noise stays below what the outer
    /// error estimator has to resolve.
    pub fn tightened(&self, factor: f64) -> Self {
        Self {
            abs_tol: (self.abs_tol * factor).max(1e-15),
            rel_tol: (self.rel_tol * factor).max(1e-15),
            ..*self
        }
    }
}

/// An integral value together with the accumulated panel error estimate.
#[derive(Clone, Copy, Debug)]
pub struct QuadEstimate {
    pub value: f64,
    pub err_estimate: f64,
}

/// Shared node/weight table of one rule.
pub type NodeTable = Arc<Vec<(f64, f64)>>;

fn node_cache() -> &'static RwLock<HashMap<usize, NodeTable>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, NodeTable>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Nodes and weights of the `order`-point Gauss-Legendre rule on `[-1, 1]`,
/// in ascending node order. Tables are cached; concurrent readers share the
/// same `Arc`.
pub fn gauss_legendre_nodes(order: usize) -> Result<NodeTable> {
    if !(MIN_ORDER..=MAX_ORDER).contains(&order) {
        return Err(Error::Domain(format!(
            "Gauss-Legendre order must lie in [{MIN_ORDER}, {MAX_ORDER}], got {order}"
        )));
    }
    if let Some(table) = node_cache().read().unwrap().get(&order) {
        return Ok(Arc::clone(table));
    }
    let table = Arc::new(compute_nodes(order));
    node_cache()
        .write()
        .unwrap()
        .entry(order)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

/// Legendre pair (P_n(x), P_{n-1}(x)) by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0; // P_0
    let mut p = x; // P_1
    for j in 2..=n {
        let jf = j as f64;
        let next = ((2.0 * jf - 1.0) * x * p - (jf - 1.0) * p_prev) / jf;
        p_prev = p;
        p = next;
    }
    (p, p_prev)
}

fn compute_nodes(n: usize) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0_f64, 0.0_f64); n];
    let half = n.div_ceil(2);
    for i in 0..half {
        // Standard initial guess for the i-th largest root.
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, p_prev) = legendre_pair(n, z);
            let pp = n as f64 * (z * p - p_prev) / (z * z - 1.0);
            let dz = p / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        let (p, p_prev) = legendre_pair(n, z);
        let pp = n as f64 * (z * p - p_prev) / (z * z - 1.0);
        let w = 2.0 / ((1.0 - z * z) * pp * pp);
        out[i] = (-z, w);
        out[n - 1 - i] = (z, w);
    }
    if n % 2 == 1 {
        out[n / 2].0 = 0.0;
    }
    out
}

fn panel<F>(f: &mut F, a: f64, b: f64, nodes: &[(f64, f64)]) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for &(x, w) in nodes {
        let v = f(mid + half * x)?;
        if !v.is_finite() {
            return Err(Error::Domain(format!(
                "integrand is not finite at x = {}",
                mid + half * x
            )));
        }
        sum += w * v;
    }
    Ok(sum * half)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    cfg: &Quadrature1D,
    nodes: &[(f64, f64)],
    depth: u32,
    converged: &mut bool,
) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let whole = panel(f, a, b, nodes)?;
    let mid = 0.5 * (a + b);
    let refined = panel(f, a, mid, nodes)? + panel(f, mid, b, nodes)?;
    let err = (whole - refined).abs();
    if err <= abs_tol.max(cfg.rel_tol * refined.abs()) {
        return Ok((refined, err));
    }
    if depth >= cfg.max_depth {
        *converged = false;
        return Ok((refined, err));
    }
    let (lv, le) = adapt(f, a, mid, 0.5 * abs_tol, cfg, nodes, depth + 1, converged)?;
    let (rv, re) = adapt(f, mid, b, 0.5 * abs_tol, cfg, nodes, depth + 1, converged)?;
    Ok((lv + rv, le + re))
}

/// Adaptive integral of a fallible integrand over `[a, b]`.
pub fn try_integrate<F>(mut f: F, a: f64, b: f64, cfg: &Quadrature1D) -> Result<QuadEstimate>
where
    F: FnMut(f64) -> Result<f64>,
{
    cfg.validate()?;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("integration bounds must be finite, got [{a}, {b}]")));
    }
    if a > b {
        return Err(Error::Domain(format!("integration bounds out of order: [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadEstimate { value: 0.0, err_estimate: 0.0 });
    }
    let nodes = gauss_legendre_nodes(cfg.rule_order)?;
    let mut converged = true;
    let (value, err_estimate) = adapt(&mut f, a, b, cfg.abs_tol, cfg, &nodes, 0, &mut converged)?;
    if converged {
        Ok(QuadEstimate { value, err_estimate })
    } else {
        Err(Error::QuadratureDidNotConverge {
            best: value,
            err: err_estimate,
            depth: cfg.max_depth,
        })
    }
}

/// Adaptive integral of `f` over `[a, b]`.
pub fn integrate<F>(mut f: F, a: f64, b: f64, cfg: &Quadrature1D) -> Result<QuadEstimate>
where
    F: FnMut(f64) -> f64,
{
    try_integrate(|x| Ok(f(x)), a, b, cfg)
}
