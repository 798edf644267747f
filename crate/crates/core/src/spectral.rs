//! Adjacency spectral radius and Perron vector by shifted power iteration.
//!
//! The iteration runs on `A + sI` with a fixed shift `s = 1` so that bipartite
//! graphs (where `-rho` is also an eigenvalue) still converge. It starts from
//! the all-ones vector and stops once the infinity-norm residual
//! `|A x - rho x|` falls below the tolerance, with `x` scaled to max entry 1
//! and `rho` the Rayleigh quotient of `x`. For a symmetric matrix this also
//! bounds the eigenvalue error: `|rho - rho(G)| <= |r|_2 / |x|_2 <= tol`.

use serde::Serialize;

use crate::error::{arg_err, Result, SpexError};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITERS: usize = 1_000_000;
const SHIFT: f64 = 1.0;

/// Margin factor for certified strict inequalities between two radii.
pub const CERTIFY_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralOptions {
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tol: DEFAULT_TOL,
            max_iters: DEFAULT_MAX_ITERS,
        }
    }
}

impl SpectralOptions {
    pub fn with_tol(tol: f64) -> Self {
        SpectralOptions {
            tol,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Perron vector scaled so that its largest entry is exactly 1.
    #[serde(skip)]
    pub x: Vec<f64>,
    pub residual: f64,
    pub iters: usize,
}

fn multiply(g: &Graph, x: &[f64], y: &mut [f64]) {
    for (v, out) in y.iter_mut().enumerate() {
        *out = g.neighbors(v).iter().map(|&w| x[w]).sum();
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

fn normalize_max(x: &mut [f64]) {
    let max = x.iter().copied().fold(f64::MIN, f64::max);
    for v in x.iter_mut() {
        *v /= max;
    }
}

/// Spectral radius and max-normalized Perron vector of a connected graph.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with(g, SpectralOptions::with_tol(tol))
}

pub fn spectral_radius_with(g: &Graph, opts: SpectralOptions) -> Result<SpectralResult> {
    if opts.tol.is_nan() || opts.tol <= 0.0 || opts.tol.is_infinite() {
        return arg_err(format!("tolerance must be positive, got {}", opts.tol));
    }
    let n = g.n();
    if n == 0 {
        return arg_err("spectral radius of the empty graph is undefined");
    }
    let components = g.components().len();
    if components > 1 {
        return Err(SpexError::Disconnected { components });
    }
    if n == 1 {
        return Ok(SpectralResult {
            rho: 0.0,
            x: vec![1.0],
            residual: 0.0,
            iters: 0,
        });
    }

    let mut x = vec![1.0; n];
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for iter in 0..=opts.max_iters {
        multiply(g, &x, &mut ax);
        let rho = dot(&x, &ax) / dot(&x, &x);
        residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, yi)| (yi - rho * xi).abs())
            .fold(0.0, f64::max);
        if residual <= opts.tol {
            return Ok(SpectralResult {
                rho,
                x,
                residual,
                iters: iter,
            });
        }
        for (xi, yi) in x.iter_mut().zip(&ax) {
            *xi = yi + SHIFT * *xi;
        }
        normalize_max(&mut x);
    }
    Err(SpexError::NoConvergence {
        iters: opts.max_iters,
        residual,
    })
}

/// Largest spectral radius over the connected components; accepts
/// disconnected graphs. Isolated vertices contribute 0.
pub fn spectral_radius_any(g: &Graph, tol: f64) -> Result<f64> {
    let mut best = 0.0f64;
    for comp in g.components() {
        if comp.len() > 1 {
            best = best.max(spectral_radius(&g.induced(&comp), tol)?.rho);
        }
    }
    Ok(best)
}

/// Graph families with a known spectral radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormFamily {
    Complete(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
}

pub fn closed_form_rho(family: ClosedFormFamily) -> f64 {
    match family {
        ClosedFormFamily::Complete(n) => n.saturating_sub(1) as f64,
        ClosedFormFamily::Cycle(_) => 2.0,
        ClosedFormFamily::CompleteBipartite(a, b) => ((a * b) as f64).sqrt(),
        ClosedFormFamily::Path(n) => 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos(),
    }
}

/// `x^T A x / x^T x`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return arg_err(format!("vector length {} does not match n = {}", x.len(), g.n()));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return arg_err("vector has non-finite entries");
    }
    let norm = dot(x, x);
    if norm == 0.0 {
        return arg_err("zero vector");
    }
    let quad: f64 = g.edges().map(|(u, v)| x[u] * x[v]).sum();
    Ok(2.0 * quad / norm)
}

/// Outcome of a numerical comparison under the certification margin rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Violated,
    Indeterminate,
}

/// Classifies the claim `difference > 0` given a noise threshold.
pub fn certify_strict(difference: f64, threshold: f64) -> Verdict {
    if difference > threshold {
        Verdict::Certified
    } else if difference < -threshold {
        Verdict::Violated
    } else {
        Verdict::Indeterminate
    }
}

/// Classifies the claim `difference >= 0`; values inside the noise band
/// count as satisfied.
pub fn certify_non_strict(difference: f64, threshold: f64) -> Verdict {
    if difference >= -threshold {
        Verdict::Certified
    } else {
        Verdict::Violated
    }
}

/// Threshold for comparing two radii computed at tolerances `tol_a`, `tol_b`.
pub fn comparison_threshold(tol_a: f64, tol_b: f64) -> f64 {
    CERTIFY_FACTOR * (tol_a + tol_b)
}

/// Result of comparing `G'` against the Perron vector of `G`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurgeryReport {
    pub rho_g: f64,
    /// Rayleigh quotient of `G'` at the Perron vector of `G`.
    pub rayleigh: f64,
    pub rho_gp: f64,
    /// `rayleigh - rho_g`: the lower bound on `rho_gp - rho_g` that the
    /// surgery certifies.
    pub surgery_margin: f64,
    /// `rho_gp - rho_g`.
    pub gain: f64,
    pub bound_holds: bool,
}

/// Compares `gp` with `g` through the Rayleigh quotient of `gp` at the
/// Perron vector of `g`. `gp` may be disconnected; its radius is then the
/// maximum over components.
pub fn surgery_compare(g: &Graph, gp: &Graph, tol: f64) -> Result<SurgeryReport> {
    if g.n() != gp.n() {
        return arg_err(format!("order mismatch: {} vs {}", g.n(), gp.n()));
    }
    let base = spectral_radius(g, tol)?;
    let rayleigh = rayleigh_quotient(gp, &base.x)?;
    let rho_gp = spectral_radius_any(gp, tol)?;
    Ok(SurgeryReport {
        rho_g: base.rho,
        rayleigh,
        rho_gp,
        surgery_margin: rayleigh - base.rho,
        gain: rho_gp - base.rho,
        bound_holds: rho_gp - rayleigh >= -CERTIFY_FACTOR * tol,
    })
}
