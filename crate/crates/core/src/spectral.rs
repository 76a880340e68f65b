//! Spectral radius of the adjacency tensor by power iteration with certified bounds.
//!
//! For a positive vector `x` the ratios `(Ax)_v / x_v^(k-1)` bracket the spectral
//! radius (Collatz–Wielandt). Each step maps `x` to `(Ax + x^[k-1])^[1/(k-1)]` and
//! rescales to `sum x_v^k = 1`. The added `x^[k-1]` term shifts the tensor by the
//! identity, which makes it primitive for every connected hypergraph, so the bracket
//! shrinks to zero; without the shift loose cycles can oscillate.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::math;

/// Stopping rule for [`spectral_radius`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Required width of the bracket `upper - lower`.
    pub tol: f64,
    /// Iteration cap.
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { tol: 1e-10, max_iter: 200_000 }
    }
}

impl SolverOptions {
    /// Options with the given tolerance and the default cap.
    pub fn with_tol(tol: f64) -> Self {
        SolverOptions { tol, ..Default::default() }
    }
}

/// Converged spectral radius with its positive eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Midpoint of the final bracket.
    pub rho: f64,
    /// Positive eigenvector with `sum x_v^k = 1`.
    pub eigenvector: Vec<f64>,
    /// Lower end of the final bracket.
    pub lower_bound: f64,
    /// Upper end of the final bracket.
    pub upper_bound: f64,
    /// Power steps taken.
    pub iterations: usize,
}

impl SpectralResult {
    /// Width of the final bracket.
    pub fn gap(&self) -> f64 {
        self.upper_bound - self.lower_bound
    }

    /// `rho^(-k)`.
    pub fn alpha(&self, k: usize) -> f64 {
        math::powf(self.rho, -(k as f64))
    }
}

fn apply_into(h: &Hypergraph, x: &[f64], out: &mut [f64]) {
    out.iter_mut().for_each(|o| *o = 0.0);
    let k = h.k();
    let mut prefix = vec![1.0; k + 1];
    for e in h.edges() {
        let vs = e.vertices();
        for (i, &v) in vs.iter().enumerate() {
            prefix[i + 1] = prefix[i] * x[v];
        }
        let mut suffix = 1.0;
        for (i, &v) in vs.iter().enumerate().rev() {
            out[v] += prefix[i] * suffix;
            suffix *= x[v];
        }
    }
}

/// `(Ax)_v = sum over edges e containing v of the product of x_u, u in e \ {v}`.
pub fn apply_adjacency(h: &Hypergraph, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != h.n() {
        return Err(invalid(format!("vector has length {}, hypergraph has {} vertices", x.len(), h.n())));
    }
    let mut out = vec![0.0; h.n()];
    apply_into(h, x, &mut out);
    Ok(out)
}

/// `k * sum_e prod_{v in e} x_v`, i.e. `x^T (Ax)`, for `x` with `sum x_v^k = 1`.
pub fn rayleigh(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    if x.len() != h.n() {
        return Err(invalid(format!("vector has length {}, hypergraph has {} vertices", x.len(), h.n())));
    }
    let norm: f64 = x.iter().map(|&v| math::powi(v, h.k())).sum();
    if math::abs(norm - 1.0) > 1e-12 {
        return Err(invalid(format!("vector is not k-normalised (sum x^k = {norm})")));
    }
    let total: f64 = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().map(|&v| x[v]).product::<f64>())
        .sum();
    Ok(h.k() as f64 * total)
}

/// Step-by-step driver, exposed so callers can watch the bracket evolve.
#[derive(Debug, Clone)]
pub struct PowerIteration<'a> {
    h: &'a Hypergraph,
    x: Vec<f64>,
    ax: Vec<f64>,
    lower: f64,
    upper: f64,
    iterations: usize,
}

impl<'a> PowerIteration<'a> {
    /// Starts from the normalised all-ones vector. Requires a connected hypergraph.
    pub fn new(h: &'a Hypergraph) -> Result<Self> {
        if !h.is_connected() {
            return Err(invalid("spectral radius needs a connected hypergraph"));
        }
        let start = math::powf(h.n() as f64, -1.0 / h.k() as f64);
        let mut it = PowerIteration {
            h,
            x: vec![start; h.n()],
            ax: vec![0.0; h.n()],
            lower: 0.0,
            upper: f64::INFINITY,
            iterations: 0,
        };
        it.refresh();
        Ok(it)
    }

    fn refresh(&mut self) {
        apply_into(self.h, &self.x, &mut self.ax);
        let km1 = self.h.k() - 1;
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for (a, &xv) in self.ax.iter().zip(&self.x) {
            let r = a / math::powi(xv, km1);
            lo = lo.min(r);
            hi = hi.max(r);
        }
        self.lower = lo;
        self.upper = hi;
    }

    /// One shifted power step; returns the new bracket.
    pub fn step(&mut self) -> (f64, f64) {
        let k = self.h.k();
        let root = 1.0 / (k - 1) as f64;
        for (xv, a) in self.x.iter_mut().zip(&self.ax) {
            *xv = math::powf(a + math::powi(*xv, k - 1), root);
        }
        let norm = math::powf(self.x.iter().map(|&v| math::powi(v, k)).sum::<f64>(), 1.0 / k as f64);
        self.x.iter_mut().for_each(|v| *v /= norm);
        self.iterations += 1;
        self.refresh();
        (self.lower, self.upper)
    }

    /// Current bracket `(lower, upper)`.
    pub fn bounds(&self) -> (f64, f64) {
        (self.lower, self.upper)
    }

    /// Current iterate.
    pub fn vector(&self) -> &[f64] {
        &self.x
    }

    /// Steps taken so far.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    fn into_result(self) -> SpectralResult {
        SpectralResult {
            rho: 0.5 * (self.lower + self.upper),
            eigenvector: self.x,
            lower_bound: self.lower,
            upper_bound: self.upper,
            iterations: self.iterations,
        }
    }
}

/// Spectral radius of a connected hypergraph, certified to `opts.tol`.
pub fn spectral_radius(h: &Hypergraph, opts: &SolverOptions) -> Result<SpectralResult> {
    if !(opts.tol > 0.0) {
        return Err(invalid("tolerance must be positive"));
    }
    let mut it = PowerIteration::new(h)?;
    while it.upper - it.lower > opts.tol {
        if it.iterations >= opts.max_iter {
            return Err(Error::ConvergenceFailure {
                lower: it.lower,
                upper: it.upper,
                iterations: it.iterations,
            });
        }
        it.step();
    }
    Ok(it.into_result())
}

/// `rho(H)^(-k)`.
pub fn alpha_of(h: &Hypergraph, opts: &SolverOptions) -> Result<f64> {
    Ok(spectral_radius(h, opts)?.alpha(h.k()))
}
