//! Weighted incidence matrices: normality classification and cycle consistency.
//!
//! A weighted incidence matrix `B` puts a positive weight on every incidence
//! `(v, e)`. It is α-normal when every vertex sum `sum_e B(v, e)` is one and every
//! edge product `prod_v B(v, e)` is α. A consistent α-normal matrix certifies
//! `rho = alpha^(-1/k)`; the sub/supernormal variants give one-sided bounds.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{invalid, Result};
use crate::hypergraph::{Hypergraph, VertexId};
use crate::konig::KonigNode;
use crate::math;
use crate::spectral::SpectralResult;

/// Positive weights on the incidences `(vertex, edge index)` of a hypergraph.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct WeightedIncidence {
    weights: BTreeMap<(VertexId, usize), f64>,
}

impl WeightedIncidence {
    /// Empty matrix.
    pub fn new() -> Self {
        Self::default()
    }

    /// Fills every incidence of `h` with `f(v, e)`.
    pub fn from_fn(h: &Hypergraph, mut f: impl FnMut(VertexId, usize) -> f64) -> Self {
        let mut b = Self::new();
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge.vertices() {
                b.set(v, e, f(v, e));
            }
        }
        b
    }

    /// Sets `B(v, e)`.
    pub fn set(&mut self, v: VertexId, e: usize, weight: f64) {
        self.weights.insert((v, e), weight);
    }

    /// `B(v, e)`, if defined.
    pub fn get(&self, v: VertexId, e: usize) -> Option<f64> {
        self.weights.get(&(v, e)).copied()
    }

    /// Number of defined entries.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// True when nothing is defined.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Entries in `(vertex, edge)` order.
    pub fn iter(&self) -> impl Iterator<Item = ((VertexId, usize), f64)> + '_ {
        self.weights.iter().map(|(&key, &w)| (key, w))
    }

    fn weight(&self, v: VertexId, e: usize) -> Result<f64> {
        self.get(v, e)
            .ok_or_else(|| invalid(format!("no weight for incidence (vertex {v}, edge {e})")))
    }

    /// Checks that `self` is defined, positive, exactly on the incidences of `h`.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge.vertices() {
                let w = self.weight(v, e)?;
                if !(w > 0.0) || !w.is_finite() {
                    return Err(invalid(format!("weight B({v}, {e}) = {w} is not positive")));
                }
            }
        }
        if self.weights.len() != h.k() * h.m() {
            return Err(invalid("weights defined outside the incidences of the hypergraph"));
        }
        Ok(())
    }

    /// `sum_e B(v, e)` for every vertex.
    pub fn vertex_sums(&self, h: &Hypergraph) -> Result<Vec<f64>> {
        (0..h.n())
            .map(|v| h.incident_edges(v).iter().map(|&e| self.weight(v, e)).sum())
            .collect()
    }

    /// `prod_v B(v, e)` for every edge.
    pub fn edge_products(&self, h: &Hypergraph) -> Result<Vec<f64>> {
        h.edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| edge.vertices().iter().map(|&v| self.weight(v, e)).product())
            .collect()
    }
}

/// Strongest normality label that applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Classification {
    /// Sums equal one and products equal α.
    AlphaNormal,
    /// Sums at least one, products at most α, one of them clearly strict.
    StrictlySupernormal,
    /// Sums at least one, products at most α.
    Supernormal,
    /// Sums at most one, products at least α, one of them clearly strict.
    StrictlySubnormal,
    /// Sums at most one, products at least α.
    Subnormal,
    /// None of the above.
    None,
}

impl Classification {
    /// Snake-case name used in reports.
    pub fn as_str(&self) -> &'static str {
        match self {
            Classification::AlphaNormal => "alpha_normal",
            Classification::StrictlySupernormal => "strictly_supernormal",
            Classification::Supernormal => "supernormal",
            Classification::StrictlySubnormal => "strictly_subnormal",
            Classification::Subnormal => "subnormal",
            Classification::None => "none",
        }
    }
}

/// Per-vertex sums, per-edge products and the resulting labels.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalityReport {
    /// α the products were compared against.
    pub alpha: f64,
    /// `sum_e B(v, e)` by vertex.
    pub vertex_sums: Vec<f64>,
    /// `prod_v B(v, e)` by edge index.
    pub edge_products: Vec<f64>,
    /// Normality label.
    pub classification: Classification,
    /// Whether every fundamental cycle has ratio product one.
    pub consistent: bool,
}

/// Certificate built from a converged eigenvector:
/// `B(v, e) = prod_{i in e} x_i / (x_v^k * rho)`.
///
/// Vertex sums are `(Ax)_v / (rho x_v^(k-1)) = 1` and edge products are `rho^(-k)`.
pub fn certificate_from_eigenvector(h: &Hypergraph, result: &SpectralResult) -> Result<WeightedIncidence> {
    let x = &result.eigenvector;
    if x.len() != h.n() {
        return Err(invalid("eigenvector length does not match the hypergraph"));
    }
    if let Some(v) = x.iter().position(|&xv| !(xv > 0.0)) {
        return Err(invalid(format!("eigenvector entry {v} is not positive")));
    }
    let k = h.k();
    let products: Vec<f64> = h
        .edges()
        .iter()
        .map(|e| e.vertices().iter().map(|&v| x[v]).product())
        .collect();
    Ok(WeightedIncidence::from_fn(h, |v, e| {
        products[e] / (math::powi(x[v], k) * result.rho)
    }))
}

/// Compares vertex sums with one and edge products with `alpha`, both within `tol`.
///
/// A strict label needs at least one inequality to clear `tol`.
pub fn classify(h: &Hypergraph, b: &WeightedIncidence, alpha: f64, tol: f64) -> Result<NormalityReport> {
    b.validate(h)?;
    let vertex_sums = b.vertex_sums(h)?;
    let edge_products = b.edge_products(h)?;

    let sums_ge = vertex_sums.iter().all(|&s| s >= 1.0 - tol);
    let sums_le = vertex_sums.iter().all(|&s| s <= 1.0 + tol);
    let prods_le = edge_products.iter().all(|&p| p <= alpha + tol);
    let prods_ge = edge_products.iter().all(|&p| p >= alpha - tol);
    let sums_gt = vertex_sums.iter().any(|&s| s > 1.0 + tol);
    let sums_lt = vertex_sums.iter().any(|&s| s < 1.0 - tol);
    let prods_lt = edge_products.iter().any(|&p| p < alpha - tol);
    let prods_gt = edge_products.iter().any(|&p| p > alpha + tol);

    let classification = if sums_ge && sums_le && prods_le && prods_ge {
        Classification::AlphaNormal
    } else if sums_ge && prods_le {
        if sums_gt || prods_lt {
            Classification::StrictlySupernormal
        } else {
            Classification::Supernormal
        }
    } else if sums_le && prods_ge {
        if sums_lt || prods_gt {
            Classification::StrictlySubnormal
        } else {
            Classification::Subnormal
        }
    } else {
        Classification::None
    };

    let consistent = check_consistency(h, b, tol)?;
    Ok(NormalityReport { alpha, vertex_sums, edge_products, classification, consistent })
}

/// Ratio product `prod_i B(v_i, e_i) / B(v_(i-1), e_i)` along each fundamental cycle.
pub fn cycle_ratios(h: &Hypergraph, b: &WeightedIncidence) -> Result<Vec<f64>> {
    let mut ratios = Vec::new();
    for cycle in h.konig().cycle_basis() {
        let len = cycle.len();
        let mut ratio = 1.0;
        for (j, node) in cycle.iter().enumerate() {
            if let KonigNode::Edge(e) = *node {
                let (prev, next) = match (cycle[(j + len - 1) % len], cycle[(j + 1) % len]) {
                    (KonigNode::Vertex(p), KonigNode::Vertex(n)) => (p, n),
                    _ => return Err(invalid("cycle walk does not alternate")),
                };
                ratio *= b.weight(next, e)? / b.weight(prev, e)?;
            }
        }
        ratios.push(ratio);
    }
    Ok(ratios)
}

/// True iff every cycle of a fundamental basis has ratio product within `tol` of one.
///
/// The ratio product is multiplicative over the cycle space, so the basis suffices.
pub fn check_consistency(h: &Hypergraph, b: &WeightedIncidence, tol: f64) -> Result<bool> {
    Ok(cycle_ratios(h, b)?.iter().all(|&r| math::abs(r - 1.0) <= tol))
}

/// All-ones weights; α-normal with α = 1 on a single edge.
pub fn uniform(h: &Hypergraph, weight: f64) -> WeightedIncidence {
    WeightedIncidence::from_fn(h, |_, _| weight)
}
