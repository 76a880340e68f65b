//! Spectral radii of connected `k`-uniform hypergraphs and the machinery used to
//! characterize the bicyclic `k`-graphs of given size with the smallest spectral radius.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure computation:
//!
//! * [`hypergraph`] and [`konig`]: the immutable edge-list representation and its incidence graph.
//! * [`constructions`]: builders for the loose path/cycle families and the three bicyclic bases.
//! * [`spectral`]: bound-sandwiching power iteration on the adjacency tensor.
//! * [`alpha_normal`]: weighted incidence matrices, normality classification and cycle consistency.
//! * [`mobius`]: the iteration `x -> 1 - alpha/x`, its hyperbolic closed form and `F0`/`F0*`.
//! * [`transforms`]: edge moving, vertex splitting and vertex releasing.
//! * [`extremal`]: the `theta0` equation, closed-form minimum and exhaustive family sweeps.
#![no_std]
#![warn(missing_docs)]
// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod alpha_normal;
pub mod constructions;
mod error;
pub mod extremal;
pub mod hypergraph;
pub mod konig;
pub(crate) mod math;
pub mod mobius;
pub mod roots;
pub mod spectral;
pub mod transforms;

pub use alpha_normal::{Classification, NormalityReport, WeightedIncidence};
pub use constructions::{build, Family, FamilySpec};
pub use error::{Error, Result};
pub use extremal::{ExtremalSolution, SweepRow};
pub use hypergraph::{Edge, EdgeKind, Hypergraph, LoosePathLocator, VertexId};
pub use konig::{KonigGraph, KonigNode};
pub use mobius::{MobiusParams, OrbitKind, OrbitPoint};
pub use spectral::{SolverOptions, SpectralResult};
