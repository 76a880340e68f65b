//! Builders for the named hypergraph families, plus base extraction and edge subdivision.
//!
//! Every builder labels "joints" (the vertices that carry the structure) first and
//! appends degree-one fillers afterwards in edge order, so equal parameters always
//! give identical hypergraphs. Joint ids per family:
//!
//! * `LoosePath(n)`: path vertices `0..=n` in order.
//! * `LooseCycle(n)`: cycle joints `0..n` in order; edge `i` joins `i` and `i+1 mod n`.
//! * `CycleStar(n)`: as `LooseCycle(n)`, plus `u = n` in the last cycle edge carrying the pendant edge.
//! * `CyclePendantJoint(n)`: as `LooseCycle(n)`, with the pendant edge at joint `0`.
//! * `C1`/`C2`: `u1,u2,u3 = 0,1,2` in `e'`, `v1,v2,v3 = 3,4,5` in `e''`, then interior path joints.
//! * `C3`: `u1,u2,v1,v2 = 0,1,2,3` in `e`, then interior path joints.
//! * `PowerHypergraph`: base graph vertices keep their ids.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};
use crate::hypergraph::{Edge, Hypergraph, VertexId};

/// One of the three bicyclic base shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Family {
    /// Two branch edges, a loop on each and a bridge (`∞`-type).
    C1,
    /// Two branch edges joined by three paths (`Θ`-type).
    C2,
    /// One branch edge carrying two loops (`Θ*`-type).
    C3,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C1 => "C1",
            Family::C2 => "C2",
            Family::C3 => "C3",
        })
    }
}

/// Parametric descriptor of a hypergraph family member.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FamilySpec {
    /// Loose path with `n >= 1` edges.
    LoosePath(usize),
    /// Loose cycle with `n >= 2` edges.
    LooseCycle(usize),
    /// Loose cycle with a pendant edge at a degree-one vertex (`n >= 2`).
    CycleStar(usize),
    /// Loose cycle with a pendant edge at a joint (`n >= 2`).
    CyclePendantJoint(usize),
    /// `∞`-type: loop `n1` on `e'`, loop `n2` on `e''`, bridge `n3`.
    C1(usize, usize, usize),
    /// `Θ`-type: three paths of lengths `n1, n2, n3` between `e'` and `e''`.
    C2(usize, usize, usize),
    /// `Θ*`-type: two loops of lengths `n1, n2` on one edge (needs `k >= 4`).
    C3(usize, usize),
    /// `k`-th power of an ordinary (multi)graph given by its edge list.
    PowerHypergraph(Vec<(usize, usize)>),
}

impl FamilySpec {
    /// Representative under the family's own symmetry: `C1` swaps its loops so
    /// `n1 <= n2`, `C2` sorts descending, `C3` sorts descending.
    pub fn canonical(&self) -> FamilySpec {
        match *self {
            FamilySpec::C1(a, b, c) => FamilySpec::C1(a.min(b), a.max(b), c),
            FamilySpec::C2(a, b, c) => {
                let mut l = [a, b, c];
                l.sort_unstable_by(|x, y| y.cmp(x));
                FamilySpec::C2(l[0], l[1], l[2])
            }
            FamilySpec::C3(a, b) => FamilySpec::C3(a.max(b), a.min(b)),
            _ => self.clone(),
        }
    }

    /// Path-length parameters for the bicyclic families.
    pub fn lengths(&self) -> Option<Vec<usize>> {
        match *self {
            FamilySpec::C1(a, b, c) | FamilySpec::C2(a, b, c) => Some(vec![a, b, c]),
            FamilySpec::C3(a, b) => Some(vec![a, b]),
            _ => None,
        }
    }

    /// Edge count of the built hypergraph.
    pub fn edge_count(&self) -> usize {
        match self {
            FamilySpec::LoosePath(n) | FamilySpec::LooseCycle(n) => *n,
            FamilySpec::CycleStar(n) | FamilySpec::CyclePendantJoint(n) => n + 1,
            FamilySpec::C1(a, b, c) | FamilySpec::C2(a, b, c) => a + b + c + 2,
            FamilySpec::C3(a, b) => a + b + 1,
            FamilySpec::PowerHypergraph(edges) => edges.len(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::LoosePath(n) => write!(f, "LoosePath({n})"),
            FamilySpec::LooseCycle(n) => write!(f, "LooseCycle({n})"),
            FamilySpec::CycleStar(n) => write!(f, "CycleStar({n})"),
            FamilySpec::CyclePendantJoint(n) => write!(f, "CyclePendantJoint({n})"),
            FamilySpec::C1(a, b, c) => write!(f, "C1({a},{b},{c})"),
            FamilySpec::C2(a, b, c) => write!(f, "C2({a},{b},{c})"),
            FamilySpec::C3(a, b) => write!(f, "C3({a},{b})"),
            FamilySpec::PowerHypergraph(edges) => {
                f.write_str("PowerHypergraph(")?;
                for (i, (a, b)) in edges.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}-{b}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A path laid out by a builder: `start_edge w0 e1 w1 ... en wn end_edge`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLayout {
    /// Branch edge holding `joints[0]`.
    pub start_edge: usize,
    /// Joints `w0..wn` (the two anchors and the interior joints).
    pub joints: Vec<VertexId>,
    /// Path edges `e1..en`.
    pub edges: Vec<usize>,
    /// Branch edge holding the last joint.
    pub end_edge: usize,
}

/// A built hypergraph together with the roles of its parts.
#[derive(Debug, Clone)]
pub struct Built {
    /// The hypergraph.
    pub graph: Hypergraph,
    /// Branch edges (`[e', e'']` for `C1`/`C2`, `[e]` for `C3`, empty otherwise).
    pub branch_edges: Vec<usize>,
    /// Internal paths in parameter order (bicyclic families only).
    pub paths: Vec<PathLayout>,
}

struct Skeleton {
    joints: usize,
    edges: Vec<Vec<VertexId>>,
}

struct RawPath {
    start: usize,
    joints: Vec<VertexId>,
    edges: Vec<usize>,
    end: usize,
}

impl Skeleton {
    fn new(joints: usize) -> Self {
        Skeleton { joints, edges: Vec::new() }
    }

    fn joint(&mut self) -> VertexId {
        self.joints += 1;
        self.joints - 1
    }

    fn edge(&mut self, vertices: Vec<VertexId>) -> usize {
        self.edges.push(vertices);
        self.edges.len() - 1
    }

    /// Loose path of `len >= 1` edges from `from` to `to`.
    fn path(&mut self, start: usize, from: VertexId, to: VertexId, len: usize, end: usize) -> RawPath {
        let mut joints = vec![from];
        for _ in 1..len {
            let j = self.joint();
            joints.push(j);
        }
        joints.push(to);
        let edges = joints.windows(2).map(|w| self.edge(vec![w[0], w[1]])).collect();
        RawPath { start, joints, edges, end }
    }

    fn finish(self, k: usize) -> Result<(Hypergraph, Vec<Edge>)> {
        let mut next = self.joints;
        let mut full = Vec::with_capacity(self.edges.len());
        for mut e in self.edges {
            if e.len() > k {
                return Err(invalid(format!("a skeleton edge needs {} slots but k = {k}", e.len())));
            }
            while e.len() < k {
                e.push(next);
                next += 1;
            }
            full.push(e);
        }
        let labelled: Vec<Edge> = full.iter().map(|e| Edge::new(e.clone())).collect::<Result<_>>()?;
        Ok((Hypergraph::new(k, next, full)?, labelled))
    }
}

fn require(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg))
    }
}

fn cycle_skeleton(n: usize) -> Skeleton {
    let mut s = Skeleton::new(n);
    for i in 0..n {
        s.edge(vec![i, (i + 1) % n]);
    }
    s
}

/// Builds `spec` with uniformity `k`.
pub fn build(spec: &FamilySpec, k: usize) -> Result<Hypergraph> {
    Ok(build_layout(spec, k)?.graph)
}

/// Builds `spec` and reports its branch edges and internal paths.
pub fn build_layout(spec: &FamilySpec, k: usize) -> Result<Built> {
    require(k >= 3, format!("uniformity must be at least 3, got {k}"))?;
    let mut branch = Vec::new();
    let mut raw_paths = Vec::new();
    let skeleton = match *spec {
        FamilySpec::LoosePath(n) => {
            require(n >= 1, "LoosePath needs n >= 1")?;
            let mut s = Skeleton::new(n + 1);
            for i in 0..n {
                s.edge(vec![i, i + 1]);
            }
            s
        }
        FamilySpec::LooseCycle(n) => {
            require(n >= 2, "LooseCycle needs n >= 2")?;
            cycle_skeleton(n)
        }
        FamilySpec::CycleStar(n) => {
            require(n >= 2, "CycleStar needs n >= 2")?;
            let mut s = cycle_skeleton(n);
            let u = s.joint();
            s.edges[n - 1].push(u);
            s.edge(vec![u]);
            s
        }
        FamilySpec::CyclePendantJoint(n) => {
            require(n >= 2, "CyclePendantJoint needs n >= 2")?;
            let mut s = cycle_skeleton(n);
            s.edge(vec![0]);
            s
        }
        FamilySpec::C1(a, b, c) | FamilySpec::C2(a, b, c) => {
            require(a >= 1 && b >= 1 && c >= 1, "C1/C2 path lengths must be at least 1")?;
            let mut s = Skeleton::new(6);
            let e1 = s.edge(vec![0, 1, 2]);
            let e2 = s.edge(vec![3, 4, 5]);
            branch = vec![e1, e2];
            raw_paths = if matches!(spec, FamilySpec::C1(..)) {
                vec![s.path(e1, 0, 2, a, e1), s.path(e2, 3, 5, b, e2), s.path(e1, 1, 4, c, e2)]
            } else {
                vec![s.path(e1, 0, 3, a, e2), s.path(e1, 1, 4, b, e2), s.path(e1, 2, 5, c, e2)]
            };
            s
        }
        FamilySpec::C3(a, b) => {
            require(a >= 1 && b >= 1, "C3 path lengths must be at least 1")?;
            require(k >= 4, "C3 needs four distinct anchors in one edge, so k >= 4")?;
            let mut s = Skeleton::new(4);
            let e = s.edge(vec![0, 1, 2, 3]);
            branch = vec![e];
            raw_paths = vec![s.path(e, 0, 1, a, e), s.path(e, 2, 3, b, e)];
            s
        }
        FamilySpec::PowerHypergraph(ref base) => {
            require(!base.is_empty(), "PowerHypergraph needs at least one base edge")?;
            let n = base.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
            let mut s = Skeleton::new(n);
            for &(a, b) in base {
                require(a != b, "PowerHypergraph base graph has a loop")?;
                s.edge(vec![a, b]);
            }
            s
        }
    };
    let (graph, labelled) = skeleton.finish(k)?;
    let index = |i: usize| graph.edge_index(&labelled[i]).expect("builder edge present");
    let branch_edges = branch.iter().map(|&e| index(e)).collect();
    let paths = raw_paths
        .into_iter()
        .map(|p| PathLayout {
            start_edge: index(p.start),
            joints: p.joints,
            edges: p.edges.iter().map(|&e| index(e)).collect(),
            end_edge: index(p.end),
        })
        .collect();
    Ok(Built { graph, branch_edges, paths })
}

/// Deletes pendant edges until none remain, returning the base and its embedding.
///
/// Fails for acyclic input, which would be deleted entirely.
pub fn base_with_embedding(h: &Hypergraph) -> Result<(Hypergraph, Vec<VertexId>)> {
    if h.cyclomatic_number() < 1 {
        return Err(invalid("base is only defined for hypergraphs with a cycle"));
    }
    let mut current = h.clone();
    let mut embedding: Vec<VertexId> = (0..h.n()).collect();
    while let Some(e) = (0..current.m()).find(|&e| current.is_pendant_edge(e)) {
        let (next, emb) = current.without_edges(&[e])?;
        embedding = emb.iter().map(|&v| embedding[v]).collect();
        current = next;
    }
    Ok((current, embedding))
}

/// The base: the minimal sub-hypergraph with the same cyclomatic number.
pub fn base_of(h: &Hypergraph) -> Result<Hypergraph> {
    Ok(base_with_embedding(h)?.0)
}

/// Replaces `edge = {u, x1..x(k-2), v}` (each `xi` of degree one) by
/// `{u, x'1..x'(k-2), w}` and `{w, x1..x(k-2), v}` with fresh `w, x'i`.
pub fn subdivide_edge(h: &Hypergraph, edge: &Edge, u: VertexId, v: VertexId) -> Result<Hypergraph> {
    let idx = h
        .edge_index(edge)
        .ok_or_else(|| invalid(format!("edge {edge} is not in the hypergraph")))?;
    require(u != v && edge.contains(u) && edge.contains(v), "u and v must be distinct vertices of the edge")?;
    let rest: Vec<VertexId> = edge.vertices().iter().copied().filter(|&x| x != u && x != v).collect();
    require(
        rest.iter().all(|&x| h.deg(x) == 1),
        "the other vertices of a subdivided edge must have degree one",
    )?;
    let w = h.n();
    let fresh: Vec<VertexId> = (w + 1..w + 1 + rest.len()).collect();
    let mut edges: Vec<Vec<VertexId>> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != idx)
        .map(|(_, e)| e.vertices().to_vec())
        .collect();
    let mut f1 = vec![u, w];
    f1.extend(&fresh);
    let mut f2 = vec![w, v];
    f2.extend(&rest);
    edges.push(f1);
    edges.push(f2);
    Hypergraph::new(h.k(), w + 1 + rest.len(), edges)
}
