//! Immutable `k`-uniform hypergraphs over dense integer vertex ids.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};
use crate::konig::KonigGraph;

/// Vertex index, dense in `[0, n)` for its owning hypergraph.
pub type VertexId = usize;

/// A hyperedge: strictly increasing vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Edge(Vec<VertexId>);

impl Edge {
    /// Sorts the ids; rejects repeated vertices.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid(format!("edge {vertices:?} repeats a vertex")));
        }
        Ok(Edge(vertices))
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty edge (never stored in a [`Hypergraph`]).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Role of an edge with respect to the degrees of its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    /// At least `k - 1` vertices of degree one.
    Pendant,
    /// A vertex of degree above two, or three vertices of degree above one.
    Branch,
    /// Neither of the above.
    Plain,
}

/// A simple, `k`-uniform hypergraph without isolated vertices.
///
/// Edges are stored in lexicographic order so that two hypergraphs with the same
/// labelled edge set compare equal.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

/// An internal path `e0 w0 e1 w1 ... en wn e(n+1)` between two branch edges.
///
/// `joints` has one more entry than `edges`; every joint has degree two.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LoosePathLocator {
    /// Anchor edge containing `joints[0]`.
    pub start_anchor: usize,
    /// Degree-two joints `w0..wn`.
    pub joints: Vec<VertexId>,
    /// Path edges `e1..en`; empty when both anchors share `w0`.
    pub edges: Vec<usize>,
    /// Anchor edge containing the last joint.
    pub end_anchor: usize,
    /// One of the anchors has no vertex of degree above two.
    pub hypo: bool,
}

impl LoosePathLocator {
    /// Number of path edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// True for a zero-length path (two anchors sharing one joint).
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn reversed(&self) -> Self {
        let mut joints = self.joints.clone();
        joints.reverse();
        let mut edges = self.edges.clone();
        edges.reverse();
        LoosePathLocator {
            start_anchor: self.end_anchor,
            joints,
            edges,
            end_anchor: self.start_anchor,
            hypo: self.hypo,
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph on vertices `0..n`.
    ///
    /// Rejects `k < 3`, edges of the wrong size, out-of-range ids, repeated edges,
    /// isolated vertices and the empty edge set.
    pub fn new(k: usize, n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        if k < 3 {
            return Err(invalid(format!("uniformity must be at least 3, got {k}")));
        }
        if edges.is_empty() {
            return Err(invalid("hypergraph needs at least one edge"));
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for raw in edges {
            if raw.len() != k {
                return Err(invalid(format!("edge {raw:?} has {} vertices, expected {k}", raw.len())));
            }
            if let Some(&bad) = raw.iter().find(|&&v| v >= n) {
                return Err(invalid(format!("vertex {bad} out of range for n = {n}")));
            }
            sorted.push(Edge::new(raw)?);
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(invalid(format!("duplicate edge {}", w[0])));
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in sorted.iter().enumerate() {
            for &v in e.vertices() {
                incidence[v].push(i);
            }
        }
        if let Some(v) = incidence.iter().position(|inc| inc.is_empty()) {
            return Err(invalid(format!("vertex {v} is isolated")));
        }
        Ok(Hypergraph { k, n, edges: sorted, incidence })
    }

    /// Like [`Hypergraph::new`] with `n` taken as one past the largest id used.
    pub fn from_edges(k: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        let n = edges.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        Self::new(k, n, edges)
    }

    /// Uniformity.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edge by index.
    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: VertexId) -> &[usize] {
        &self.incidence[v]
    }

    /// Index of `edge`, if present.
    pub fn edge_index(&self, edge: &Edge) -> Option<usize> {
        self.edges.binary_search(edge).ok()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.incidence
            .get(v)
            .map(Vec::len)
            .ok_or_else(|| invalid(format!("vertex {v} out of range for n = {}", self.n)))
    }

    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    /// Degree of every vertex.
    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Largest vertex degree.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Component index for every vertex, and the number of components.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &e in &self.incidence[v] {
                    for &u in self.edges[e].vertices() {
                        if label[u] == usize::MAX {
                            label[u] = count;
                            queue.push_back(u);
                        }
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// True iff the incidence graph is connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `m(k-1) - n + p`, with `p` the number of components.
    pub fn cyclomatic_number(&self) -> i64 {
        let m = self.m() as i64;
        let k = self.k as i64;
        m * (k - 1) - self.n as i64 + self.component_count() as i64
    }

    /// The incidence (König) graph.
    pub fn konig(&self) -> KonigGraph {
        KonigGraph::from_hypergraph(self)
    }

    fn count_degree_above(&self, e: usize, threshold: usize) -> usize {
        self.edges[e].vertices().iter().filter(|&&v| self.deg(v) > threshold).count()
    }

    /// At least `k - 1` vertices of `edges()[e]` have degree one.
    pub fn is_pendant_edge(&self, e: usize) -> bool {
        let ones = self.edges[e].vertices().iter().filter(|&&v| self.deg(v) == 1).count();
        ones + 1 >= self.k
    }

    /// `edges()[e]` holds a vertex of degree above two or three of degree above one.
    pub fn is_branch_edge(&self, e: usize) -> bool {
        self.count_degree_above(e, 2) >= 1 || self.count_degree_above(e, 1) >= 3
    }

    /// Classification of the edge at index `e`. Pendant takes precedence over branch.
    pub fn edge_kind(&self, e: usize) -> EdgeKind {
        if self.is_pendant_edge(e) {
            EdgeKind::Pendant
        } else if self.is_branch_edge(e) {
            EdgeKind::Branch
        } else {
            EdgeKind::Plain
        }
    }

    /// Classifies `edge`, which must belong to this hypergraph.
    pub fn classify_edge(&self, edge: &Edge) -> Result<EdgeKind> {
        let e = self
            .edge_index(edge)
            .ok_or_else(|| invalid(format!("edge {edge} is not in the hypergraph")))?;
        Ok(self.edge_kind(e))
    }

    /// All internal paths between branch edges, each reported once.
    ///
    /// Orientation is normalised so that `(start_anchor, joints[0])` is the smaller end.
    pub fn find_internal_paths(&self) -> Vec<LoosePathLocator> {
        let branch: Vec<bool> = (0..self.m()).map(|e| self.is_branch_edge(e)).collect();
        let mut found = Vec::new();
        for (e0, _) in branch.iter().enumerate().filter(|(_, &b)| b) {
            for &w0 in self.edges[e0].vertices() {
                if self.deg(w0) != 2 {
                    continue;
                }
                if let Some(path) = self.walk_internal(e0, w0, &branch) {
                    let rev = path.reversed();
                    let key_fwd = (path.start_anchor, path.joints[0]);
                    let key_rev = (rev.start_anchor, rev.joints[0]);
                    found.push(if key_rev < key_fwd { rev } else { path });
                }
            }
        }
        found.sort();
        found.dedup();
        found
    }

    fn walk_internal(&self, e0: usize, w0: VertexId, branch: &[bool]) -> Option<LoosePathLocator> {
        let mut joints = vec![w0];
        let mut edges = Vec::new();
        let mut prev = e0;
        let mut cur = w0;
        loop {
            let next = *self.incidence[cur].iter().find(|&&f| f != prev)?;
            if branch[next] {
                let no_high = |e: usize| self.count_degree_above(e, 2) == 0;
                return Some(LoosePathLocator {
                    start_anchor: e0,
                    joints,
                    edges,
                    end_anchor: next,
                    hypo: no_high(e0) || no_high(next),
                });
            }
            if edges.len() > self.m() {
                return None;
            }
            let succ = self.edges[next]
                .vertices()
                .iter()
                .copied()
                .find(|&u| u != cur && self.deg(u) >= 2)?;
            edges.push(next);
            joints.push(succ);
            prev = next;
            cur = succ;
        }
    }

    /// True iff every edge of `self`, mapped through `embedding`, is an edge of `host`.
    ///
    /// `embedding[v]` is the image of vertex `v` and must be injective.
    pub fn is_subhypergraph(&self, host: &Hypergraph, embedding: &[VertexId]) -> Result<bool> {
        if embedding.len() != self.n {
            return Err(invalid(format!(
                "embedding has {} entries for {} vertices",
                embedding.len(),
                self.n
            )));
        }
        if self.k != host.k || self.m() > host.m() {
            return Ok(false);
        }
        let mut seen = vec![false; host.n.max(embedding.iter().map(|&v| v + 1).max().unwrap_or(0))];
        for &img in embedding {
            if seen[img] {
                return Err(invalid(format!("embedding is not injective (vertex {img} hit twice)")));
            }
            seen[img] = true;
        }
        if embedding.iter().any(|&v| v >= host.n) {
            return Ok(false);
        }
        for e in &self.edges {
            let image = Edge::new(e.vertices().iter().map(|&v| embedding[v]).collect())?;
            if host.edge_index(&image).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Applies the permutation `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(invalid("relabeling must cover every vertex"));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(invalid("relabeling is not a permutation"));
            }
            hit[p] = true;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.vertices().iter().map(|&v| perm[v]).collect())
            .collect();
        Hypergraph::new(self.k, self.n, edges)
    }

    /// Sub-hypergraph on the listed edges, with unused vertices dropped.
    ///
    /// Returns the sub-hypergraph and its embedding (new id -> old id). Surviving
    /// vertices keep their relative order.
    pub fn edge_subgraph(&self, keep: &[usize]) -> Result<(Hypergraph, Vec<VertexId>)> {
        let mut used = vec![false; self.n];
        for &e in keep {
            let edge = self
                .edges
                .get(e)
                .ok_or_else(|| invalid(format!("edge index {e} out of range")))?;
            for &v in edge.vertices() {
                used[v] = true;
            }
        }
        let embedding: Vec<VertexId> = (0..self.n).filter(|&v| used[v]).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in embedding.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = keep
            .iter()
            .map(|&e| self.edges[e].vertices().iter().map(|&v| new_id[v]).collect())
            .collect();
        Ok((Hypergraph::new(self.k, embedding.len(), edges)?, embedding))
    }

    /// Hypergraph with the listed edges removed and isolated vertices dropped.
    pub fn without_edges(&self, remove: &[usize]) -> Result<(Hypergraph, Vec<VertexId>)> {
        let keep: Vec<usize> = (0..self.m()).filter(|e| !remove.contains(e)).collect();
        self.edge_subgraph(&keep)
    }

    /// Isomorphism-invariant fingerprint from colour refinement on the incidence graph.
    ///
    /// Isomorphic hypergraphs always agree; distinct ones usually differ, but not always.
    pub fn refinement_signature(&self) -> Vec<usize> {
        use alloc::collections::BTreeMap;
        let nodes = self.n + self.m();
        let mut colour: Vec<usize> = (0..nodes).map(|i| usize::from(i >= self.n)).collect();
        let mut signature = Vec::new();
        for _ in 0..nodes {
            let keys: Vec<(usize, Vec<usize>)> = (0..nodes)
                .map(|i| {
                    let mut around: Vec<usize> = if i < self.n {
                        self.incidence[i].iter().map(|&e| colour[self.n + e]).collect()
                    } else {
                        self.edges[i - self.n].vertices().iter().map(|&v| colour[v]).collect()
                    };
                    around.sort_unstable();
                    (colour[i], around)
                })
                .collect();
            let mut palette: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
            for key in &keys {
                palette.entry(key).or_insert(0);
            }
            for (i, slot) in palette.values_mut().enumerate() {
                *slot = i;
            }
            let next: Vec<usize> = keys.iter().map(|key| palette[key]).collect();
            let classes = palette.len();
            let stable = classes == colour.iter().collect::<alloc::collections::BTreeSet<_>>().len();
            colour = next;
            if stable {
                break;
            }
        }
        let mut sorted = colour.clone();
        sorted.sort_unstable();
        signature.extend(sorted);
        signature.push(self.k);
        signature
    }

    /// Connected components as separate hypergraphs with their embeddings.
    pub fn components(&self) -> Vec<(Hypergraph, Vec<VertexId>)> {
        let (label, count) = self.component_labels();
        (0..count)
            .map(|c| {
                let keep: Vec<usize> = (0..self.m())
                    .filter(|&e| label[self.edges[e].vertices()[0]] == c)
                    .collect();
                self.edge_subgraph(&keep).expect("component edges are valid")
            })
            .collect()
    }
}
