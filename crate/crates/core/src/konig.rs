//! The bipartite incidence graph of a hypergraph and its fundamental cycles.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::hypergraph::{Hypergraph, VertexId};

/// A node of the König graph: either a hypergraph vertex or a hypergraph edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KonigNode {
    /// Left side: vertex of the hypergraph.
    Vertex(VertexId),
    /// Right side: edge index of the hypergraph.
    Edge(usize),
}

/// Incidence graph with one link per `(vertex, edge)` incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KonigGraph {
    vertices: usize,
    edges: usize,
    links: Vec<(VertexId, usize)>,
}

impl KonigGraph {
    /// Incidence graph of `h`.
    pub fn from_hypergraph(h: &Hypergraph) -> Self {
        let links = h
            .edges()
            .iter()
            .enumerate()
            .flat_map(|(e, edge)| edge.vertices().iter().map(move |&v| (v, e)))
            .collect();
        KonigGraph { vertices: h.n(), edges: h.m(), links }
    }

    /// Number of vertex nodes.
    pub fn vertex_nodes(&self) -> usize {
        self.vertices
    }

    /// Number of edge nodes.
    pub fn edge_nodes(&self) -> usize {
        self.edges
    }

    /// Total node count.
    pub fn node_count(&self) -> usize {
        self.vertices + self.edges
    }

    /// The incidences, as `(vertex, edge index)` pairs.
    pub fn links(&self) -> &[(VertexId, usize)] {
        &self.links
    }

    fn index(&self, node: KonigNode) -> usize {
        match node {
            KonigNode::Vertex(v) => v,
            KonigNode::Edge(e) => self.vertices + e,
        }
    }

    fn node(&self, index: usize) -> KonigNode {
        if index < self.vertices {
            KonigNode::Vertex(index)
        } else {
            KonigNode::Edge(index - self.vertices)
        }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count()];
        for &(v, e) in &self.links {
            let a = self.index(KonigNode::Vertex(v));
            let b = self.index(KonigNode::Edge(e));
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; self.node_count()];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..self.node_count() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(a) = stack.pop() {
                for &b in &adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        count
    }

    /// True iff the graph is connected.
    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `|links| - |nodes| + components`.
    pub fn cycle_rank(&self) -> i64 {
        self.links.len() as i64 - self.node_count() as i64 + self.component_count() as i64
    }

    /// Fundamental cycles of a BFS spanning forest, one per non-tree link.
    ///
    /// Each cycle is a closed alternating walk `v0 e1 v1 e2 ... e_l` (the closing
    /// node `v0` is not repeated) and always starts at a vertex node.
    pub fn cycle_basis(&self) -> Vec<Vec<KonigNode>> {
        let adj = self.adjacency();
        let count = self.node_count();
        let mut parent = vec![usize::MAX; count];
        let mut depth = vec![0usize; count];
        let mut seen = vec![false; count];
        let mut queue = VecDeque::new();
        for root in 0..count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            while let Some(a) = queue.pop_front() {
                for &b in &adj[a] {
                    if !seen[b] {
                        seen[b] = true;
                        parent[b] = a;
                        depth[b] = depth[a] + 1;
                        queue.push_back(b);
                    }
                }
            }
        }

        let mut cycles = Vec::new();
        for &(v, e) in &self.links {
            let a = self.index(KonigNode::Vertex(v));
            let b = self.index(KonigNode::Edge(e));
            if parent[a] == b || parent[b] == a {
                continue;
            }
            // climb from both ends to the lowest common ancestor
            let (mut x, mut y) = (a, b);
            let mut left = vec![x];
            let mut right = vec![y];
            while depth[x] > depth[y] {
                x = parent[x];
                left.push(x);
            }
            while depth[y] > depth[x] {
                y = parent[y];
                right.push(y);
            }
            while x != y {
                x = parent[x];
                y = parent[y];
                left.push(x);
                right.push(y);
            }
            right.pop();
            right.reverse();
            left.extend(right);
            let mut walk: Vec<KonigNode> = left.into_iter().map(|i| self.node(i)).collect();
            if let Some(start) = walk.iter().position(|n| matches!(n, KonigNode::Vertex(_))) {
                walk.rotate_left(start);
            }
            cycles.push(walk);
        }
        cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, FamilySpec};

    fn assert_closed_walk(k: &KonigGraph, cycle: &[KonigNode]) {
        let links: Vec<(usize, usize)> = k.links().to_vec();
        assert!(cycle.len() >= 4 && cycle.len().is_multiple_of(2));
        for i in 0..cycle.len() {
            let a = cycle[i];
            let b = cycle[(i + 1) % cycle.len()];
            let pair = match (a, b) {
                (KonigNode::Vertex(v), KonigNode::Edge(e)) | (KonigNode::Edge(e), KonigNode::Vertex(v)) => (v, e),
                _ => panic!("walk does not alternate"),
            };
            assert!(links.contains(&pair));
        }
    }

    #[test]
    fn single_edge_is_a_star() {
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let k = h.konig();
        assert_eq!(k.links().len(), 3);
        assert_eq!(k.node_count(), 4);
        assert_eq!(k.cycle_rank(), 0);
        assert!(k.cycle_basis().is_empty());
    }

    #[test]
    fn loose_cycle_has_one_cycle() {
        let c3 = build(&FamilySpec::LooseCycle(3), 3).unwrap();
        let k = c3.konig();
        assert_eq!((k.vertex_nodes(), k.edge_nodes(), k.links().len()), (6, 3, 9));
        assert_eq!(k.cycle_rank(), 1);
        let c4 = build(&FamilySpec::LooseCycle(4), 3).unwrap().konig();
        let basis = c4.cycle_basis();
        assert_eq!(basis.len(), 1);
        assert_closed_walk(&c4, &basis[0]);
        assert_eq!(basis[0].len(), 8);
    }

    #[test]
    fn c3_family_rank_two() {
        let h = build(&FamilySpec::C3(1, 1), 4).unwrap();
        let k = h.konig();
        let by_hand = k.links().len() as i64 - k.node_count() as i64 + 1;
        assert_eq!(by_hand, 2);
        assert_eq!(k.cycle_rank(), 2);
        let basis = k.cycle_basis();
        assert_eq!(basis.len(), 2);
        for c in &basis {
            assert_closed_walk(&k, c);
        }
    }
}
