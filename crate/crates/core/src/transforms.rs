//! Local operations on hypergraphs: moving edges, splitting a vertex into an edge,
//! and releasing vertices from an edge.
//!
//! Each operation returns a new hypergraph with a record of where the old vertices
//! went. Fresh vertices always take the next ids above the existing range. The
//! hypotheses under which an operation moves the spectral radius in a known
//! direction are separate predicates, so ineligible inputs can still be transformed.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::alpha_normal::WeightedIncidence;
use crate::error::{invalid, Result};
use crate::hypergraph::{Edge, Hypergraph, VertexId};
use crate::spectral::{spectral_radius, SolverOptions};

/// Result of an operation: the new hypergraph and the fate of each old vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Transformed {
    /// The new hypergraph.
    pub graph: Hypergraph,
    /// `old_to_new[v]` is the new id of old vertex `v`, or `None` if it was dropped.
    pub old_to_new: Vec<Option<VertexId>>,
}

/// Replace edge `e_i` by `(e_i \ {v_i}) + {target}` for every listed `(e_i, v_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MoveSpec {
    /// The vertex the edges move to.
    pub target: VertexId,
    /// `(edge index, vertex leaving that edge)`.
    pub relocations: Vec<(usize, VertexId)>,
}

/// Moves edges onto `spec.target`, then drops vertices left isolated (ids compacted
/// in order).
pub fn move_edges(h: &Hypergraph, spec: &MoveSpec) -> Result<Transformed> {
    let u = spec.target;
    if u >= h.n() {
        return Err(invalid(format!("target vertex {u} out of range")));
    }
    let mut edges: Vec<Vec<VertexId>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();
    let mut touched = vec![false; h.m()];
    for &(e, v) in &spec.relocations {
        let edge = h.edges().get(e).ok_or_else(|| invalid(format!("edge index {e} out of range")))?;
        if touched[e] {
            return Err(invalid(format!("edge {edge} is moved twice")));
        }
        touched[e] = true;
        if !edge.contains(v) {
            return Err(invalid(format!("vertex {v} is not in edge {edge}")));
        }
        if edge.contains(u) {
            return Err(invalid(format!("target {u} already lies in edge {edge}")));
        }
        let moved: Vec<VertexId> = edge.vertices().iter().map(|&x| if x == v { u } else { x }).collect();
        if h.edge_index(&Edge::new(moved.clone())?).is_some() {
            return Err(invalid(format!("moving {edge} from {v} to {u} recreates an existing edge")));
        }
        edges[e] = moved;
    }
    let mut used = vec![false; h.n()];
    for &x in edges.iter().flatten() {
        used[x] = true;
    }
    let mut old_to_new = vec![None; h.n()];
    let mut next = 0;
    for v in 0..h.n() {
        if used[v] {
            old_to_new[v] = Some(next);
            next += 1;
        }
    }
    let edges = edges
        .into_iter()
        .map(|e| e.into_iter().map(|x| old_to_new[x].expect("used vertex")).collect())
        .collect();
    let graph = Hypergraph::new(h.k(), next, edges)?;
    Ok(Transformed { graph, old_to_new })
}

/// Moves every edge at `u2` that does not also contain `u1` from `u2` to `u1`.
///
/// Requires `u1`, `u2` to share an edge, both to have degree at least two, and each
/// to have an edge the other lacks. Under these conditions, and when the result is
/// not isomorphic to `h`, the spectral radius strictly increases.
pub fn merge_move_spec(h: &Hypergraph, u1: VertexId, u2: VertexId) -> Result<MoveSpec> {
    h.degree(u1)?;
    h.degree(u2)?;
    let e1 = h.incident_edges(u1);
    let e2 = h.incident_edges(u2);
    if u1 == u2 || !e1.iter().any(|e| e2.contains(e)) {
        return Err(invalid("the two vertices must be distinct and share an edge"));
    }
    if e1.len() < 2 || e2.len() < 2 {
        return Err(invalid("both vertices must have degree at least two"));
    }
    let only1 = e1.iter().filter(|e| !e2.contains(e)).count();
    let only2: Vec<usize> = e2.iter().copied().filter(|e| !e1.contains(e)).collect();
    if only1 == 0 || only2.is_empty() {
        return Err(invalid("each vertex needs an edge the other does not lie in"));
    }
    Ok(MoveSpec { target: u1, relocations: only2.into_iter().map(|e| (e, u2)).collect() })
}

/// Moves edge `e1` off a vertex `v` of degree at least three onto a degree-one vertex
/// `u` lying in another edge at `v`. This strictly increases α.
pub fn pendant_move_spec(h: &Hypergraph, v: VertexId, e1: usize, u: VertexId) -> Result<MoveSpec> {
    if h.degree(v)? < 3 {
        return Err(invalid(format!("vertex {v} needs degree at least three")));
    }
    if h.degree(u)? != 1 {
        return Err(invalid(format!("vertex {u} must have degree one")));
    }
    if !h.incident_edges(v).contains(&e1) {
        return Err(invalid(format!("edge {e1} does not contain vertex {v}")));
    }
    let e2 = h.incident_edges(u)[0];
    if e2 == e1 || !h.edge(e2).contains(v) {
        return Err(invalid("u must lie in a different edge through v"));
    }
    Ok(MoveSpec { target: u, relocations: vec![(e1, v)] })
}

/// Replace `w` by a new edge `{w, u_k, x_1..x_(k-2)}`; edges listed in `to_last`
/// switch from `w` to `u_k`, the others stay on `w` (playing `u_1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSpec {
    /// The vertex being split.
    pub w: VertexId,
    /// Incident edges of `w` reassigned to `u_k`.
    pub to_last: Vec<usize>,
}

impl SplitSpec {
    /// For `w` of degree two: its first edge stays on `u_1 = w`, the second goes to `u_k`.
    pub fn degree_two(h: &Hypergraph, w: VertexId) -> Result<Self> {
        if h.degree(w)? != 2 {
            return Err(invalid(format!("vertex {w} must have degree two")));
        }
        Ok(SplitSpec { w, to_last: vec![h.incident_edges(w)[1]] })
    }
}

/// Splits `spec.w` into a new edge. `u_k` gets id `n`, the interior vertices
/// `n+1..n+k-2`; `w` keeps its id as `u_1`.
pub fn split_vertex(h: &Hypergraph, spec: &SplitSpec) -> Result<Transformed> {
    let w = spec.w;
    let incident = h.incident_edges(w);
    h.degree(w)?;
    for &e in &spec.to_last {
        if !incident.contains(&e) {
            return Err(invalid(format!("edge {e} is not incident to vertex {w}")));
        }
    }
    let n = h.n();
    let last = n;
    let mut edges: Vec<Vec<VertexId>> = h
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let moved = spec.to_last.contains(&i);
            e.vertices().iter().map(|&x| if moved && x == w { last } else { x }).collect()
        })
        .collect();
    let mut fresh = vec![w, last];
    fresh.extend(n + 1..n + h.k() - 1);
    edges.push(fresh);
    let graph = Hypergraph::new(h.k(), n + h.k() - 1, edges)?;
    Ok(Transformed { graph, old_to_new: (0..n).map(Some).collect() })
}

/// `true` when `phi(B(w, e_1)) < 0` for the first edge at `w`, i.e. `B(w, e_1)`
/// lies strictly between the roots of `x^2 - x + alpha`. For an α-normal `b` this
/// guarantees that splitting the degree-two vertex `w` lowers the spectral radius.
pub fn split_hypothesis_holds(h: &Hypergraph, w: VertexId, b: &WeightedIncidence, alpha: f64) -> Result<bool> {
    if h.degree(w)? != 2 {
        return Err(invalid(format!("vertex {w} must have degree two")));
    }
    let e1 = h.incident_edges(w)[0];
    let x = b
        .get(w, e1)
        .ok_or_else(|| invalid(format!("no weight for incidence (vertex {w}, edge {e1})")))?;
    Ok(x * x - x + alpha < 0.0)
}

/// `true` when `w` is a joint of some internal path (so it has degree two).
pub fn is_internal_path_joint(h: &Hypergraph, w: VertexId) -> bool {
    h.find_internal_paths().iter().any(|p| p.joints.contains(&w))
}

/// `true` when `w` is an end joint of an internal path whose two anchor edges each
/// hold at least three vertices of degree above one.
pub fn path_end_split_eligible(h: &Hypergraph, w: VertexId) -> bool {
    let busy = |e: usize| h.edge(e).vertices().iter().filter(|&&v| h.deg(v) > 1).count() >= 3;
    h.find_internal_paths().iter().any(|p| {
        let ends = [p.joints[0], *p.joints.last().expect("paths have joints")];
        ends.contains(&w) && busy(p.start_anchor) && busy(p.end_anchor)
    })
}

/// Computes both spectral radii; true iff the split one is below `rho(h) - tol`.
pub fn splitting_is_rho_decreasing(h: &Hypergraph, spec: &SplitSpec, opts: &SolverOptions, tol: f64) -> Result<bool> {
    let before = spectral_radius(h, opts)?.rho;
    let after = spectral_radius(&split_vertex(h, spec)?.graph, opts)?.rho;
    Ok(after < before - tol)
}

/// Detach `release` from `edge`, replacing each by a fresh degree-one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReleaseSpec {
    /// Edge index.
    pub edge: usize,
    /// Vertices of degree at least two to release; at least one must stay.
    pub release: Vec<VertexId>,
}

/// Releases vertices: `e` becomes `(e + {w_1..w_t}) \ {v_1..v_t}` with fresh
/// `w_i = n + i - 1`. Released vertices keep their other edges.
pub fn release_vertices(h: &Hypergraph, spec: &ReleaseSpec) -> Result<Transformed> {
    let edge = h
        .edges()
        .get(spec.edge)
        .ok_or_else(|| invalid(format!("edge index {} out of range", spec.edge)))?;
    let s = edge.vertices().iter().filter(|&&v| h.deg(v) >= 2).count();
    let t = spec.release.len();
    if t == 0 || t >= s {
        return Err(invalid(format!("must release between 1 and {} of the {s} shared vertices, got {t}", s.saturating_sub(1))));
    }
    for (i, &v) in spec.release.iter().enumerate() {
        if !edge.contains(v) || h.deg(v) < 2 {
            return Err(invalid(format!("vertex {v} is not a shared vertex of edge {edge}")));
        }
        if spec.release[..i].contains(&v) {
            return Err(invalid(format!("vertex {v} listed twice")));
        }
    }
    let n = h.n();
    let mut edges: Vec<Vec<VertexId>> = h.edges().iter().map(|e| e.vertices().to_vec()).collect();
    edges[spec.edge] = edge
        .vertices()
        .iter()
        .map(|&x| match spec.release.iter().position(|&v| v == x) {
            Some(i) => n + i,
            None => x,
        })
        .collect();
    let graph = Hypergraph::new(h.k(), n + t, edges)?;
    Ok(Transformed { graph, old_to_new: (0..n).map(Some).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, FamilySpec};
    use crate::spectral::alpha_of;

    fn same_shape(a: &Hypergraph, b: &Hypergraph) -> bool {
        a.n() == b.n() && a.m() == b.m() && a.refinement_signature() == b.refinement_signature()
    }

    #[test]
    fn empty_move_is_identity() {
        let h = build(&FamilySpec::C1(1, 2, 1), 3).unwrap();
        let t = move_edges(&h, &MoveSpec { target: 0, relocations: vec![] }).unwrap();
        assert_eq!(t.graph, h);
        assert!(t.old_to_new.iter().enumerate().all(|(i, &v)| v == Some(i)));
    }

    #[test]
    fn move_builds_degree_three_joint() {
        // path of three edges; pull the last edge back onto the first joint
        let p = build(&FamilySpec::LoosePath(3), 3).unwrap();
        let e3 = p.incident_edges(3)[0];
        let t = move_edges(&p, &MoveSpec { target: 1, relocations: vec![(e3, 2)] }).unwrap();
        assert_eq!(t.graph.max_degree(), 3);
        assert_eq!(t.graph.m(), 3);
        assert_eq!(t.graph.n(), p.n());
        assert_eq!(t.graph.cyclomatic_number(), p.cyclomatic_number());
    }

    #[test]
    fn move_rejects_bad_specs() {
        let p = build(&FamilySpec::LoosePath(2), 3).unwrap();
        let e0 = p.incident_edges(0)[0];
        assert!(move_edges(&p, &MoveSpec { target: 1, relocations: vec![(e0, 0)] }).is_err());
        assert!(move_edges(&p, &MoveSpec { target: 99, relocations: vec![] }).is_err());
        // moving onto a vertex that recreates the other edge
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let e = h.incident_edges(0)[0];
        assert!(move_edges(&h, &MoveSpec { target: 3, relocations: vec![(e, 0)] }).is_err());
    }

    #[test]
    fn move_prunes_isolated_vertices() {
        let h = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let e = h.incident_edges(4)[0];
        let t = move_edges(&h, &MoveSpec { target: 0, relocations: vec![(e, 4)] }).unwrap();
        assert_eq!(t.graph.n(), 4);
        assert_eq!(t.old_to_new[4], None);
        assert_eq!(t.old_to_new[3], Some(3));
    }

    #[test]
    fn pendant_move_raises_alpha() {
        // C1(1,1,1) with a pendant edge at vertex 0, making it a degree-three vertex
        let base = build(&FamilySpec::C1(1, 1, 1), 3).unwrap();
        let mut edges: Vec<Vec<usize>> = base.edges().iter().map(|e| e.vertices().to_vec()).collect();
        let n = base.n();
        edges.push(vec![0, n, n + 1]);
        let h = Hypergraph::new(3, n + 2, edges).unwrap();
        let pendant = h.incident_edges(n)[0];
        let e1 = *h.incident_edges(0).iter().find(|&&e| e != pendant).unwrap();
        let spec = pendant_move_spec(&h, 0, e1, n).unwrap();
        let moved = move_edges(&h, &spec).unwrap().graph;
        let opts = SolverOptions::default();
        assert!(alpha_of(&moved, &opts).unwrap() > alpha_of(&h, &opts).unwrap() + 1e-7);
        assert!(pendant_move_spec(&h, 1, e1, n).is_err());
    }

    #[test]
    fn merge_move_raises_rho() {
        let h = build(&FamilySpec::LooseCycle(4), 3).unwrap();
        // joints 0 and 1 share an edge; each has one private edge
        let spec = merge_move_spec(&h, 0, 1).unwrap();
        let moved = move_edges(&h, &spec).unwrap().graph;
        let opts = SolverOptions::default();
        let before = spectral_radius(&h, &opts).unwrap().rho;
        let after = spectral_radius(&moved, &opts).unwrap().rho;
        assert!(after > before + 1e-7);
        assert!(merge_move_spec(&h, 0, 2).is_err());
    }

    #[test]
    fn splitting_cycle_joint_lengthens_cycle() {
        for k in [3, 4] {
            let c = build(&FamilySpec::LooseCycle(4), k).unwrap();
            let t = split_vertex(&c, &SplitSpec::degree_two(&c, 0).unwrap()).unwrap();
            assert!(same_shape(&t.graph, &build(&FamilySpec::LooseCycle(5), k).unwrap()));
            assert_eq!(t.graph.cyclomatic_number(), c.cyclomatic_number());
        }
    }

    #[test]
    fn splitting_cycle_star_joint() {
        let c = build(&FamilySpec::CycleStar(3), 3).unwrap();
        let t = split_vertex(&c, &SplitSpec::degree_two(&c, 1).unwrap()).unwrap();
        assert!(same_shape(&t.graph, &build(&FamilySpec::CycleStar(4), 3).unwrap()));
        let opts = SolverOptions::default();
        assert!(splitting_is_rho_decreasing(&c, &SplitSpec::degree_two(&c, 1).unwrap(), &opts, 1e-7).unwrap());
    }

    #[test]
    fn splitting_interior_joint_of_theta() {
        let built = crate::constructions::build_layout(&FamilySpec::C2(2, 1, 1), 3).unwrap();
        let h = &built.graph;
        let w = built.paths[0].joints[1];
        assert!(is_internal_path_joint(h, w));
        let t = split_vertex(h, &SplitSpec::degree_two(h, w).unwrap()).unwrap();
        assert!(same_shape(&t.graph, &build(&FamilySpec::C2(3, 1, 1), 3).unwrap()));
        assert_eq!(t.graph.m(), h.m() + 1);
        let one = build(&FamilySpec::C2(1, 1, 1), 3).unwrap();
        let end = one.find_internal_paths()[0].joints[0];
        let split = split_vertex(&one, &SplitSpec::degree_two(&one, end).unwrap()).unwrap();
        assert!(same_shape(&split.graph, &build(&FamilySpec::C2(2, 1, 1), 3).unwrap()));
    }

    #[test]
    fn split_requires_degree_two() {
        let p = build(&FamilySpec::LoosePath(2), 3).unwrap();
        assert!(SplitSpec::degree_two(&p, 0).is_err());
        assert!(SplitSpec::degree_two(&p, 1).is_ok());
    }

    #[test]
    fn path_end_eligibility() {
        let built = crate::constructions::build_layout(&FamilySpec::C2(2, 2, 2), 3).unwrap();
        let h = &built.graph;
        let path = &built.paths[0];
        assert!(path_end_split_eligible(h, path.joints[0]));
        assert!(!path_end_split_eligible(h, path.joints[1]));
        // C1 branch edges carry exactly three shared vertices as well
        let c1 = build(&FamilySpec::C1(2, 2, 2), 3).unwrap();
        assert!(c1.find_internal_paths().iter().all(|p| path_end_split_eligible(&c1, p.joints[0])));
        let c = build(&FamilySpec::LooseCycle(4), 3).unwrap();
        assert!(!path_end_split_eligible(&c, 0));
    }

    #[test]
    fn release_gives_fresh_leaves() {
        let h = build(&FamilySpec::C3(1, 1), 4).unwrap();
        let branch = (0..h.m()).find(|&e| h.is_branch_edge(e)).unwrap();
        let t = release_vertices(&h, &ReleaseSpec { edge: branch, release: vec![0] }).unwrap();
        let g = &t.graph;
        assert_eq!(g.n(), h.n() + 1);
        assert_eq!(g.degree(h.n()).unwrap(), 1);
        assert_eq!(g.degree(0).unwrap(), 1);
        assert_eq!(g.cyclomatic_number(), h.cyclomatic_number() - 1);
        let opts = SolverOptions::default();
        assert!(spectral_radius(g, &opts).unwrap().rho < spectral_radius(&h, &opts).unwrap().rho - 1e-7);
    }

    #[test]
    fn release_rejects_releasing_everything() {
        let h = build(&FamilySpec::LooseCycle(3), 3).unwrap();
        let e = h.incident_edges(0)[0];
        let shared: Vec<usize> = h.edge(e).vertices().iter().copied().filter(|&v| h.deg(v) >= 2).collect();
        assert!(release_vertices(&h, &ReleaseSpec { edge: e, release: shared.clone() }).is_err());
        assert!(release_vertices(&h, &ReleaseSpec { edge: e, release: vec![] }).is_err());
        assert!(release_vertices(&h, &ReleaseSpec { edge: e, release: vec![shared[0]] }).is_ok());
    }
}
