//! Plane cubic graphs given by rotation systems.
//!
//! A [`PlaneCubicGraph`] stores, for every vertex, its three neighbours in
//! clockwise order as seen from outside the sphere. Faces are traced with the
//! rule: the dart after `u -> w` is `w -> x`, where `x` follows `u` in the
//! rotation at `w`.

mod canon;
mod simple;
mod structure;

pub(crate) use canon::canon_map;
pub use canon::{canonical_code, canonical_form, is_chiral, is_isomorphic, isomorphism_backtrack, CanonicalForm};
pub use simple::SimpleGraph;
pub(crate) use structure::components_without_edges;
pub use structure::{connectivity, edge_cuts_up_to, girth, has_cyclic_cut_leq3, short_cycles_facial, EdgeCut};

use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// Vertex identifier; vertices are numbered `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} is not an even number >= 4")]
    BadOrder(usize),
    #[error("vertex {vertex} does not list exactly 3 neighbours")]
    NotCubic { vertex: Vertex },
    #[error("neighbour {neighbor} of vertex {vertex} is out of range")]
    OutOfRange { vertex: Vertex, neighbor: Vertex },
    #[error("vertex {vertex} has a loop or a repeated neighbour")]
    SelfLoopOrMultiEdge { vertex: Vertex },
    #[error("adjacency is not symmetric: {u} lists {v} but not vice versa")]
    NotSymmetric { u: Vertex, v: Vertex },
    #[error("rotation system is not spherical: {faces} faces, expected {expected}")]
    NotSpherical { faces: usize, expected: usize },
    #[error("face {face} has size {size}, expected 4, 5 or 6")]
    BadFaceSize { face: usize, size: usize },
}

/// An undirected edge with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A face boundary as the cyclic sequence of darts `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(Vertex, Vertex)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary vertices in tracing order.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.darts.iter().map(|&(t, _)| t).collect()
    }

    /// Boundary edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.darts.iter().map(|&(a, b)| Edge::new(a, b)).collect();
        e.sort_unstable();
        e
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceInventory {
    pub faces: Vec<Face>,
    pub p4: usize,
    pub p5: usize,
    pub p6: usize,
}

impl FaceInventory {
    pub fn histogram(&self) -> (usize, usize, usize) {
        (self.p4, self.p5, self.p6)
    }

    /// `2 p4 + p5`; equals 12 for every (4,5,6)-fullerene.
    pub fn curvature_sum(&self) -> usize {
        2 * self.p4 + self.p5
    }
}

/// A cubic graph embedded on the sphere by a clockwise rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlaneCubicGraph {
    rot: Vec<[Vertex; 3]>,
}

impl PlaneCubicGraph {
    /// Checks simplicity, symmetry and Euler characteristic 2.
    pub fn from_rotation(rot: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let n = rot.len();
        if n < 4 || n % 2 != 0 {
            return Err(GraphError::BadOrder(n));
        }
        let mut fixed = Vec::with_capacity(n);
        for (v, nb) in rot.iter().enumerate() {
            if nb.len() != 3 {
                return Err(GraphError::NotCubic { vertex: v });
            }
            for &w in nb {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: v, neighbor: w });
                }
            }
            if nb.contains(&v) || nb[0] == nb[1] || nb[1] == nb[2] || nb[0] == nb[2] {
                return Err(GraphError::SelfLoopOrMultiEdge { vertex: v });
            }
            fixed.push([nb[0], nb[1], nb[2]]);
        }
        for (v, nb) in fixed.iter().enumerate() {
            for &w in nb {
                if !fixed[w].contains(&v) {
                    return Err(GraphError::NotSymmetric { u: v, v: w });
                }
            }
        }
        let g = PlaneCubicGraph { rot: fixed };
        let faces = g.face_count();
        let expected = n / 2 + 2;
        if faces != expected {
            return Err(GraphError::NotSpherical { faces, expected });
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.rot.len()
    }

    pub fn size(&self) -> usize {
        3 * self.rot.len() / 2
    }

    pub fn rotation(&self, v: Vertex) -> &[Vertex; 3] {
        &self.rot[v]
    }

    pub fn rotations(&self) -> &[[Vertex; 3]] {
        &self.rot
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rot[v].iter().copied()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.rot.len() && self.rot[a].contains(&b)
    }

    /// All edges, normalized and sorted lexicographically.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for (v, nb) in self.rot.iter().enumerate() {
            for &w in nb {
                if v < w {
                    out.push(Edge(v, w));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Neighbour following `from` in the clockwise rotation at `at`.
    pub fn next_in_rotation(&self, at: Vertex, from: Vertex) -> Vertex {
        let r = &self.rot[at];
        let i = r.iter().position(|&x| x == from).expect("not a neighbour");
        r[(i + 1) % 3]
    }

    /// Successor dart on the same face.
    pub fn face_successor(&self, (u, w): (Vertex, Vertex)) -> (Vertex, Vertex) {
        (w, self.next_in_rotation(w, u))
    }

    /// The same graph with every rotation reversed.
    pub fn mirror(&self) -> Self {
        PlaneCubicGraph { rot: self.rot.iter().map(|&[a, b, c]| [a, c, b]).collect() }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        let mut rot = vec![[0; 3]; self.rot.len()];
        for (v, nb) in self.rot.iter().enumerate() {
            rot[perm[v]] = [perm[nb[0]], perm[nb[1]], perm[nb[2]]];
        }
        PlaneCubicGraph { rot }
    }

    /// Rotates each vertex's neighbour list by `shift[v]` positions; the
    /// embedding is unchanged.
    pub fn reroot(&self, shift: &[usize]) -> Self {
        let rot = self.rot.iter().zip(shift).map(|(r, &s)| [r[s % 3], r[(s + 1) % 3], r[(s + 2) % 3]]).collect();
        PlaneCubicGraph { rot }
    }

    fn dart_index(&self, u: Vertex, w: Vertex) -> usize {
        3 * u + self.rot[u].iter().position(|&x| x == w).expect("not a neighbour")
    }

    fn face_count(&self) -> usize {
        let n = self.rot.len();
        let mut seen = vec![false; 3 * n];
        let mut count = 0;
        for u in 0..n {
            for i in 0..3 {
                if seen[3 * u + i] {
                    continue;
                }
                count += 1;
                let start = (u, self.rot[u][i]);
                let mut d = start;
                loop {
                    seen[self.dart_index(d.0, d.1)] = true;
                    d = self.face_successor(d);
                    if d == start {
                        break;
                    }
                }
            }
        }
        count
    }

    /// Traces every face; each of the `3n` darts lies on exactly one face.
    pub fn faces(&self) -> FaceInventory {
        let n = self.rot.len();
        let mut seen = vec![false; 3 * n];
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..3 {
                if seen[3 * u + i] {
                    continue;
                }
                let start = (u, self.rot[u][i]);
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    seen[self.dart_index(d.0, d.1)] = true;
                    darts.push(d);
                    d = self.face_successor(d);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { darts });
            }
        }
        let count = |k: usize| faces.iter().filter(|f| f.len() == k).count();
        FaceInventory { p4: count(4), p5: count(5), p6: count(6), faces }
    }

    /// Succeeds iff every face is a quadrilateral, pentagon or hexagon.
    pub fn validate_fullerene(&self) -> Result<FaceInventory, GraphError> {
        let inv = self.faces();
        if let Some((i, f)) = inv.faces.iter().enumerate().find(|(_, f)| !(4..=6).contains(&f.len())) {
            return Err(GraphError::BadFaceSize { face: i, size: f.len() });
        }
        Ok(inv)
    }

    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph::from_adjacency(self.rot.iter().map(|r| r.to_vec()).collect())
    }

    /// Rotation lists as plain vectors.
    pub fn to_rotation_lists(&self) -> Vec<Vec<Vertex>> {
        self.rot.iter().map(|r| r.to_vec()).collect()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn k4() -> PlaneCubicGraph {
        PlaneCubicGraph::from_rotation(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
    }

    /// Outer square 0-1-2-3, inner square 4-5-6-7, spokes i -- i+4.
    pub fn cube() -> PlaneCubicGraph {
        PlaneCubicGraph::from_rotation(vec![
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ])
        .unwrap()
    }

    /// Prism over a k-gon: outer cycle 0..k, inner cycle k..2k.
    pub fn prism(k: usize) -> PlaneCubicGraph {
        let mut rot = vec![Vec::new(); 2 * k];
        for i in 0..k {
            let o = i;
            let inner = k + i;
            rot[o] = vec![(i + 1) % k, inner, (i + k - 1) % k];
            rot[inner] = vec![o, k + (i + 1) % k, k + (i + k - 1) % k];
        }
        PlaneCubicGraph::from_rotation(rot).unwrap()
    }

    /// Dodecahedron: a pentagon 0..5, a 10-cycle 5..15 and a pentagon 15..20.
    pub fn dodecahedron() -> PlaneCubicGraph {
        let mut adj = vec![Vec::new(); 20];
        let mut add = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for i in 0..5 {
            add(i, (i + 1) % 5);
            add(i, 5 + 2 * i);
            add(15 + i, 15 + (i + 1) % 5);
            add(15 + i, 5 + 2 * i + 1);
        }
        for j in 0..10 {
            add(5 + j, 5 + (j + 1) % 10);
        }
        crate::graph::SimpleGraph::from_adjacency(adj).planar_cubic_embedding().expect("dodecahedron is planar")
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn cube_and_k4_face_counts() {
        let inv = cube().faces();
        assert_eq!(inv.faces.len(), 6);
        assert_eq!(inv.histogram(), (6, 0, 0));
        let inv = k4().faces();
        assert_eq!(inv.faces.len(), 4);
        assert!(inv.faces.iter().all(|f| f.len() == 3));
    }

    #[test]
    fn dodecahedron_has_twelve_pentagons() {
        let inv = dodecahedron().faces();
        assert_eq!(inv.faces.len(), 12);
        assert_eq!(inv.histogram(), (0, 12, 0));
    }

    #[test]
    fn faces_cover_every_dart_once() {
        for g in [k4(), cube(), dodecahedron(), prism(7)] {
            let inv = g.faces();
            let mut darts: Vec<_> = inv.faces.iter().flat_map(|f| f.darts.clone()).collect();
            assert_eq!(darts.len(), 3 * g.order());
            darts.sort_unstable();
            darts.dedup();
            assert_eq!(darts.len(), 3 * g.order());
            assert_eq!(g.order() + inv.faces.len(), g.size() + 2);
        }
    }

    #[test]
    fn validate_rejects_triangles_and_heptagons() {
        assert_eq!(k4().validate_fullerene().unwrap_err(), GraphError::BadFaceSize { face: 0, size: 3 });
        assert!(matches!(prism(7).validate_fullerene(), Err(GraphError::BadFaceSize { size: 7, .. })));
        let inv = cube().validate_fullerene().unwrap();
        assert_eq!(inv.curvature_sum(), 12);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            PlaneCubicGraph::from_rotation(vec![vec![1, 1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]])
                .unwrap_err(),
            GraphError::SelfLoopOrMultiEdge { vertex: 0 }
        );
        assert_eq!(PlaneCubicGraph::from_rotation(vec![vec![1, 2, 3]; 3]).unwrap_err(), GraphError::BadOrder(3));
        assert!(matches!(
            PlaneCubicGraph::from_rotation(vec![vec![1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]]),
            Err(GraphError::NotCubic { vertex: 0 })
        ));
        // 0 lists 1 but 1 does not list 0.
        assert!(matches!(
            PlaneCubicGraph::from_rotation(vec![
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![0, 1, 3],
                vec![0, 1, 2],
                vec![1, 2, 3],
                vec![1, 2, 3]
            ]),
            Err(GraphError::NotSymmetric { .. })
        ));
        // K_{3,3} is cubic and simple but not planar.
        let k33 = vec![vec![3, 4, 5], vec![3, 4, 5], vec![3, 4, 5], vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]];
        assert!(matches!(PlaneCubicGraph::from_rotation(k33), Err(GraphError::NotSpherical { .. })));
        // Inconsistent rotation at one vertex of the cube.
        let mut rot = cube().to_rotation_lists();
        rot[0].swap(1, 2);
        assert!(matches!(PlaneCubicGraph::from_rotation(rot), Err(GraphError::NotSpherical { .. })));
    }

    #[test]
    fn mirror_keeps_face_sizes() {
        let g = dodecahedron();
        let m = g.mirror();
        assert_eq!(m.faces().histogram(), g.faces().histogram());
        assert_eq!(m.mirror(), g);
    }
}
