//! Plane triangulations as clockwise rotation systems.

use crate::graph::{canon_map, PlaneCubicGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Triangulation {
    rot: Vec<Vec<Vertex>>,
}

impl Triangulation {
    pub fn k4() -> Self {
        Triangulation { rot: vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]] }
    }

    pub fn order(&self) -> usize {
        self.rot.len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.rot.iter().map(Vec::len)
    }

    /// Every vertex split: vertex `v` with clockwise neighbours
    /// `w_0 .. w_{d-1}` and indices `i < j` becomes adjacent vertices `v`
    /// and `v'`, where `v` keeps `w_i ..= w_j` and `v'` takes `w_j ..= w_i`.
    /// Both end up adjacent to `w_i` and `w_j`.
    pub fn splits(&self) -> impl Iterator<Item = Triangulation> + '_ {
        (0..self.order()).flat_map(move |v| {
            let d = self.rot[v].len();
            (0..d).flat_map(move |i| (i + 1..d).map(move |j| self.split(v, i, j)))
        })
    }

    fn split(&self, v: Vertex, i: usize, j: usize) -> Triangulation {
        let new = self.order();
        let nb = &self.rot[v];
        let d = nb.len();
        let (a, b) = (nb[i], nb[j]);
        let mut rot = self.rot.clone();
        let mut keep: Vec<Vertex> = (i..=j).map(|k| nb[k]).collect();
        keep.push(new);
        let mut moved: Vec<Vertex> = (0..=(i + d - j)).map(|k| nb[(j + k) % d]).collect();
        moved.push(v);
        for &w in &moved[1..moved.len() - 2] {
            for x in rot[w].iter_mut() {
                if *x == v {
                    *x = new;
                }
            }
        }
        let replace = |list: &mut Vec<Vertex>, with: [Vertex; 2]| {
            let p = list.iter().position(|&x| x == v).expect("adjacent");
            list.splice(p..=p, with);
        };
        replace(&mut rot[a], [v, new]);
        replace(&mut rot[b], [new, v]);
        rot[v] = keep;
        rot.push(moved);
        Triangulation { rot }
    }

    /// Canonical code and the canonically relabelled triangulation.
    pub fn canonical(&self) -> (Vec<u8>, Triangulation) {
        let form = canon_map(&self.rot);
        let n = self.order();
        let mut rot = vec![Vec::new(); n];
        for (v, list) in self.rot.iter().enumerate() {
            rot[form.labeling[v]] = list.iter().map(|&w| form.labeling[w]).collect();
        }
        (form.code, Triangulation { rot })
    }

    fn successor(&self, (u, w): (Vertex, Vertex)) -> (Vertex, Vertex) {
        let r = &self.rot[w];
        let p = r.iter().position(|&x| x == u).expect("adjacent");
        (w, r[(p + 1) % r.len()])
    }

    /// Face boundaries as dart lists.
    pub fn faces(&self) -> Vec<Vec<(Vertex, Vertex)>> {
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for u in 0..self.order() {
            for &w in &self.rot[u] {
                if seen.contains(&(u, w)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = (u, w);
                while seen.insert(d) {
                    face.push(d);
                    d = self.successor(d);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// The dual cubic plane graph: one vertex per triangle, joined across
    /// each edge.
    pub fn dual(&self) -> PlaneCubicGraph {
        let faces = self.faces();
        let mut face_of = std::collections::HashMap::new();
        for (f, darts) in faces.iter().enumerate() {
            for &d in darts {
                face_of.insert(d, f);
            }
        }
        let rot = faces.iter().map(|darts| darts.iter().map(|&(a, b)| face_of[&(b, a)]).collect()).collect();
        PlaneCubicGraph::from_rotation(rot).expect("dual of a triangulation is plane cubic")
    }
}
