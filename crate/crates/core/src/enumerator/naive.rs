//! Direct search over cubic rotation systems.
//!
//! Vertices are created in the breadth-first order of the canonical walk:
//! vertex 0 has rotation `(1, 2, 3)`, and each later vertex, when processed,
//! fixes its clockwise rotation starting from the vertex that discovered it,
//! filling its free slots with not-yet-processed vertices or fresh ones
//! numbered in rotation order. Every rooted, oriented cubic plane graph is
//! produced this way; partial faces longer than six edges prune the search.

use super::{check_order, Catalogue, EnumError, NAIVE_BOUND};
use crate::graph::{canonical_code, PlaneCubicGraph, Vertex};
use std::collections::BTreeSet;

const EMPTY: usize = usize::MAX;

struct Search {
    n: usize,
    nbr: Vec<[Vertex; 3]>,
    deg: Vec<usize>,
    fixed: Vec<bool>,
    labeled: usize,
    found: BTreeSet<Vec<u8>>,
}

#[derive(Clone, Copy)]
enum Target {
    Known(Vertex),
    New,
}

impl Search {
    fn connect(&mut self, a: Vertex, b: Vertex) {
        self.nbr[a][self.deg[a]] = b;
        self.deg[a] += 1;
        self.nbr[b][self.deg[b]] = a;
        self.deg[b] += 1;
    }

    /// Any face walk that closes with a length outside 4..=6, or that runs
    /// through seven determined darts, rules the branch out.
    fn faces_admissible(&self) -> bool {
        for u in 0..self.labeled {
            if !self.fixed[u] {
                continue;
            }
            for &w in &self.nbr[u] {
                let start = (u, w);
                let (mut a, mut b) = start;
                let mut darts = 1;
                loop {
                    if !self.fixed[b] {
                        break;
                    }
                    let r = &self.nbr[b];
                    let p = r.iter().position(|&x| x == a).expect("adjacent");
                    let next = (b, r[(p + 1) % 3]);
                    if next == start {
                        if !(4..=6).contains(&darts) {
                            return false;
                        }
                        break;
                    }
                    darts += 1;
                    if darts > 6 {
                        return false;
                    }
                    (a, b) = next;
                }
            }
        }
        true
    }

    fn finish(&mut self) {
        let rot: Vec<Vec<Vertex>> = self.nbr.iter().map(|r| r.to_vec()).collect();
        if let Ok(g) = PlaneCubicGraph::from_rotation(rot) {
            if g.validate_fullerene().is_ok() {
                self.found.insert(canonical_code(&g));
            }
        }
    }

    fn process(&mut self, v: Vertex) {
        if v == self.labeled {
            if self.labeled == self.n {
                self.finish();
            }
            return;
        }
        let known: Vec<Vertex> = self.nbr[v][..self.deg[v]].to_vec();
        let parent = known[0];
        let candidates: Vec<Vertex> =
            (v + 1..self.labeled).filter(|&u| self.deg[u] < 3 && !known.contains(&u)).collect();
        let mut options: Vec<[Target; 2]> = Vec::new();
        match known.len() {
            3 => {
                options.push([Target::Known(known[1]), Target::Known(known[2])]);
                options.push([Target::Known(known[2]), Target::Known(known[1])]);
            }
            2 => {
                let a = Target::Known(known[1]);
                for x in std::iter::once(Target::New).chain(candidates.iter().map(|&u| Target::Known(u))) {
                    options.push([a, x]);
                    options.push([x, a]);
                }
            }
            _ => {
                options.push([Target::New, Target::New]);
                for &u in &candidates {
                    options.push([Target::New, Target::Known(u)]);
                    options.push([Target::Known(u), Target::New]);
                    for &u2 in &candidates {
                        if u2 != u {
                            options.push([Target::Known(u), Target::Known(u2)]);
                        }
                    }
                }
            }
        }
        for opt in options {
            self.try_option(v, parent, &known, opt);
        }
    }

    fn try_option(&mut self, v: Vertex, parent: Vertex, known: &[Vertex], opt: [Target; 2]) {
        let fresh = opt.iter().filter(|t| matches!(t, Target::New)).count();
        if self.labeled + fresh > self.n {
            return;
        }
        let saved_labeled = self.labeled;
        let mut rotation = [parent, EMPTY, EMPTY];
        let mut linked = Vec::new();
        for (slot, t) in opt.iter().enumerate() {
            let w = match *t {
                Target::New => {
                    let w = self.labeled;
                    self.labeled += 1;
                    w
                }
                Target::Known(u) => u,
            };
            rotation[slot + 1] = w;
            if !known.contains(&w) {
                linked.push(w);
            }
        }
        let saved_v = (self.nbr[v], self.deg[v]);
        for &w in &linked {
            self.connect(v, w);
        }
        self.nbr[v] = rotation;
        self.fixed[v] = true;
        if self.faces_admissible() {
            self.process(v + 1);
        }
        self.fixed[v] = false;
        for &w in linked.iter().rev() {
            self.deg[w] -= 1;
            self.nbr[w][self.deg[w]] = EMPTY;
        }
        (self.nbr[v], self.deg[v]) = saved_v;
        for w in saved_labeled..self.labeled {
            self.nbr[w] = [EMPTY; 3];
            self.deg[w] = 0;
        }
        self.labeled = saved_labeled;
    }
}

/// All (4,5,6)-fullerenes on `n <= 14` vertices by direct search.
pub fn naive_enumerate(n: usize) -> Result<Catalogue, EnumError> {
    check_order(n, NAIVE_BOUND)?;
    let mut s = Search {
        n,
        nbr: vec![[EMPTY; 3]; n],
        deg: vec![0; n],
        fixed: vec![false; n],
        labeled: 4,
        found: BTreeSet::new(),
    };
    for w in 1..=3 {
        s.connect(0, w);
    }
    s.fixed[0] = true;
    s.process(1);
    Ok(Catalogue::from_codes(n, s.found))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerator::enumerate_fullerenes;

    #[test]
    fn agrees_with_dual_generator_up_to_twelve() {
        for n in [8, 10, 12] {
            assert_eq!(naive_enumerate(n).unwrap().code_set(), enumerate_fullerenes(n).unwrap().code_set());
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(naive_enumerate(7).unwrap_err(), EnumError::OddVertexCount(7));
        assert!(matches!(naive_enumerate(16), Err(EnumError::BoundExceeded { .. })));
    }
}
