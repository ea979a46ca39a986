//! Canonical codes for plane maps.
//!
//! The code of a map is the planar code of the relabelling produced by a
//! breadth-first walk from a starting dart, scanning every rotation in a
//! fixed direction from the dart through which the vertex was discovered.
//! Taking the minimum over all starting darts and both directions yields a
//! code that identifies a map up to isomorphism and reflection. For
//! 3-connected planar graphs this is abstract graph isomorphism.

use super::{PlaneCubicGraph, SimpleGraph, Vertex};
use std::cmp::Ordering;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Planar-code body (without header) of the canonical relabelling.
    pub code: Vec<u8>,
    /// `labeling[v]` is the canonical id of vertex `v`.
    pub labeling: Vec<Vertex>,
}

struct Walker<'a, R> {
    rot: &'a [R],
    label: Vec<usize>,
    reference: Vec<usize>,
    order: Vec<usize>,
}

impl<'a, R: AsRef<[Vertex]>> Walker<'a, R> {
    fn new(rot: &'a [R]) -> Self {
        let n = rot.len();
        Walker { rot, label: vec![NONE; n], reference: vec![NONE; n], order: Vec::with_capacity(n) }
    }

    /// Runs the walk from dart `root -> first`, comparing the emitted
    /// sequence against `best` as it goes. Returns the ordering of the new
    /// sequence relative to `best`; on `Less` the sequence is left in `out`.
    fn walk(
        &mut self,
        root: Vertex,
        first: Vertex,
        forward: bool,
        best: Option<&[u32]>,
        out: &mut Vec<u32>,
    ) -> Ordering {
        let n = self.rot.len();
        self.label.iter_mut().for_each(|l| *l = NONE);
        self.order.clear();
        out.clear();
        out.push(n as u32);
        self.label[root] = 0;
        self.reference[root] = first;
        self.order.push(root);
        let mut next = 1;
        let mut state = match best {
            None => Ordering::Less,
            Some(b) => (n as u32).cmp(&b[0]),
        };
        if state == Ordering::Greater {
            return state;
        }
        let mut idx = 0;
        while idx < self.order.len() {
            let v = self.order[idx];
            idx += 1;
            let r = self.rot[v].as_ref();
            let d = r.len();
            let p = r.iter().position(|&x| x == self.reference[v]).unwrap_or(0);
            for k in 0..=d {
                let val = if k == d {
                    0
                } else {
                    let w = if forward { r[(p + k) % d] } else { r[(p + d - k) % d] };
                    if self.label[w] == NONE {
                        self.label[w] = next;
                        self.reference[w] = v;
                        self.order.push(w);
                        next += 1;
                    }
                    self.label[w] as u32 + 1
                };
                if state == Ordering::Equal {
                    let b = best.expect("equal implies a best exists");
                    state = val.cmp(&b[out.len()]);
                    if state == Ordering::Greater {
                        return state;
                    }
                }
                out.push(val);
            }
        }
        state
    }
}

fn encode(seq: &[u32]) -> Vec<u8> {
    let n = seq[0] as usize;
    if n <= 255 {
        seq.iter().map(|&x| x as u8).collect()
    } else {
        let mut out = vec![0u8];
        for &x in seq {
            out.extend_from_slice(&(x as u16).to_le_bytes());
        }
        out
    }
}

/// Canonical form of an arbitrary connected plane map given by rotations.
///
/// `directions` selects which scanning directions participate: `(true, true)`
/// identifies mirror images, `(true, false)` only orientation-preserving maps.
pub(crate) fn canonical_form_map<R: AsRef<[Vertex]>>(rot: &[R], directions: (bool, bool)) -> CanonicalForm {
    let n = rot.len();
    if n == 0 {
        return CanonicalForm { code: vec![0], labeling: Vec::new() };
    }
    // Only darts with the lexicographically smallest (deg tail, deg head) can start.
    let deg = |v: Vertex| rot[v].as_ref().len();
    let mut key = (usize::MAX, usize::MAX);
    for v in 0..n {
        for &w in rot[v].as_ref() {
            key = key.min((deg(v), deg(w)));
        }
    }
    let mut walker = Walker::new(rot);
    let mut best: Option<Vec<u32>> = None;
    let mut best_label = Vec::new();
    let mut scratch = Vec::with_capacity(4 * n);
    for v in 0..n {
        for &w in rot[v].as_ref() {
            if (deg(v), deg(w)) != key {
                continue;
            }
            for forward in [true, false] {
                if (forward && !directions.0) || (!forward && !directions.1) {
                    continue;
                }
                if walker.walk(v, w, forward, best.as_deref(), &mut scratch) == Ordering::Less {
                    best = Some(scratch.clone());
                    best_label = walker.label.clone();
                }
            }
        }
    }
    if best.is_none() {
        // Isolated single vertex or edgeless map.
        walker.walk(0, NONE, true, None, &mut scratch);
        best = Some(scratch.clone());
        best_label = walker.label.clone();
    }
    CanonicalForm { code: encode(&best.expect("at least one walk")), labeling: best_label }
}

/// Canonical form of any plane map, mirror images identified.
pub(crate) fn canon_map<R: AsRef<[Vertex]>>(rot: &[R]) -> CanonicalForm {
    canonical_form_map(rot, (true, true))
}

pub fn canonical_form(g: &PlaneCubicGraph) -> CanonicalForm {
    canonical_form_map(g.rotations(), (true, true))
}

/// Equal for two graphs iff they are isomorphic (mirror images identified).
pub fn canonical_code(g: &PlaneCubicGraph) -> Vec<u8> {
    canonical_form(g).code
}

pub fn is_isomorphic(a: &PlaneCubicGraph, b: &PlaneCubicGraph) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}

/// True when the embedded graph differs from its mirror image.
pub fn is_chiral(g: &PlaneCubicGraph) -> bool {
    canonical_form_map(g.rotations(), (true, false)).code != canonical_form_map(g.rotations(), (false, true)).code
}

/// Abstract graph isomorphism by plain backtracking; returns `map` with
/// `map[v]` the image in `b` of vertex `v` of `a`.
pub fn isomorphism_backtrack(a: &SimpleGraph, b: &SimpleGraph) -> Option<Vec<Vertex>> {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return None;
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }
    // Visit vertices of `a` in BFS order so each has a mapped neighbour early.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in a.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![NONE; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        order: &[Vertex],
        a: &SimpleGraph,
        b: &SimpleGraph,
        map: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 0..b.order() {
            if used[cand] || a.degree(v) != b.degree(cand) {
                continue;
            }
            let consistent = a.neighbors(v).iter().filter(|&&w| map[w] != NONE).all(|&w| b.has_edge(cand, map[w]))
                && order[..depth].iter().all(|&u| a.has_edge(u, v) == b.has_edge(map[u], cand));
            if !consistent {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            if extend(depth + 1, order, a, b, map, used) {
                return true;
            }
            map[v] = NONE;
            used[cand] = false;
        }
        false
    }
    if extend(0, &order, a, b, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn shuffle(g: &PlaneCubicGraph, rng: &mut StdRng) -> PlaneCubicGraph {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        let shift: Vec<usize> = (0..g.order()).map(|_| rng.gen_range(0..3)).collect();
        g.relabel(&perm).reroot(&shift)
    }

    #[test]
    fn invariant_under_relabel_and_reroot() {
        let mut rng = StdRng::seed_from_u64(7);
        for g in [k4(), cube(), prism(5), prism(6), dodecahedron()] {
            let code = canonical_code(&g);
            for _ in 0..100 {
                assert_eq!(canonical_code(&shuffle(&g, &mut rng)), code);
            }
            assert_eq!(canonical_code(&g.mirror()), code);
        }
    }

    #[test]
    fn code_decodes_to_relabelled_graph() {
        let g = prism(6);
        let form = canonical_form(&g);
        assert_eq!(form.code[0] as usize, g.order());
        let mut seen = form.labeling.clone();
        seen.sort_unstable();
        assert_eq!(seen, (0..g.order()).collect::<Vec<_>>());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!is_isomorphic(&cube(), &prism(5)));
        assert!(!is_isomorphic(&prism(5), &prism(6)));
        assert!(is_isomorphic(&cube(), &prism(4)));
        assert!(isomorphism_backtrack(&cube().to_simple(), &prism(4).to_simple()).is_some());
        assert!(isomorphism_backtrack(&prism(6).to_simple(), &prism(5).to_simple()).is_none());
    }

    #[test]
    fn backtracking_agrees_with_codes_after_shuffle() {
        let mut rng = StdRng::seed_from_u64(11);
        let g = dodecahedron();
        let h = shuffle(&g, &mut rng);
        let map = isomorphism_backtrack(&g.to_simple(), &h.to_simple()).unwrap();
        for e in g.edges() {
            assert!(h.has_edge(map[e.0], map[e.1]));
        }
    }

    #[test]
    fn prisms_are_achiral() {
        assert!(!is_chiral(&cube()));
        assert!(!is_chiral(&prism(6)));
        assert!(!is_chiral(&dodecahedron()));
    }
}
