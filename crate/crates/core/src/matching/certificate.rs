//! Gallai–Edmonds decomposition and Tutte-style deficiency certificates.
//!
//! A certificate is a vertex set `S` such that every component of `G - S`
//! is factor-critical and `S` can be matched into distinct components. For
//! such an `S`, `G` has a perfect matching iff `|S|` equals the number of
//! components. The certificate built here is an inclusion-maximal barrier
//! containing the Gallai–Edmonds set `A(G)`.

use super::{has_perfect_matching, is_factor_critical, matching_number};
use crate::graph::{SimpleGraph, Vertex};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    /// Vertices missed by some maximum matching.
    pub d: Vec<Vertex>,
    /// Neighbours of `d` outside `d`.
    pub a: Vec<Vertex>,
    /// Everything else.
    pub c: Vec<Vertex>,
}

pub fn gallai_edmonds(g: &SimpleGraph) -> GallaiEdmonds {
    let n = g.order();
    let nu = matching_number(g);
    let in_d: Vec<bool> = (0..n).map(|v| matching_number(&g.without_vertices(&[v]).0) == nu).collect();
    let mut in_a = vec![false; n];
    for v in (0..n).filter(|&v| in_d[v]) {
        for &w in g.neighbors(v) {
            if !in_d[w] {
                in_a[w] = true;
            }
        }
    }
    GallaiEdmonds {
        d: (0..n).filter(|&v| in_d[v]).collect(),
        a: (0..n).filter(|&v| in_a[v]).collect(),
        c: (0..n).filter(|&v| !in_d[v] && !in_a[v]).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeficiencyCertificate {
    /// The set `S`, sorted.
    pub barrier: Vec<Vertex>,
    /// Components of `G - S`, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<Vertex>>,
    pub factor_critical: Vec<bool>,
    /// `S` is matchable to the components.
    pub matchable: bool,
}

impl DeficiencyCertificate {
    /// `|components| - |S|`; zero iff the graph has a perfect matching.
    pub fn deficiency(&self) -> isize {
        self.components.len() as isize - self.barrier.len() as isize
    }

    pub fn all_factor_critical(&self) -> bool {
        self.factor_critical.iter().all(|&f| f)
    }

    /// Re-derives every property from `g` without trusting stored flags.
    pub fn verify(&self, g: &SimpleGraph) -> Result<(), String> {
        let n = g.order();
        let mut blocked = vec![false; n];
        for &v in &self.barrier {
            if v >= n || blocked[v] {
                return Err(format!("barrier vertex {v} out of range or repeated"));
            }
            blocked[v] = true;
        }
        let comps = g.components_avoiding(&blocked);
        if comps != self.components {
            return Err("components do not match G - S".into());
        }
        for (i, c) in comps.iter().enumerate() {
            if !is_factor_critical(&g.induced(c).0) {
                return Err(format!("component {i} is not factor-critical"));
            }
        }
        if !barrier_matchable(g, &self.barrier, &comps) {
            return Err("S is not matchable to the components".into());
        }
        if has_perfect_matching(g) != (self.barrier.len() == comps.len()) {
            return Err("perfect matching existence disagrees with |S| = |C|".into());
        }
        Ok(())
    }
}

/// Matches barrier vertices into distinct adjacent components with simple
/// augmenting paths on the contracted bipartite graph.
fn barrier_matchable(g: &SimpleGraph, barrier: &[Vertex], comps: &[Vec<Vertex>]) -> bool {
    let mut comp_of = vec![usize::MAX; g.order()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let options: Vec<Vec<usize>> = barrier
        .iter()
        .map(|&s| {
            let mut o: Vec<usize> = g.neighbors(s).iter().map(|&w| comp_of[w]).filter(|&c| c != usize::MAX).collect();
            o.sort_unstable();
            o.dedup();
            o
        })
        .collect();
    let mut owner = vec![usize::MAX; comps.len()];
    fn try_assign(s: usize, options: &[Vec<usize>], owner: &mut [usize], seen: &mut [bool]) -> bool {
        for &c in &options[s] {
            if seen[c] {
                continue;
            }
            seen[c] = true;
            if owner[c] == usize::MAX || try_assign(owner[c], options, owner, seen) {
                owner[c] = s;
                return true;
            }
        }
        false
    }
    (0..barrier.len()).all(|s| try_assign(s, &options, &mut owner, &mut vec![false; comps.len()]))
}

fn odd_components(g: &SimpleGraph, blocked: &[bool]) -> Vec<Vec<Vertex>> {
    g.components_avoiding(blocked)
}

/// Builds a certificate: start from the Gallai–Edmonds set `A` and enlarge
/// the barrier until every component of `G - S` is odd and factor-critical.
pub fn deficiency_certificate(g: &SimpleGraph) -> DeficiencyCertificate {
    let n = g.order();
    let mut blocked = vec![false; n];
    for v in gallai_edmonds(g).a {
        blocked[v] = true;
    }
    loop {
        let comps = odd_components(g, &blocked);
        let mut grown = false;
        for c in &comps {
            if c.len() % 2 == 0 {
                blocked[c[0]] = true;
                grown = true;
                break;
            }
            let (h, map) = g.induced(c);
            // An odd component that is not factor-critical: some h - v has no
            // perfect matching, and v together with A(h - v) extends the barrier.
            let bad = (0..h.order()).find(|&v| !has_perfect_matching(&h.without_vertices(&[v]).0));
            if let Some(v) = bad {
                let (hv, map_v) = h.without_vertices(&[v]);
                blocked[map[v]] = true;
                for t in gallai_edmonds(&hv).a {
                    blocked[map[map_v[t]]] = true;
                }
                grown = true;
                break;
            }
        }
        if !grown {
            let barrier: Vec<Vertex> = (0..n).filter(|&v| blocked[v]).collect();
            let factor_critical = comps.iter().map(|c| is_factor_critical(&g.induced(c).0)).collect();
            let matchable = barrier_matchable(g, &barrier, &comps);
            return DeficiencyCertificate { barrier, components: comps, factor_critical, matchable };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::matching::maximum_matching;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn path_on_three_vertices() {
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let c = deficiency_certificate(&p3);
        assert_eq!(c.barrier, vec![1]);
        assert_eq!(c.components, vec![vec![0], vec![2]]);
        assert_eq!(c.deficiency(), 1);
        c.verify(&p3).unwrap();
    }

    #[test]
    fn cube_certificate_is_balanced() {
        let g = cube().to_simple();
        let c = deficiency_certificate(&g);
        assert_eq!(c.deficiency(), 0);
        assert!(c.all_factor_critical() && c.matchable);
        c.verify(&g).unwrap();
    }

    #[test]
    fn gallai_edmonds_of_a_star() {
        let star = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        let ge = gallai_edmonds(&star);
        assert_eq!(ge.d, vec![1, 2, 3]);
        assert_eq!(ge.a, vec![0]);
        assert!(ge.c.is_empty());
    }

    #[test]
    fn random_certificates_verify() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..150 {
            let n = rng.gen_range(1..=11);
            let p: f64 = rng.gen_range(0.15..0.6);
            let mut g = SimpleGraph::new(n);
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        g.add_edge(a, b);
                    }
                }
            }
            let c = deficiency_certificate(&g);
            c.verify(&g).unwrap();
            assert_eq!(c.deficiency() as usize, n - 2 * maximum_matching(&g).len());
        }
    }

    #[test]
    fn verify_rejects_tampering() {
        let g = prism(5).to_simple();
        let mut c = deficiency_certificate(&g);
        c.barrier.push(0);
        assert!(c.verify(&g).is_err());
    }
}
