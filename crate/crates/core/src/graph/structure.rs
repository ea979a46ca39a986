//! Connectivity, girth, short cycles and small edge cuts.

use super::{Edge, PlaneCubicGraph, SimpleGraph, Vertex};
use itertools::Itertools;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

/// An edge cut `[S, S̄]` together with its two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub edges: Vec<Edge>,
    /// The side containing vertex 0 comes first.
    pub sides: (Vec<Vertex>, Vec<Vertex>),
    /// One side is a single vertex.
    pub trivial: bool,
}

/// Vertex connectivity, by exhaustive search for vertex cuts smaller than the
/// minimum degree. Complete graphs on `n` vertices get `n - 1`.
pub fn connectivity(g: &PlaneCubicGraph) -> usize {
    vertex_connectivity(&g.to_simple())
}

pub(crate) fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let min_deg = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let mut blocked = vec![false; n];
    for k in 1..min_deg {
        for cut in (0..n).combinations(k) {
            for &v in &cut {
                blocked[v] = true;
            }
            let parts = g.components_avoiding(&blocked).len();
            for &v in &cut {
                blocked[v] = false;
            }
            if parts > 1 {
                return k;
            }
        }
    }
    if g.size() == n * (n - 1) / 2 {
        n - 1
    } else {
        min_deg
    }
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &PlaneCubicGraph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// All cycles of the given length, each as a sorted edge list.
pub(crate) fn cycles_of_length(g: &PlaneCubicGraph, len: usize) -> BTreeSet<Vec<Edge>> {
    let mut out = BTreeSet::new();
    let mut path = Vec::with_capacity(len);
    fn dfs(g: &PlaneCubicGraph, len: usize, path: &mut Vec<Vertex>, out: &mut BTreeSet<Vec<Edge>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if g.has_edge(last, start) {
                let mut e: Vec<Edge> =
                    path.iter().zip(path.iter().cycle().skip(1)).map(|(&a, &b)| Edge::new(a, b)).collect();
                e.sort_unstable();
                out.insert(e);
            }
            return;
        }
        for w in g.neighbors(last) {
            if w > start && !path.contains(&w) {
                path.push(w);
                dfs(g, len, path, out);
                path.pop();
            }
        }
    }
    for s in 0..g.order() {
        path.clear();
        path.push(s);
        dfs(g, len, &mut path, &mut out);
    }
    out
}

/// True iff every cycle of length 4 or 5 bounds a face.
pub fn short_cycles_facial(g: &PlaneCubicGraph) -> bool {
    let facial: BTreeSet<Vec<Edge>> =
        g.faces().faces.iter().filter(|f| f.len() == 4 || f.len() == 5).map(|f| f.edges()).collect();
    [4, 5].iter().all(|&len| cycles_of_length(g, len).iter().all(|c| facial.contains(c)))
}

/// Components of `g - removed`, as sorted vertex lists ordered by their
/// smallest vertex, with the number of remaining edges inside each.
pub(crate) fn components_without_edges(g: &PlaneCubicGraph, removed: &[Edge]) -> Vec<(Vec<Vertex>, usize)> {
    let n = g.order();
    let blocked = |a: Vertex, b: Vertex| removed.contains(&Edge::new(a, b));
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<(Vec<Vertex>, usize)> = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut degree_sum = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if blocked(v, w) {
                    continue;
                }
                degree_sum += 1;
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push((members, degree_sum / 2));
    }
    out
}

/// All minimal edge cuts (bonds) with at most `k` edges, `k <= 4`.
pub fn edge_cuts_up_to(g: &PlaneCubicGraph, k: usize) -> Vec<EdgeCut> {
    assert!(k <= 4, "edge cut enumeration is capped at 4 edges");
    let edges = g.edges();
    let mut out = Vec::new();
    for size in 1..=k {
        for subset in edges.iter().copied().combinations(size) {
            let comps = components_without_edges(g, &subset);
            if comps.len() != 2 {
                continue;
            }
            let side_of = |v: Vertex| comps[0].0.binary_search(&v).is_ok();
            if subset.iter().all(|e| side_of(e.0) != side_of(e.1)) {
                let (a, b) = (comps[0].0.clone(), comps[1].0.clone());
                let trivial = a.len() == 1 || b.len() == 1;
                out.push(EdgeCut { edges: subset, sides: (a, b), trivial });
            }
        }
    }
    out
}

/// True iff deleting at most 3 edges leaves two components that both
/// contain a cycle.
pub fn has_cyclic_cut_leq3(g: &PlaneCubicGraph) -> bool {
    let edges = g.edges();
    (1..=3).any(|size| {
        edges
            .iter()
            .copied()
            .combinations(size)
            .any(|subset| components_without_edges(g, &subset).iter().filter(|(vs, m)| *m >= vs.len()).count() >= 2)
    })
}
