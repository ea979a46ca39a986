//! Maximum matchings, perfect-matching decisions and enumeration.

mod blossom;
mod certificate;

pub use blossom::maximum_matching;
pub use certificate::{deficiency_certificate, gallai_edmonds, DeficiencyCertificate, GallaiEdmonds};

use crate::graph::{Edge, SimpleGraph, Vertex};
use serde::Serialize;
use thiserror::Error;

/// Largest order accepted by perfect-matching counting and enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(Edge),
    #[error("edges {0} and {1} share an endpoint")]
    SharedEndpoint(Edge, Edge),
    #[error("graph has {0} vertices; enumeration supports at most 64")]
    TooLarge(usize),
}

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Default)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Sorts the edges; does not check disjointness (see [`Matching::check_in`]).
    pub fn new(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.edges.iter().flat_map(|e| [e.0, e.1]).collect();
        v.sort_unstable();
        v
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.touches(v))
    }

    pub fn is_perfect_in(&self, g: &SimpleGraph) -> bool {
        2 * self.len() == g.order() && self.check_in(g).is_ok()
    }

    /// Verifies that every edge is present in `g` and no two edges meet.
    pub fn check_in(&self, g: &SimpleGraph) -> Result<(), MatchingError> {
        for (i, e) in self.edges.iter().enumerate() {
            if e.0 >= g.order() || e.1 >= g.order() || !g.has_edge(e.0, e.1) {
                return Err(MatchingError::EdgeNotInGraph(*e));
            }
            if let Some(f) = self.edges[..i].iter().find(|f| f.shares_vertex(e)) {
                return Err(MatchingError::SharedEndpoint(*f, *e));
            }
        }
        Ok(())
    }
}

pub fn matching_number(g: &SimpleGraph) -> usize {
    maximum_matching(g).len()
}

pub fn has_perfect_matching(g: &SimpleGraph) -> bool {
    g.order() % 2 == 0 && 2 * matching_number(g) == g.order()
}

/// True iff `G - V(m)` has a perfect matching.
pub fn extends_to_perfect(g: &SimpleGraph, m: &Matching) -> Result<bool, MatchingError> {
    m.check_in(g)?;
    let (rest, _) = g.without_vertices(&m.vertices());
    Ok(has_perfect_matching(&rest))
}

/// True iff `G - v` has a perfect matching for every vertex `v`.
pub fn is_factor_critical(g: &SimpleGraph) -> bool {
    if g.order() % 2 == 0 {
        return g.order() == 0;
    }
    (0..g.order()).all(|v| has_perfect_matching(&g.without_vertices(&[v]).0))
}

/// Lazily enumerates perfect matchings in lexicographic order of their
/// sorted edge lists.
pub struct PerfectMatchings<'a> {
    g: &'a SimpleGraph,
    used: u64,
    full: u64,
    stack: Vec<(Vertex, usize)>,
    current: Vec<Edge>,
    started: bool,
    done: bool,
}

impl<'a> PerfectMatchings<'a> {
    fn lowest_free(&self) -> Option<Vertex> {
        let free = !self.used & self.full;
        (free != 0).then(|| free.trailing_zeros() as Vertex)
    }

    fn undo_last(&mut self) {
        let e = self.current.pop().expect("an edge to undo");
        self.used &= !(1u64 << e.0 | 1u64 << e.1);
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.g.order() % 2 == 1 {
                self.done = true;
                return None;
            }
            match self.lowest_free() {
                None => {
                    self.done = true;
                    return Some(Matching::default());
                }
                Some(v) => self.stack.push((v, 0)),
            }
        } else {
            self.undo_last();
        }
        loop {
            let used = self.used;
            let Some((v, i)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let v = *v;
            let adj = self.g.neighbors(v);
            let mut chosen = None;
            while *i < adj.len() {
                let w = adj[*i];
                *i += 1;
                if used >> w & 1 == 0 {
                    chosen = Some(w);
                    break;
                }
            }
            match chosen {
                Some(w) => {
                    self.used |= 1u64 << v | 1u64 << w;
                    self.current.push(Edge::new(v, w));
                    match self.lowest_free() {
                        None => return Some(Matching { edges: self.current.clone() }),
                        Some(u) => self.stack.push((u, 0)),
                    }
                }
                None => {
                    self.stack.pop();
                    if self.stack.is_empty() {
                        self.done = true;
                        return None;
                    }
                    self.undo_last();
                }
            }
        }
    }
}

pub fn perfect_matchings(g: &SimpleGraph) -> Result<PerfectMatchings<'_>, MatchingError> {
    let n = g.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(MatchingError::TooLarge(n));
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(PerfectMatchings { g, used: 0, full, stack: Vec::new(), current: Vec::new(), started: false, done: false })
}

pub fn count_perfect_matchings(g: &SimpleGraph) -> Result<u64, MatchingError> {
    let n = g.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(MatchingError::TooLarge(n));
    }
    if n % 2 == 1 {
        return Ok(0);
    }
    fn count(g: &SimpleGraph, used: u64, full: u64) -> u64 {
        let free = !used & full;
        if free == 0 {
            return 1;
        }
        let v = free.trailing_zeros() as usize;
        g.neighbors(v)
            .iter()
            .filter(|&&w| used >> w & 1 == 0)
            .map(|&w| count(g, used | 1u64 << v | 1u64 << w, full))
            .sum()
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(count(g, 0, full))
}
