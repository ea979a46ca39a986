//! Anti-Kekulé sets: edge sets whose removal keeps the graph connected but
//! destroys every perfect matching.
//!
//! The search is plain brute force over edge subsets of increasing size, in
//! lexicographic order, skipping any partial subset whose removal already
//! disconnects the graph. No structural shortcut is taken.

use crate::graph::{Edge, SimpleGraph};
use crate::matching::{has_perfect_matching, MatchingError};
use serde::Serialize;
use thiserror::Error;

/// Every (4,5,6)-fullerene has an anti-Kekulé set of at most this size.
pub const MAX_SEARCH_SIZE: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AntiKekuleError {
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("no anti-Kekulé set with at most {0} edges exists")]
    Exhausted(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AntiKekuleResult {
    pub number: usize,
    pub witness_set: Vec<Edge>,
}

pub fn is_anti_kekule_set(g: &SimpleGraph, edges: &[Edge]) -> Result<bool, AntiKekuleError> {
    for e in edges {
        if e.1 >= g.order() || !g.has_edge(e.0, e.1) {
            return Err(MatchingError::EdgeNotInGraph(*e).into());
        }
    }
    let h = g.without_edges(edges);
    Ok(h.is_connected() && !has_perfect_matching(&h))
}

/// Visits every anti-Kekulé set of exactly `size` edges in lexicographic
/// order until `visit` returns `true`.
fn search<F: FnMut(&[Edge]) -> bool>(g: &SimpleGraph, size: usize, mut visit: F) {
    let edges = g.edges();
    let mut chosen = Vec::with_capacity(size);
    fn go<F: FnMut(&[Edge]) -> bool>(
        g: &SimpleGraph,
        edges: &[Edge],
        from: usize,
        size: usize,
        chosen: &mut Vec<Edge>,
        visit: &mut F,
    ) -> bool {
        let h = g.without_edges(chosen);
        if !h.is_connected() {
            return false;
        }
        if chosen.len() == size {
            return !has_perfect_matching(&h) && visit(chosen);
        }
        let need = size - chosen.len();
        for i in from..edges.len() {
            if edges.len() - i < need {
                break;
            }
            chosen.push(edges[i]);
            let stop = go(g, edges, i + 1, size, chosen, visit);
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
    go(g, &edges, 0, size, &mut chosen, &mut visit);
}

/// All anti-Kekulé sets with exactly `size` edges.
pub fn min_anti_kekule_sets(g: &SimpleGraph, size: usize) -> Vec<Vec<Edge>> {
    let mut out = Vec::new();
    search(g, size, |s| {
        out.push(s.to_vec());
        false
    });
    out
}

/// The smallest anti-Kekulé set, searching sizes `0..=4`.
pub fn anti_kekule_number(g: &SimpleGraph) -> Result<AntiKekuleResult, AntiKekuleError> {
    for size in 0..=MAX_SEARCH_SIZE {
        let mut found = None;
        search(g, size, |s| {
            found = Some(s.to_vec());
            true
        });
        if let Some(witness_set) = found {
            return Ok(AntiKekuleResult { number: size, witness_set });
        }
    }
    Err(AntiKekuleError::Exhausted(MAX_SEARCH_SIZE))
}
