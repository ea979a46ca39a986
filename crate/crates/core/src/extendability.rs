//! k-extendability decisions with witnesses and certificates.
//!
//! A connected graph with at least `2k + 2` vertices and a perfect matching
//! is k-extendable when every matching of size `k` lies in a perfect
//! matching. Matchings are scanned in lexicographic order of their sorted
//! edge indices, so the reported witness is the first failing matching.

use crate::graph::{Edge, SimpleGraph};
use crate::matching::{deficiency_certificate, has_perfect_matching, DeficiencyCertificate, Matching};
use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

/// No planar graph is 3-extendable, so larger k is never asked for.
pub const MAX_K: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendError {
    #[error("{n} vertices is fewer than 2k + 2 = {needed}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not connected")]
    Disconnected,
    #[error("k = {0} exceeds the supported maximum of 3")]
    KTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendabilityReport {
    pub k: usize,
    pub extendable: bool,
    /// A size-k matching contained in no perfect matching.
    pub witness: Option<Matching>,
    /// Certificate for `G - V(witness)`.
    pub certificate: Option<DeficiencyCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonExtendablePair {
    pub pair: Matching,
    pub certificate: DeficiencyCertificate,
}

fn check_preconditions(g: &SimpleGraph, k: usize) -> Result<(), ExtendError> {
    if k > MAX_K {
        return Err(ExtendError::KTooLarge(k));
    }
    let needed = 2 * k + 2;
    if g.order() < needed {
        return Err(ExtendError::TooFewVertices { n: g.order(), needed });
    }
    if !g.is_connected() {
        return Err(ExtendError::Disconnected);
    }
    if !has_perfect_matching(g) {
        return Err(ExtendError::NoPerfectMatching);
    }
    Ok(())
}

/// Size-k matchings in lexicographic order of edge indices.
fn matchings_of_size(edges: &[Edge], k: usize) -> impl Iterator<Item = Vec<Edge>> + '_ {
    edges
        .iter()
        .copied()
        .combinations(k)
        .filter(|c| c.iter().enumerate().all(|(i, e)| c[..i].iter().all(|f| !f.shares_vertex(e))))
}

fn extends(g: &SimpleGraph, m: &[Edge]) -> bool {
    let vs: Vec<usize> = m.iter().flat_map(|e| [e.0, e.1]).collect();
    has_perfect_matching(&g.without_vertices(&vs).0)
}

pub fn is_k_extendable(g: &SimpleGraph, k: usize) -> Result<ExtendabilityReport, ExtendError> {
    check_preconditions(g, k)?;
    let edges = g.edges();
    let failing = matchings_of_size(&edges, k).find(|m| !extends(g, m));
    Ok(match failing {
        None => ExtendabilityReport { k, extendable: true, witness: None, certificate: None },
        Some(m) => {
            let witness = Matching::new(m);
            let (rest, map) = g.without_vertices(&witness.vertices());
            let certificate = relabel_certificate(deficiency_certificate(&rest), &map);
            ExtendabilityReport { k, extendable: false, witness: Some(witness), certificate: Some(certificate) }
        }
    })
}

/// Largest `k <= cap` for which `g` is k-extendable; 0 if not even
/// 1-extendable. Values of k that need more vertices than `g` has stop the
/// scan.
pub fn extendability_number(g: &SimpleGraph, cap: usize) -> Result<usize, ExtendError> {
    if cap > MAX_K {
        return Err(ExtendError::KTooLarge(cap));
    }
    if !has_perfect_matching(g) {
        return Err(ExtendError::NoPerfectMatching);
    }
    for k in 1..=cap {
        match is_k_extendable(g, k) {
            Ok(r) if r.extendable => continue,
            Ok(_) | Err(ExtendError::TooFewVertices { .. }) => return Ok(k - 1),
            Err(e) => return Err(e),
        }
    }
    Ok(cap)
}

/// Every size-2 matching with no perfect-matching extension, with the
/// certificate of `G - V(pair)` in the original vertex ids.
pub fn nonextendable_pairs(g: &SimpleGraph) -> Result<Vec<NonExtendablePair>, ExtendError> {
    if !has_perfect_matching(g) {
        return Err(ExtendError::NoPerfectMatching);
    }
    let edges = g.edges();
    Ok(matchings_of_size(&edges, 2)
        .filter(|m| !extends(g, m))
        .map(|m| {
            let pair = Matching::new(m);
            let (rest, map) = g.without_vertices(&pair.vertices());
            let certificate = relabel_certificate(deficiency_certificate(&rest), &map);
            NonExtendablePair { pair, certificate }
        })
        .collect())
}

/// Translates a certificate computed on an induced subgraph back to the ids
/// of the host graph.
pub(crate) fn relabel_certificate(c: DeficiencyCertificate, map: &[usize]) -> DeficiencyCertificate {
    let tr = |vs: Vec<usize>| -> Vec<usize> {
        let mut out: Vec<usize> = vs.into_iter().map(|v| map[v]).collect();
        out.sort_unstable();
        out
    };
    let mut comps: Vec<(Vec<usize>, bool)> = c.components.into_iter().map(tr).zip(c.factor_critical).collect();
    comps.sort();
    DeficiencyCertificate {
        barrier: tr(c.barrier),
        factor_critical: comps.iter().map(|(_, f)| *f).collect(),
        components: comps.into_iter().map(|(c, _)| c).collect(),
        matchable: c.matchable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn cube_is_two_extendable() {
        let g = cube().to_simple();
        assert!(is_k_extendable(&g, 1).unwrap().extendable);
        assert!(is_k_extendable(&g, 2).unwrap().extendable);
        assert_eq!(extendability_number(&g, 3).unwrap(), 2);
        assert!(nonextendable_pairs(&g).unwrap().is_empty());
    }

    #[test]
    fn cube_is_not_three_extendable() {
        let r = is_k_extendable(&cube().to_simple(), 3).unwrap();
        assert!(!r.extendable);
        let w = r.witness.unwrap();
        assert_eq!(w.len(), 3);
        let cert = r.certificate.unwrap();
        assert!(cert.deficiency() > 0);
    }

    #[test]
    fn dodecahedron_is_two_extendable() {
        let g = dodecahedron().to_simple();
        assert!(is_k_extendable(&g, 2).unwrap().extendable);
        assert!(!is_k_extendable(&g, 3).unwrap().extendable);
    }

    #[test]
    fn preconditions() {
        let k4 = k4().to_simple();
        assert_eq!(is_k_extendable(&k4, 2), Err(ExtendError::TooFewVertices { n: 4, needed: 6 }));
        assert_eq!(is_k_extendable(&k4, 4), Err(ExtendError::KTooLarge(4)));
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(extendability_number(&p3, 2), Err(ExtendError::NoPerfectMatching));
        let two_squares = SimpleGraph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]);
        assert_eq!(is_k_extendable(&two_squares, 1), Err(ExtendError::Disconnected));
        assert_eq!(extendability_number(&k4, 3).unwrap(), 1);
    }

    #[test]
    fn pentagonal_prism_has_certified_bad_pairs() {
        let g = prism(5).to_simple();
        let pairs = nonextendable_pairs(&g).unwrap();
        for p in &pairs {
            let (rest, _) = g.without_vertices(&p.pair.vertices());
            assert!(!has_perfect_matching(&rest));
            assert_eq!(p.certificate.deficiency(), 2);
            assert!(p.certificate.all_factor_critical());
        }
        let r = is_k_extendable(&g, 2).unwrap();
        assert_eq!(r.extendable, pairs.is_empty());
        if let Some(w) = r.witness {
            assert_eq!(w, pairs[0].pair);
        }
    }
}
