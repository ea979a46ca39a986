//! Isomorph-free generation of (4,5,6)-fullerenes.
//!
//! The main generator works on the dual side: a (4,5,6)-fullerene on `n`
//! vertices is dual to a plane triangulation on `n/2 + 2` vertices whose
//! degrees are 4, 5 or 6. All triangulations are grown from K4 by vertex
//! splitting (the inverse of edge contraction, which reaches every
//! triangulation), deduplicated by canonical code at each level, and the
//! ones with admissible degrees are dualized.
//!
//! [`naive_enumerate`] is an independent cross-check that searches cubic
//! rotation systems directly.

mod naive;
mod triangulation;

pub use naive::naive_enumerate;

use crate::graph::{canonical_code, PlaneCubicGraph};
use crate::planar_code::decode_graph;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;
use triangulation::Triangulation;

/// Default vertex bound for [`enumerate_fullerenes`].
pub const DEFAULT_BOUND: usize = 20;
/// Vertex bound for [`naive_enumerate`].
pub const NAIVE_BOUND: usize = 14;
/// Environment variable overriding [`DEFAULT_BOUND`].
pub const BOUND_ENV: &str = "FULLEX_NMAX";
/// Smallest (4,5,6)-fullerene is the cube.
pub const MIN_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("cubic graphs have even order; {0} is odd")]
    OddVertexCount(usize),
    #[error("{n} vertices exceeds the enumeration bound {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("no (4,5,6)-fullerene has fewer than 8 vertices (asked for {0})")]
    BelowMinimum(usize),
}

/// The configured bound: `FULLEX_NMAX` if set and parseable, else 20.
pub fn configured_bound() -> usize {
    std::env::var(BOUND_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BOUND)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Catalogue {
    pub n: usize,
    /// Each graph is stored in its canonical labelling, sorted by code.
    #[serde(skip)]
    pub graphs: Vec<PlaneCubicGraph>,
    #[serde(skip)]
    pub codes: Vec<Vec<u8>>,
    /// Counts keyed by `"p4,p5,p6"`.
    pub counts: BTreeMap<String, usize>,
}

impl Catalogue {
    pub(crate) fn from_codes(n: usize, codes: BTreeSet<Vec<u8>>) -> Self {
        let graphs: Vec<PlaneCubicGraph> =
            codes.iter().map(|c| decode_graph(c).expect("canonical code decodes")).collect();
        let mut counts = BTreeMap::new();
        for g in &graphs {
            let inv = g.faces();
            *counts.entry(format!("{},{},{}", inv.p4, inv.p5, inv.p6)).or_insert(0) += 1;
        }
        Catalogue { n, graphs, codes: codes.into_iter().collect(), counts }
    }

    /// Builds a catalogue from arbitrary graphs, deduplicating by code.
    pub fn from_graphs<'a, I: IntoIterator<Item = &'a PlaneCubicGraph>>(n: usize, graphs: I) -> Self {
        Self::from_codes(n, graphs.into_iter().map(canonical_code).collect())
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn code_set(&self) -> BTreeSet<Vec<u8>> {
        self.codes.iter().cloned().collect()
    }

    pub fn contains(&self, g: &PlaneCubicGraph) -> bool {
        self.codes.binary_search(&canonical_code(g)).is_ok()
    }
}

pub(crate) fn check_order(n: usize, bound: usize) -> Result<(), EnumError> {
    if n % 2 == 1 {
        return Err(EnumError::OddVertexCount(n));
    }
    if n < MIN_ORDER {
        return Err(EnumError::BelowMinimum(n));
    }
    if n > bound {
        return Err(EnumError::BoundExceeded { n, bound });
    }
    Ok(())
}

/// All (4,5,6)-fullerenes on `n` vertices, up to isomorphism.
pub fn enumerate_fullerenes(n: usize) -> Result<Catalogue, EnumError> {
    Ok(enumerate_range(n, n)?.pop().expect("one catalogue"))
}

/// Catalogues for every even order in `lo..=hi`, sharing one generation run.
pub fn enumerate_range(lo: usize, hi: usize) -> Result<Vec<Catalogue>, EnumError> {
    let bound = configured_bound();
    check_order(lo, bound)?;
    check_order(hi, bound)?;
    let max_dual = hi / 2 + 2;
    let admissible = |t: &Triangulation| t.degrees().all(|d| (4..=6).contains(&d));
    let mut out = Vec::new();
    let mut level: Vec<Triangulation> = vec![Triangulation::k4()];
    for v in 5..=max_dual {
        let last = v == max_dual;
        let mut next: BTreeMap<Vec<u8>, Triangulation> = BTreeMap::new();
        for t in &level {
            for child in t.splits() {
                if last && !admissible(&child) {
                    continue;
                }
                let (code, canon) = child.canonical();
                next.entry(code).or_insert(canon);
            }
        }
        level = next.into_values().collect();
        let n = 2 * v - 4;
        if n >= lo && n % 2 == 0 {
            let codes: BTreeSet<Vec<u8>> = level
                .iter()
                .filter(|t| admissible(t))
                .map(|t| {
                    let dual = t.dual();
                    debug_assert!(dual.validate_fullerene().is_ok());
                    canonical_code(&dual)
                })
                .collect();
            out.push(Catalogue::from_codes(n, codes));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn cube_is_the_only_fullerene_on_eight_vertices() {
        let c = enumerate_fullerenes(8).unwrap();
        assert_eq!(c.len(), 1);
        assert!(is_isomorphic(&c.graphs[0], &cube()));
    }

    #[test]
    fn order_errors() {
        assert_eq!(enumerate_fullerenes(9), Err(EnumError::OddVertexCount(9)));
        assert_eq!(enumerate_fullerenes(6), Err(EnumError::BelowMinimum(6)));
        assert!(matches!(enumerate_fullerenes(400), Err(EnumError::BoundExceeded { .. })));
    }

    #[test]
    fn members_are_valid_and_distinct() {
        for cat in enumerate_range(8, 16).unwrap() {
            for (g, code) in cat.graphs.iter().zip(&cat.codes) {
                let inv = g.validate_fullerene().unwrap();
                assert_eq!(inv.curvature_sum(), 12);
                assert_eq!(&canonical_code(g), code);
            }
            assert!(cat.codes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn known_small_members() {
        let c10 = enumerate_fullerenes(10).unwrap();
        assert!(c10.contains(&prism(5)));
        let c12 = enumerate_fullerenes(12).unwrap();
        assert!(c12.contains(&prism(6)));
        let c20 = enumerate_fullerenes(20).unwrap();
        assert!(c20.contains(&dodecahedron()));
    }
}
