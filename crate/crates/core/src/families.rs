//! The tube family and derived selection of sporadic non-2-extendable graphs.
//!
//! `T_n` consists of `n` layers of hexagons between two caps, each cap being
//! three quadrilaterals around a common vertex. Along the tube there are
//! `n + 1` concentric 6-cycles, the two cap boundaries included, and the
//! three edges joining consecutive cycles are the traversed edges of that
//! gap. Gaps are numbered `1..=n` from the first cap.
//!
//! For perfect matchings the three spokes at each cap center behave like one
//! more layer at either end: every perfect matching uses exactly one edge of
//! each of the `n + 2` layers (spokes, gap 1, ..., gap n, spokes), and any
//! such choice extends to exactly one perfect matching. Numbering the layers
//! `1..=n + 2`, the traversed-edge layers are `2..=n + 1`.

use crate::antikekule::anti_kekule_number;
use crate::enumerator::{enumerate_fullerenes, EnumError};
use crate::extendability::nonextendable_pairs;
use crate::graph::{canonical_form, Edge, PlaneCubicGraph, SimpleGraph, Vertex};
use crate::matching::{count_perfect_matchings, perfect_matchings, DeficiencyCertificate, Matching, MatchingError};
use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

/// Sizes at which sporadic candidates are selected.
pub const SPORADIC_SIZES: [usize; 4] = [12, 14, 18, 20];

/// Largest tube accepted by the perfect-matching structure check.
pub const MAX_PM_CHECK_LAYERS: usize = 6;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("tube needs at least one layer, got {0}")]
    BadLayerCount(usize),
    #[error("sporadic selection is defined for 12, 14, 18 and 20 vertices, not {0}")]
    EnumerationUnavailable(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TubeDescriptor {
    pub n_layers: usize,
    pub cap_centers: [Vertex; 2],
    /// `n_layers + 1` cycles, cap boundary to cap boundary, in cyclic order.
    pub concentric_cycles: Vec<[Vertex; 6]>,
    /// Traversed edges of gaps `1..=n_layers`, each sorted.
    pub traversed_edges: Vec<Vec<Edge>>,
    /// The three edges at each cap center, in cap order.
    pub cap_spokes: [Vec<Edge>; 2],
}

impl TubeDescriptor {
    /// Checks the descriptor against `g`: caps of three quadrilaterals,
    /// non-facial 6-cycles, disjoint traversed sets that are edge cuts.
    pub fn check(&self, g: &PlaneCubicGraph) -> Result<(), String> {
        let inv = g.faces();
        for &c in &self.cap_centers {
            let quads = inv.faces.iter().filter(|f| f.len() == 4 && f.vertices().contains(&c)).count();
            if quads != 3 {
                return Err(format!("cap center {c} lies on {quads} quadrilaterals"));
            }
        }
        let facial: Vec<Vec<Edge>> = inv.faces.iter().map(|f| f.edges()).collect();
        for cyc in &self.concentric_cycles {
            let mut edges = Vec::new();
            for i in 0..6 {
                let (a, b) = (cyc[i], cyc[(i + 1) % 6]);
                if !g.has_edge(a, b) {
                    return Err(format!("{a}-{b} is not an edge"));
                }
                edges.push(Edge::new(a, b));
            }
            edges.sort_unstable();
            if facial.contains(&edges) {
                return Err("a concentric 6-cycle bounds a face".into());
            }
        }
        let all: Vec<Edge> = self.traversed_edges.iter().flatten().copied().collect();
        if all.iter().unique().count() != all.len() {
            return Err("traversed edge sets overlap".into());
        }
        for gap in &self.traversed_edges {
            if crate::graph::components_without_edges(g, gap).len() != 2 {
                return Err("traversed edges do not form an edge cut".into());
            }
        }
        Ok(())
    }

    pub fn is_traversed(&self, e: &Edge) -> Option<usize> {
        self.traversed_edges.iter().position(|gap| gap.contains(e))
    }

    /// All `n + 2` layers: spokes of the first cap, the gaps, spokes of the
    /// second cap.
    pub fn layers(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![self.cap_spokes[0].clone()];
        out.extend(self.traversed_edges.iter().cloned());
        out.push(self.cap_spokes[1].clone());
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Slot {
    Center(usize),
    Ring(usize, usize),
}

/// Builds `T_n` with its descriptor. The vertices are numbered so that the
/// first three are the cap corners of gap 1 and the next three their
/// partners, which makes the gap-1 traversed edges `0-3`, `1-4` and `2-5`.
pub fn build_tube(n: usize) -> Result<(PlaneCubicGraph, TubeDescriptor), FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadLayerCount(n));
    }
    let mut slots = vec![
        Slot::Ring(0, 1),
        Slot::Ring(0, 3),
        Slot::Ring(0, 5),
        Slot::Ring(1, 0),
        Slot::Ring(1, 2),
        Slot::Ring(1, 4),
        Slot::Center(0),
    ];
    for ring in 0..=n {
        for p in 0..6 {
            if !slots.contains(&Slot::Ring(ring, p)) {
                slots.push(Slot::Ring(ring, p));
            }
        }
    }
    slots.push(Slot::Center(1));
    let id = |s: Slot| slots.iter().position(|&x| x == s).expect("slot exists");

    // Ring g, position p sits at height g and angle (p + g) * 60 degrees on a
    // unit cylinder; the cap centers sit on the axis beyond the end rings.
    let position = |s: Slot| -> [f64; 3] {
        match s {
            Slot::Center(0) => [0.0, 0.0, -0.5],
            Slot::Center(_) => [0.0, 0.0, n as f64 + 0.5],
            Slot::Ring(g, p) => {
                let t = (p + g) as f64 * std::f64::consts::FRAC_PI_3;
                [t.cos(), t.sin(), g as f64]
            }
        }
    };
    let normal = |s: Slot| -> [f64; 3] {
        match s {
            Slot::Center(0) => [0.0, 0.0, -1.0],
            Slot::Center(_) => [0.0, 0.0, 1.0],
            Slot::Ring(g, p) => {
                let t = (p + g) as f64 * std::f64::consts::FRAC_PI_3;
                [t.cos(), t.sin(), 0.0]
            }
        }
    };
    let neighbors = |s: Slot| -> Vec<Slot> {
        match s {
            Slot::Center(0) => vec![Slot::Ring(0, 0), Slot::Ring(0, 2), Slot::Ring(0, 4)],
            Slot::Center(_) => vec![Slot::Ring(n, 1), Slot::Ring(n, 3), Slot::Ring(n, 5)],
            Slot::Ring(g, p) => {
                let mut v = vec![Slot::Ring(g, (p + 1) % 6), Slot::Ring(g, (p + 5) % 6)];
                if p % 2 == 0 {
                    v.push(if g == 0 { Slot::Center(0) } else { Slot::Ring(g - 1, p + 1) });
                } else {
                    v.push(if g == n { Slot::Center(1) } else { Slot::Ring(g + 1, p - 1) });
                }
                v
            }
        }
    };
    let cross =
        |a: [f64; 3], b: [f64; 3]| [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];

    let mut rot = vec![Vec::new(); slots.len()];
    for &s in &slots {
        let p = position(s);
        let nrm = normal(s);
        let t1 = if matches!(s, Slot::Center(_)) { [1.0, 0.0, 0.0] } else { [0.0, 0.0, 1.0] };
        let t2 = cross(nrm, t1);
        let mut nb: Vec<(f64, Vertex)> = neighbors(s)
            .into_iter()
            .map(|q| {
                let pq = position(q);
                let d = [pq[0] - p[0], pq[1] - p[1], pq[2] - p[2]];
                (dot(d, t2).atan2(dot(d, t1)), id(q))
            })
            .collect();
        // Clockwise seen from outside: decreasing angle.
        nb.sort_by(|a, b| b.0.total_cmp(&a.0));
        rot[id(s)] = nb.into_iter().map(|(_, v)| v).collect();
    }
    let g = PlaneCubicGraph::from_rotation(rot).expect("tube construction is a valid plane cubic graph");

    let concentric_cycles = (0..=n).map(|ring| std::array::from_fn(|p| id(Slot::Ring(ring, p)))).collect();
    let traversed_edges = (1..=n)
        .map(|gap| {
            let mut e: Vec<Edge> =
                [1, 3, 5].iter().map(|&p| Edge::new(id(Slot::Ring(gap - 1, p)), id(Slot::Ring(gap, p - 1)))).collect();
            e.sort_unstable();
            e
        })
        .collect();
    let spokes = |c: usize| {
        let center = id(Slot::Center(c));
        let mut e: Vec<Edge> = g.neighbors(center).map(|w| Edge::new(center, w)).collect();
        e.sort_unstable();
        e
    };
    let desc = TubeDescriptor {
        n_layers: n,
        cap_centers: [id(Slot::Center(0)), id(Slot::Center(1))],
        concentric_cycles,
        traversed_edges,
        cap_spokes: [spokes(0), spokes(1)],
    };
    Ok((g, desc))
}

/// Recognizes `T_n` by face counts, vertex count `6n + 8` and an explicit
/// isomorphism with `build_tube(n)`; the descriptor is carried over along
/// that isomorphism.
pub fn recognize_tube(g: &PlaneCubicGraph) -> Option<TubeDescriptor> {
    let inv = g.faces();
    let v = g.order();
    if inv.p5 != 0 || inv.p4 != 6 || v < 14 || (v - 8) % 6 != 0 {
        return None;
    }
    let layers = (v - 8) / 6;
    let (t, desc) = build_tube(layers).ok()?;
    let fg = canonical_form(g);
    let ft = canonical_form(&t);
    if fg.code != ft.code {
        return None;
    }
    let mut from_canon = vec![0; v];
    for (x, &c) in fg.labeling.iter().enumerate() {
        from_canon[c] = x;
    }
    let map = |x: Vertex| from_canon[ft.labeling[x]];
    let map_set = |set: &Vec<Edge>| {
        let mut e: Vec<Edge> = set.iter().map(|e| Edge::new(map(e.0), map(e.1))).collect();
        e.sort_unstable();
        e
    };
    let mapped = TubeDescriptor {
        n_layers: layers,
        cap_centers: desc.cap_centers.map(map),
        concentric_cycles: desc.concentric_cycles.iter().map(|c| c.map(map)).collect(),
        traversed_edges: desc.traversed_edges.iter().map(map_set).collect(),
        cap_spokes: [map_set(&desc.cap_spokes[0]), map_set(&desc.cap_spokes[1])],
    };
    debug_assert!(mapped.check(g).is_ok());
    Some(mapped)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TubePmReport {
    pub n_layers: usize,
    pub perfect_matchings: u64,
    /// Sizes of the `n + 2` layers, cap spokes included.
    pub layer_sizes: Vec<usize>,
    /// Every perfect matching has exactly one traversed edge in every gap.
    pub one_per_gap: bool,
    /// Every perfect matching has exactly one edge in every layer.
    pub one_per_layer: bool,
    /// Every choice of one edge per layer extends to exactly one perfect matching.
    pub selections_extend_uniquely: bool,
    /// Distinct numbers of extensions of a choice of one traversed edge per
    /// gap alone (cap spokes left free).
    pub gap_selection_extensions: Vec<u64>,
    /// The count equals the product of the layer sizes.
    pub count_is_product: bool,
}

impl TubePmReport {
    pub fn holds(&self) -> bool {
        self.one_per_gap && self.one_per_layer && self.selections_extend_uniquely && self.count_is_product
    }
}

fn extension_count(g: &SimpleGraph, sel: &[&Edge]) -> Result<u64, MatchingError> {
    let vs: Vec<Vertex> = sel.iter().flat_map(|e| [e.0, e.1]).collect();
    count_perfect_matchings(&g.without_vertices(&vs).0)
}

pub fn verify_tube_pm_structure(n: usize) -> Result<TubePmReport, FamilyError> {
    if !(1..=MAX_PM_CHECK_LAYERS).contains(&n) {
        return Err(FamilyError::BadLayerCount(n));
    }
    let (t, desc) = build_tube(n)?;
    let g = t.to_simple();
    let layers = desc.layers();
    let one_in = |m: &Matching, set: &Vec<Edge>| m.edges().iter().filter(|e| set.contains(e)).count() == 1;
    let mut count = 0u64;
    let mut one_per_gap = true;
    let mut one_per_layer = true;
    for m in perfect_matchings(&g)? {
        count += 1;
        one_per_gap &= desc.traversed_edges.iter().all(|gap| one_in(&m, gap));
        one_per_layer &= layers.iter().all(|layer| one_in(&m, layer));
    }
    let mut selections_extend_uniquely = true;
    for sel in layers.iter().multi_cartesian_product() {
        selections_extend_uniquely &= extension_count(&g, &sel)? == 1;
    }
    let mut gap_selection_extensions = Vec::new();
    for sel in desc.traversed_edges.iter().multi_cartesian_product() {
        gap_selection_extensions.push(extension_count(&g, &sel)?);
    }
    gap_selection_extensions.sort_unstable();
    gap_selection_extensions.dedup();
    let layer_sizes: Vec<usize> = layers.iter().map(Vec::len).collect();
    let product: u64 = layer_sizes.iter().map(|&s| s as u64).product();
    Ok(TubePmReport {
        n_layers: n,
        perfect_matchings: count,
        layer_sizes,
        one_per_gap,
        one_per_layer,
        selections_extend_uniquely,
        gap_selection_extensions,
        count_is_product: count == product,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SporadicCandidate {
    #[serde(skip)]
    pub graph: PlaneCubicGraph,
    pub n: usize,
    pub code: String,
    pub witness_pair: Matching,
    pub certificate: DeficiencyCertificate,
    pub ak: usize,
}

/// Fullerenes on `n` vertices that are non-2-extendable, have anti-Kekulé
/// number 3 and are not tubes. The witness pair is the first
/// non-extendable pair in lexicographic order.
pub fn sporadic_candidates(n: usize) -> Result<Vec<SporadicCandidate>, FamilyError> {
    if !SPORADIC_SIZES.contains(&n) {
        return Err(FamilyError::EnumerationUnavailable(n));
    }
    let cat = enumerate_fullerenes(n)?;
    Ok(cat.graphs.iter().zip(&cat.codes).filter_map(|(g, code)| sporadic_candidate(g, code)).collect())
}

pub(crate) fn sporadic_candidate(g: &PlaneCubicGraph, code: &[u8]) -> Option<SporadicCandidate> {
    let s = g.to_simple();
    let first = nonextendable_pairs(&s).ok()?.into_iter().next()?;
    let ak = anti_kekule_number(&s).ok()?.number;
    if ak != 3 || recognize_tube(g).is_some() {
        return None;
    }
    Some(SporadicCandidate {
        graph: g.clone(),
        n: g.order(),
        code: hex::encode(code),
        witness_pair: first.pair,
        certificate: first.certificate,
        ak,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extendability::is_k_extendable;
    use crate::graph::fixtures::*;
    use crate::graph::{has_cyclic_cut_leq3, is_isomorphic};

    #[test]
    fn tube_shapes() {
        for n in 1..=6 {
            let (t, desc) = build_tube(n).unwrap();
            assert_eq!(t.order(), 6 * n + 8);
            let inv = t.validate_fullerene().unwrap();
            assert_eq!((inv.p4, inv.p5), (6, 0));
            assert_eq!(t.order() + inv.faces.len(), t.size() + 2);
            desc.check(&t).unwrap();
            assert_eq!(desc.concentric_cycles.len(), n + 1);
            assert_eq!(desc.traversed_edges.len(), n);
            assert_eq!(desc.traversed_edges[0], vec![Edge(0, 3), Edge(1, 4), Edge(2, 5)]);
        }
        assert!(matches!(build_tube(0), Err(FamilyError::BadLayerCount(0))));
    }

    #[test]
    fn recognition_round_trip() {
        for n in 1..=6 {
            let (t, _) = build_tube(n).unwrap();
            let shuffled = t.mirror().relabel(&(0..t.order()).rev().collect::<Vec<_>>());
            let d = recognize_tube(&shuffled).unwrap();
            assert_eq!(d.n_layers, n);
            d.check(&shuffled).unwrap();
        }
        assert!(recognize_tube(&cube()).is_none());
        assert!(recognize_tube(&dodecahedron()).is_none());
        assert!(recognize_tube(&prism(6)).is_none());
    }

    #[test]
    fn traversed_sets_are_cyclic_cuts() {
        let (t, desc) = build_tube(3).unwrap();
        assert!(has_cyclic_cut_leq3(&t));
        for gap in &desc.traversed_edges {
            let comps = crate::graph::components_without_edges(&t, gap);
            assert_eq!(comps.len(), 2);
            assert!(comps.iter().all(|(vs, m)| *m >= vs.len()));
        }
    }

    #[test]
    fn tube_pm_structure() {
        for n in 1..=4 {
            let r = verify_tube_pm_structure(n).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!(r.perfect_matchings, 3u64.pow(n as u32 + 2));
            // Fixing only the gaps leaves both caps free: 3 choices each.
            assert_eq!(r.gap_selection_extensions, vec![9]);
        }
        assert!(verify_tube_pm_structure(7).is_err());
    }

    #[test]
    fn tubes_are_not_two_extendable() {
        for n in 1..=4 {
            let (t, desc) = build_tube(n).unwrap();
            let r = is_k_extendable(&t.to_simple(), 2).unwrap();
            assert!(!r.extendable);
            let w = r.witness.unwrap();
            assert_eq!(w.edges(), &[Edge(0, 3), Edge(1, 4)]);
            assert_eq!(desc.is_traversed(&w.edges()[0]), Some(0));
            let cert = r.certificate.unwrap();
            assert_eq!(cert.deficiency(), 2);
            assert!(cert.all_factor_critical());
        }
    }

    #[test]
    fn tubes_are_pairwise_distinct() {
        let t1 = build_tube(1).unwrap().0;
        let t2 = build_tube(2).unwrap().0;
        assert!(!is_isomorphic(&t1, &t2));
        assert!(!is_isomorphic(&t1, &cube()));
    }

    #[test]
    fn sporadic_size_guard() {
        assert!(matches!(sporadic_candidates(8), Err(FamilyError::EnumerationUnavailable(8))));
    }
}
