//! Per-graph analysis record: everything the claims look at, computed once.

use crate::antikekule::anti_kekule_number;
use crate::extendability::{is_k_extendable, nonextendable_pairs, NonExtendablePair};
use crate::families::recognize_tube;
use crate::graph::{
    canonical_code, connectivity, edge_cuts_up_to, girth, has_cyclic_cut_leq3, short_cycles_facial, PlaneCubicGraph,
    SimpleGraph,
};
use serde::{Deserialize, Serialize};

/// Bumped whenever the meaning of a field changes; cached records with a
/// different stamp are recomputed.
pub const ANALYSIS_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+a1");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    pub code: String,
    pub n: usize,
    pub p4: usize,
    pub p5: usize,
    pub p6: usize,
    /// Faces of any other length.
    pub other_faces: usize,
    pub face_count: usize,
    pub connectivity: usize,
    pub girth: Option<usize>,
    pub short_cycles_facial: bool,
    pub nontrivial_3cuts: usize,
    pub cyclic_cut_leq3: bool,
    pub tube_layers: Option<usize>,
    pub one_extendable: bool,
    pub two_extendable: bool,
    pub three_extendable: bool,
    pub extendability: usize,
    pub nonextendable_pairs: usize,
    /// First non-extendable pair in lexicographic order.
    pub witness: Option<[(usize, usize); 2]>,
    /// Problems found in the certificates of non-extendable pairs.
    pub certificate_issues: Vec<String>,
    /// Problems found in the edge-count bookkeeping around those certificates.
    pub component_issues: Vec<String>,
    pub ak: Option<usize>,
    pub ak_witness: Vec<(usize, usize)>,
    pub errors: Vec<String>,
}

impl GraphAnalysis {
    pub fn face_identity_holds(&self) -> bool {
        self.other_faces == 0 && 2 * self.p4 + self.p5 == 12 && self.face_count == self.n / 2 + 2
    }
}

pub fn analyze(g: &PlaneCubicGraph) -> GraphAnalysis {
    let s = g.to_simple();
    let inv = g.faces();
    let mut errors = Vec::new();
    let flag = |k: usize, errors: &mut Vec<String>| match is_k_extendable(&s, k) {
        Ok(r) => r.extendable,
        Err(e) => {
            errors.push(format!("{k}-extendability: {e}"));
            false
        }
    };
    let one_extendable = flag(1, &mut errors);
    let three_extendable = flag(3, &mut errors);
    let pairs = match nonextendable_pairs(&s) {
        Ok(p) => p,
        Err(e) => {
            errors.push(format!("pair scan: {e}"));
            Vec::new()
        }
    };
    let two_extendable = one_extendable && s.order() >= 6 && pairs.is_empty();
    let extendability = match (one_extendable, two_extendable, three_extendable) {
        (false, _, _) => 0,
        (true, false, _) => 1,
        (true, true, false) => 2,
        (true, true, true) => 3,
    };
    let mut certificate_issues = Vec::new();
    let mut component_issues = Vec::new();
    for p in &pairs {
        if let Err(e) = certificate_shape(&s, p) {
            certificate_issues.push(e);
        }
        if let Err(e) = component_bounds(&s, p) {
            component_issues.push(e);
        }
    }
    let (ak, ak_witness) = match anti_kekule_number(&s) {
        Ok(r) => (Some(r.number), r.witness_set.iter().map(|e| (e.0, e.1)).collect()),
        Err(e) => {
            errors.push(format!("anti-Kekulé: {e}"));
            (None, Vec::new())
        }
    };
    GraphAnalysis {
        code: hex::encode(canonical_code(g)),
        n: g.order(),
        p4: inv.p4,
        p5: inv.p5,
        p6: inv.p6,
        other_faces: inv.faces.len() - inv.p4 - inv.p5 - inv.p6,
        face_count: inv.faces.len(),
        connectivity: connectivity(g),
        girth: girth(g),
        short_cycles_facial: short_cycles_facial(g),
        nontrivial_3cuts: edge_cuts_up_to(g, 3).iter().filter(|c| c.edges.len() == 3 && !c.trivial).count(),
        cyclic_cut_leq3: has_cyclic_cut_leq3(g),
        tube_layers: recognize_tube(g).map(|d| d.n_layers),
        one_extendable,
        two_extendable,
        three_extendable,
        extendability,
        nonextendable_pairs: pairs.len(),
        witness: pairs.first().map(|p| {
            let e = p.pair.edges();
            [(e[0].0, e[0].1), (e[1].0, e[1].1)]
        }),
        certificate_issues,
        component_issues,
        ak,
        ak_witness,
        errors,
    }
}

fn describe(p: &NonExtendablePair) -> String {
    let e = p.pair.edges();
    format!("pair {{{}, {}}}", e[0], e[1])
}

/// `|components| = |S| + 2`, every component factor-critical, `S`
/// matchable, and the certificate re-verifies on `G - V(pair)`.
pub(crate) fn certificate_shape(g: &SimpleGraph, p: &NonExtendablePair) -> Result<(), String> {
    let c = &p.certificate;
    if c.components.len() != c.barrier.len() + 2 {
        return Err(format!("{}: {} components against |S| = {}", describe(p), c.components.len(), c.barrier.len()));
    }
    if !c.all_factor_critical() || !c.matchable {
        return Err(format!("{}: certificate components not all factor-critical or S unmatchable", describe(p)));
    }
    let (rest, map) = g.without_vertices(&p.pair.vertices());
    let mut back = vec![usize::MAX; g.order()];
    for (new, &old) in map.iter().enumerate() {
        back[old] = new;
    }
    let local = crate::matching::DeficiencyCertificate {
        barrier: c.barrier.iter().map(|&v| back[v]).collect(),
        components: c.components.iter().map(|comp| comp.iter().map(|&v| back[v]).collect()).collect(),
        factor_critical: c.factor_critical.clone(),
        matchable: c.matchable,
    };
    local.verify(&rest).map_err(|e| format!("{}: {e}", describe(p)))
}

/// With `X` the barrier, `P` the four pair endpoints and `G_i` the
/// components: `m_i` counts edges `G_i`–`X`, `r_i` edges `G_i`–`P`, `r_0`
/// edges `X`–`P`. Checks `m_i + r_i >= 3` for every component, and
/// `sum (m_i + r_i) = 3|X| + 12 - 2e(X) - 2e(P) - 2 r_0`.
pub(crate) fn component_bounds(g: &SimpleGraph, p: &NonExtendablePair) -> Result<(), String> {
    let n = g.order();
    let c = &p.certificate;
    // 0 = barrier, 1 = pair endpoint, 2 + i = component i
    let mut class = vec![usize::MAX; n];
    for &v in &c.barrier {
        class[v] = 0;
    }
    for v in p.pair.vertices() {
        class[v] = 1;
    }
    for (i, comp) in c.components.iter().enumerate() {
        for &v in comp {
            class[v] = 2 + i;
        }
    }
    if class.contains(&usize::MAX) {
        return Err(format!("{}: certificate does not partition the vertices", describe(p)));
    }
    let k = c.components.len();
    let (mut m, mut r) = (vec![0usize; k], vec![0usize; k]);
    let (mut e_x, mut e_p, mut r0) = (0usize, 0usize, 0usize);
    for e in g.edges() {
        let (a, b) = (class[e.0].min(class[e.1]), class[e.0].max(class[e.1]));
        match (a, b) {
            (0, 0) => e_x += 1,
            (1, 1) => e_p += 1,
            (0, 1) => r0 += 1,
            (0, i) if i >= 2 => m[i - 2] += 1,
            (1, i) if i >= 2 => r[i - 2] += 1,
            _ => {}
        }
    }
    if let Some(i) = (0..k).find(|&i| m[i] + r[i] < 3) {
        return Err(format!("{}: component {i} has m + r = {}", describe(p), m[i] + r[i]));
    }
    let lhs: usize = (0..k).map(|i| m[i] + r[i]).sum();
    let rhs = (3 * c.barrier.len() + 12) as isize - 2 * (e_x + e_p + r0) as isize;
    if lhs as isize != rhs {
        return Err(format!("{}: sum of m + r is {lhs}, bookkeeping gives {rhs}", describe(p)));
    }
    Ok(())
}
