//! The claim table. Each per-graph claim is a premise and a conclusion over
//! a [`GraphAnalysis`]; adding a claim means adding a row.

use super::analysis::GraphAnalysis;

pub struct GraphClaim {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Graphs outside the premise are not part of the population.
    pub applies: fn(&GraphAnalysis) -> bool,
    /// `Err` carries the witness data for the counterexample record.
    pub check: fn(&GraphAnalysis) -> Result<(), String>,
}

fn all(_: &GraphAnalysis) -> bool {
    true
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

pub const GRAPH_CLAIMS: &[GraphClaim] = &[
    GraphClaim {
        id: "face-identity",
        anchor: "2p4 + p5 = 12",
        applies: all,
        check: |a| {
            expect(a.face_identity_holds(), || {
                format!("p4={} p5={} p6={} other={} faces={} n={}", a.p4, a.p5, a.p6, a.other_faces, a.face_count, a.n)
            })
        },
    },
    GraphClaim {
        id: "connectivity-3",
        anchor: "has connectivity 3",
        applies: all,
        check: |a| expect(a.connectivity == 3, || format!("connectivity {}", a.connectivity)),
    },
    GraphClaim {
        id: "girth-at-least-4",
        anchor: "girth >= 4",
        applies: all,
        check: |a| expect(a.girth.is_some_and(|g| g >= 4), || format!("girth {:?}", a.girth)),
    },
    GraphClaim {
        id: "short-cycles-facial",
        anchor: "every cycle with length 4 or 5 is a facial cycle",
        applies: all,
        check: |a| expect(a.short_cycles_facial, || "non-facial 4- or 5-cycle".into()),
    },
    GraphClaim {
        id: "three-cuts-trivial-unless-tube",
        anchor: "every 3-edge-cut is trivial unless the graph is a tube",
        applies: |a| a.tube_layers.is_none(),
        check: |a| expect(a.nontrivial_3cuts == 0, || format!("{} non-trivial 3-edge-cuts", a.nontrivial_3cuts)),
    },
    GraphClaim {
        id: "cyclic-cut-iff-tube",
        anchor: "cyclically 4-edge connected if and only if not a tube",
        applies: all,
        check: |a| {
            expect(a.cyclic_cut_leq3 == a.tube_layers.is_some(), || {
                format!("cyclic cut <= 3: {}, tube: {:?}", a.cyclic_cut_leq3, a.tube_layers)
            })
        },
    },
    GraphClaim {
        id: "one-extendable",
        anchor: "every (4,5,6)-fullerene is 1-extendable",
        applies: all,
        check: |a| expect(a.one_extendable, || format!("not 1-extendable; errors {:?}", a.errors)),
    },
    GraphClaim {
        id: "not-three-extendable",
        anchor: "no planar graph is 3-extendable",
        applies: all,
        check: |a| expect(!a.three_extendable, || "3-extendable".into()),
    },
    GraphClaim {
        id: "extendability-range",
        anchor: "extendability is 1 or 2",
        applies: all,
        check: |a| expect(matches!(a.extendability, 1 | 2), || format!("extendability {}", a.extendability)),
    },
    GraphClaim {
        id: "ak-range",
        anchor: "anti-Kekule number 3 or 4",
        applies: all,
        check: |a| expect(matches!(a.ak, Some(3 | 4)), || format!("ak {:?}; errors {:?}", a.ak, a.errors)),
    },
    GraphClaim {
        id: "ak3-non-2-extendable",
        anchor: "anti-Kekule number 3 implies non-2-extendable",
        applies: |a| a.ak == Some(3),
        check: |a| expect(!a.two_extendable, || format!("2-extendable with ak witness {:?}", a.ak_witness)),
    },
    GraphClaim {
        id: "no-quadrilateral-2-extendable",
        anchor: "p4 = 0 implies 2-extendable",
        applies: |a| a.p4 == 0,
        check: |a| expect(a.two_extendable, || format!("non-extendable pair {:?}", a.witness)),
    },
    GraphClaim {
        id: "no-pentagon-nontube-2-extendable",
        anchor: "p5 = 0 and not a tube implies 2-extendable",
        applies: |a| a.p5 == 0 && a.tube_layers.is_none(),
        check: |a| expect(a.two_extendable, || format!("non-extendable pair {:?}", a.witness)),
    },
    GraphClaim {
        id: "tube-non-2-extendable",
        anchor: "every tube is non-2-extendable",
        applies: |a| a.tube_layers.is_some(),
        check: |a| expect(!a.two_extendable, || format!("tube with {:?} layers is 2-extendable", a.tube_layers)),
    },
    GraphClaim {
        id: "certificate-shape",
        anchor: "|C| = |X0| + 2, components factor-critical",
        applies: |a| a.nonextendable_pairs > 0,
        check: |a| expect(a.certificate_issues.is_empty(), || a.certificate_issues.join("; ")),
    },
    GraphClaim {
        id: "component-edge-count",
        anchor: "m_i + r_i >= 3 and the edge-count identity",
        applies: |a| a.nonextendable_pairs > 0,
        check: |a| expect(a.component_issues.is_empty(), || a.component_issues.join("; ")),
    },
];

pub fn graph_claim(id: &str) -> Option<&'static GraphClaim> {
    GRAPH_CLAIMS.iter().find(|c| c.id == id)
}
