use fullex::enumerator::enumerate_range;
use fullex::graph::{canonical_code, PlaneCubicGraph, SimpleGraph};
use fullex::matching::{
    count_perfect_matchings, deficiency_certificate, extends_to_perfect, has_perfect_matching, maximum_matching,
    Matching,
};
use fullex::planar_code;
use proptest::prelude::*;
use std::sync::OnceLock;

fn catalogue() -> &'static [PlaneCubicGraph] {
    static CAT: OnceLock<Vec<PlaneCubicGraph>> = OnceLock::new();
    CAT.get_or_init(|| enumerate_range(8, 16).unwrap().into_iter().flat_map(|c| c.graphs).collect())
}

fn random_graph() -> impl Strategy<Value = SimpleGraph> {
    (2usize..=10).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if it.next().unwrap() {
                        edges.push((a, b));
                    }
                }
            }
            SimpleGraph::from_edges(n, &edges)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_code_ignores_labels_and_orientation(
        idx in 0usize..1000,
        seed in proptest::collection::vec(any::<u32>(), 32),
        shifts in proptest::collection::vec(0usize..3, 32),
        mirror in any::<bool>(),
    ) {
        let cat = catalogue();
        let g = &cat[idx % cat.len()];
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&v| (seed[v % seed.len()].wrapping_mul(v as u32 + 1), v));
        let mut h = g.relabel(&perm).reroot(&shifts[..n]);
        if mirror {
            h = h.mirror();
        }
        prop_assert_eq!(canonical_code(&h), canonical_code(g));
    }

    #[test]
    fn planar_code_round_trips(idx in 0usize..1000) {
        let cat = catalogue();
        let g = &cat[idx % cat.len()];
        let bytes = planar_code::encode([g]).unwrap();
        let back = planar_code::decode(&bytes).unwrap();
        prop_assert_eq!(&back[0], g);
        prop_assert_eq!(planar_code::encode(&back).unwrap(), bytes);
    }

    #[test]
    fn extension_is_perfect_matching_of_the_rest(idx in 0usize..1000, picks in proptest::collection::vec(0usize..64, 1..3)) {
        let cat = catalogue();
        let g = cat[idx % cat.len()].to_simple();
        let edges = g.edges();
        let mut chosen = Vec::new();
        for p in picks {
            let e = edges[p % edges.len()];
            if chosen.iter().all(|c: &fullex::graph::Edge| !c.shares_vertex(&e)) {
                chosen.push(e);
            }
        }
        let m = Matching::new(chosen);
        let (rest, _) = g.without_vertices(&m.vertices());
        prop_assert_eq!(extends_to_perfect(&g, &m).unwrap(), has_perfect_matching(&rest));
    }

    #[test]
    fn certificate_decides_perfect_matching(g in random_graph()) {
        let c = deficiency_certificate(&g);
        prop_assert!(c.verify(&g).is_ok());
        prop_assert_eq!(has_perfect_matching(&g), c.components.len() == c.barrier.len());
        // The deficiency equals the number of vertices a maximum matching misses.
        let missed = g.order() - 2 * maximum_matching(&g).len();
        prop_assert_eq!(c.deficiency(), missed as isize);
        prop_assert_eq!(count_perfect_matchings(&g).unwrap() > 0, has_perfect_matching(&g));
    }
}
