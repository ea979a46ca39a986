use fullex::enumerator::{enumerate_fullerenes, Catalogue};
use fullex::graph::PlaneCubicGraph;
use fullex::harness::{recheck, verify_all, verify_all_cached, verify_catalogues, Sidecar, VerifyOptions};
use fullex::planar_code;

fn prism(k: usize) -> PlaneCubicGraph {
    let mut rot = vec![Vec::new(); 2 * k];
    for i in 0..k {
        rot[i] = vec![(i + 1) % k, k + i, (i + k - 1) % k];
        rot[k + i] = vec![i, k + (i + 1) % k, k + (i + k - 1) % k];
    }
    PlaneCubicGraph::from_rotation(rot).unwrap()
}

#[test]
fn cube_alone_passes_with_expected_verdicts() {
    let r = verify_all(8, VerifyOptions::default()).unwrap();
    assert_eq!(r.verdict, "pass");
    assert_eq!(r.populations[&8].graphs, 1);
    // The cube is 2-extendable and has ak = 4.
    assert_eq!(r.populations[&8].non_2_extendable, 0);
    assert_eq!(r.populations[&8].ak3, 0);
    assert_eq!(r.claim("ak-range").unwrap().passes, 1);
    assert_eq!(r.claim("ak3-non-2-extendable").unwrap().population, 0);
}

#[test]
fn up_to_fourteen_passes() {
    let r = verify_all(14, VerifyOptions::default()).unwrap();
    assert!(r.passed(), "{}", r.to_json());
    assert_eq!(r.claim("generator-agreement").unwrap().passes, 4);
}

#[test]
fn corrupted_catalogue_fails_with_round_tripping_counterexample() {
    let mut cats: Vec<Catalogue> = (8..=14).step_by(2).map(|n| enumerate_fullerenes(n).unwrap()).collect();
    let bad = prism(7);
    let mut graphs = cats[3].graphs.clone();
    graphs.push(bad.clone());
    cats[3] = Catalogue::from_graphs(14, &graphs);
    let opts = VerifyOptions { jobs: 2, naive_up_to: 0 };
    let r = verify_catalogues(14, cats, opts).unwrap();
    assert_eq!(r.verdict, "fail");
    let face = r.claim("face-identity").unwrap();
    assert_eq!(face.failures, 1);
    let cx = &face.counterexamples[0];
    let code = hex::decode(cx.code.as_ref().unwrap()).unwrap();
    let g = planar_code::decode_graph(&code).unwrap();
    assert!(recheck("face-identity", &g).unwrap().is_err());
    assert!(recheck("face-identity", &prism(6)).unwrap().is_ok());
    assert!(recheck("no-such-claim", &g).is_none());
}

#[test]
fn reports_are_identical_across_worker_counts() {
    let a = verify_all(12, VerifyOptions { jobs: 1, naive_up_to: 12 }).unwrap().to_json();
    let b = verify_all(12, VerifyOptions { jobs: 3, naive_up_to: 12 }).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn sidecar_cache_is_reused_and_versioned() {
    let dir = tempfile::tempdir().unwrap();
    let opts = VerifyOptions { jobs: 0, naive_up_to: 0 };
    let first = verify_all_cached(12, opts, Some(dir.path())).unwrap();
    let path = dir.path().join(Sidecar::file_name(12));
    let side = Sidecar::load(&path).expect("sidecar written");
    assert_eq!(side.analyses.len(), 2);
    let second = verify_all_cached(12, opts, Some(dir.path())).unwrap();
    assert_eq!(first.to_json(), second.to_json());

    // A stale version stamp is ignored.
    let mut stale = side.clone();
    stale.version = "0.0.0-old".into();
    std::fs::write(&path, stale.to_json()).unwrap();
    assert!(Sidecar::load(&path).is_none());
    let third = verify_all_cached(12, opts, Some(dir.path())).unwrap();
    assert_eq!(first.to_json(), third.to_json());
    assert_eq!(Sidecar::load(&path).unwrap(), side);
}
