use std::io::Write;
use std::process::{Command, Output, Stdio};

fn fullex(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fullex"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut input = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            input.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

#[test]
fn tube_pipes_into_extend_check() {
    let tube = fullex(&["gen-tube", "3"], None);
    assert!(tube.status.success());
    assert!(tube.stdout.starts_with(b">>planar_code<<"));
    let out = fullex(&["extend-check", "--k", "2"], Some(&tube.stdout));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let g = &v["graphs"][0];
    assert_eq!(g["extendable"], false);
    assert_eq!(g["witness"], serde_json::json!([[0, 3], [1, 4]]));
    let cert = &g["certificate"];
    assert_eq!(cert["components"].as_array().unwrap().len(), cert["barrier"].as_array().unwrap().len() + 2);
}

#[test]
fn six_vertex_input_is_an_input_error() {
    // The triangular prism: cubic and plane, but not a (4,5,6)-fullerene.
    let mut bytes = b">>planar_code<<".to_vec();
    bytes.extend_from_slice(&[6, 2, 4, 3, 0, 3, 5, 1, 0, 1, 6, 2, 0, 1, 5, 6, 0, 2, 6, 4, 0, 3, 4, 5, 0]);
    let out = fullex(&["extend-check"], Some(&bytes));
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    let v = fullex(&["validate"], Some(&bytes));
    assert_eq!(v.status.code(), Some(1));
    assert_eq!(json(&v)["graphs"][0]["valid"], false);
}

#[test]
fn malformed_and_usage_errors_exit_two() {
    assert_eq!(fullex(&["validate"], Some(b"garbage")).status.code(), Some(2));
    assert_eq!(fullex(&["gen-tube", "0"], None).status.code(), Some(2));
    assert_eq!(fullex(&["no-such-command"], None).status.code(), Some(2));
    assert_eq!(fullex(&["enumerate", "9"], None).status.code(), Some(2));
    let over =
        Command::new(env!("CARGO_BIN_EXE_fullex")).args(["enumerate", "16"]).env("FULLEX_NMAX", "14").output().unwrap();
    assert_eq!(over.status.code(), Some(2));
}

#[test]
fn certify_antikekule_and_canonical() {
    let tube = fullex(&["gen-tube", "1"], None).stdout;
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t1.plc");
    std::fs::write(&file, &tube).unwrap();
    let f = file.to_str().unwrap();

    let c = fullex(&["certify", f, "--edges", "0-3,1-4"], None);
    assert!(c.status.success());
    let v = json(&c);
    assert_eq!(v["extends"], false);
    assert_eq!(v["deficiency"], 2);
    assert_eq!(v["verified"], true);
    assert_eq!(fullex(&["certify", f, "--edges", "0-3,0-1"], None).status.code(), Some(2));

    let ak = json(&fullex(&["antikekule", f], None));
    assert!(matches!(ak["graphs"][0]["number"].as_u64(), Some(3 | 4)));

    let canon = json(&fullex(&["canonical", f], None));
    assert_eq!(canon["graphs"][0]["code"].as_str().unwrap().len(), 2 * (1 + 14 * 4));
}

#[test]
fn enumerate_writes_catalogue_that_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = fullex(&["enumerate", "14", "--out", d], None);
    assert!(out.status.success());
    assert_eq!(json(&out)["graphs"], 4);
    let plc = dir.path().join("fullerenes_n14.plc");
    let bytes = std::fs::read(&plc).unwrap();
    assert!(dir.path().join("fullerenes_n14.json").exists());
    // Catalogue graphs are already canonical, so rewriting is byte-identical.
    let again = fullex(&["canonical", plc.to_str().unwrap(), "--plc"], None);
    assert_eq!(again.stdout, bytes);
    let naive = json(&fullex(&["enumerate", "14", "--naive"], None));
    assert_eq!(naive["codes"], json(&out)["codes"]);
}

#[test]
fn verify_all_is_deterministic_and_passes() {
    let a = fullex(&["verify-all", "--nmax", "12", "--jobs", "1"], None);
    let b = fullex(&["verify-all", "--nmax", "12", "--jobs", "4"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["verdict"], "pass");
}
