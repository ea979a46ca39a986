//! Command-line front end. Reports go to stdout as JSON; graphs are read and
//! written in planar_code. Exit status: 0 all checks pass, 1 a check
//! failed, 2 usage or input error.

use clap::{Parser, Subcommand};
use fullex::antikekule::anti_kekule_number;
use fullex::enumerator::{configured_bound, enumerate_fullerenes, naive_enumerate, Catalogue};
use fullex::extendability::is_k_extendable;
use fullex::families::build_tube;
use fullex::graph::{canonical_form, Edge, PlaneCubicGraph};
use fullex::harness::{analyze_catalogue, verify_all_cached, Sidecar, VerifyOptions};
use fullex::matching::{deficiency_certificate, extends_to_perfect, Matching};
use fullex::planar_code;
use serde_json::{json, Value};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "fullex", version, about = "Matching extendability of (4,5,6)-fullerenes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every graph in a planar_code file is a (4,5,6)-fullerene.
    Validate { file: Option<PathBuf> },
    /// Write the tube with N hexagon layers as planar_code.
    GenTube {
        n: usize,
        /// Print the layer descriptor as JSON to stderr.
        #[arg(long)]
        descriptor: bool,
    },
    /// Generate all (4,5,6)-fullerenes on N vertices.
    Enumerate {
        n: usize,
        /// Use the direct rotation-system search (N <= 14).
        #[arg(long)]
        naive: bool,
        /// Write fullerenes_nN.plc and its JSON sidecar into DIR.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Decide k-extendability, with a witness and certificate on failure.
    ExtendCheck {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Anti-Kekulé number with a minimum set.
    Antikekule { file: Option<PathBuf> },
    /// Deficiency certificate for G minus the endpoints of the given edges.
    Certify {
        file: Option<PathBuf>,
        /// Comma-separated edges, e.g. `0-3,1-4`.
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
    },
    /// Verify every claim over all fullerenes up to NMAX vertices.
    VerifyAll {
        #[arg(long)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Directory of analysis sidecars to reuse and refresh.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
        /// Skip the cross-check against the direct search.
        #[arg(long)]
        no_naive: bool,
    },
    /// Canonical code of each graph; `--plc` writes canonical relabellings.
    Canonical {
        file: Option<PathBuf>,
        #[arg(long)]
        plc: bool,
    },
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Input(String),
    Check(Value),
}

type Outcome = Result<Option<Value>, Failure>;

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn read_graphs(file: Option<&Path>) -> Result<Vec<PlaneCubicGraph>, Failure> {
    let mut bytes = Vec::new();
    match file {
        Some(p) => bytes = std::fs::read(p).map_err(|e| input(format!("{}: {e}", p.display())))?,
        None => {
            std::io::stdin().read_to_end(&mut bytes).map_err(input)?;
        }
    }
    let graphs = planar_code::decode(&bytes).map_err(input)?;
    if graphs.is_empty() {
        return Err(input("no graphs in input"));
    }
    Ok(graphs)
}

/// Reads graphs and insists each is a (4,5,6)-fullerene.
fn read_fullerenes(file: Option<&Path>) -> Result<Vec<PlaneCubicGraph>, Failure> {
    let graphs = read_graphs(file)?;
    for (i, g) in graphs.iter().enumerate() {
        g.validate_fullerene().map_err(|e| input(format!("graph {i} is not a (4,5,6)-fullerene: {e}")))?;
    }
    Ok(graphs)
}

fn write_stdout(bytes: &[u8]) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(bytes).and_then(|_| out.flush()).map_err(input)
}

fn parse_edge(s: &str) -> Result<Edge, Failure> {
    let (a, b) = s.trim().split_once('-').ok_or_else(|| input(format!("edge `{s}` is not of the form a-b")))?;
    let a: usize = a.trim().parse().map_err(|_| input(format!("bad vertex in `{s}`")))?;
    let b: usize = b.trim().parse().map_err(|_| input(format!("bad vertex in `{s}`")))?;
    if a == b {
        return Err(input(format!("edge `{s}` is a loop")));
    }
    Ok(Edge::new(a, b))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            let graphs = read_graphs(file.as_deref())?;
            let mut all_ok = true;
            let records: Vec<Value> = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| match g.validate_fullerene() {
                    Ok(inv) => json!({"index": i, "n": g.order(), "valid": true,
                        "p4": inv.p4, "p5": inv.p5, "p6": inv.p6}),
                    Err(e) => {
                        all_ok = false;
                        json!({"index": i, "n": g.order(), "valid": false, "error": e.to_string()})
                    }
                })
                .collect();
            let report = json!({ "graphs": records });
            if all_ok {
                Ok(Some(report))
            } else {
                Err(Failure::Check(report))
            }
        }
        Command::GenTube { n, descriptor } => {
            let (t, desc) = build_tube(n).map_err(input)?;
            if descriptor {
                eprintln!("{}", serde_json::to_value(&desc).map_err(input)?);
            }
            write_stdout(&planar_code::encode([&t]).map_err(input)?)?;
            Ok(None)
        }
        Command::Enumerate { n, naive, out } => {
            let cat: Catalogue = if naive { naive_enumerate(n) } else { enumerate_fullerenes(n) }.map_err(input)?;
            let mut summary = json!({
                "n": n,
                "bound": configured_bound(),
                "generator": if naive { "naive" } else { "dual" },
                "graphs": cat.len(),
                "counts": cat.counts,
                "codes": cat.codes.iter().map(hex::encode).collect::<Vec<_>>(),
            });
            if let Some(dir) = out {
                std::fs::create_dir_all(&dir).map_err(input)?;
                let plc = dir.join(format!("fullerenes_n{n}.plc"));
                std::fs::write(&plc, planar_code::encode(&cat.graphs).map_err(input)?).map_err(input)?;
                let sidecar = Sidecar::new(&cat, analyze_catalogue(&cat, None));
                let side = dir.join(Sidecar::file_name(n));
                std::fs::write(&side, sidecar.to_json()).map_err(input)?;
                summary["files"] = json!([plc.display().to_string(), side.display().to_string()]);
            }
            Ok(Some(summary))
        }
        Command::ExtendCheck { file, k } => {
            let graphs = read_fullerenes(file.as_deref())?;
            let mut records = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let r = is_k_extendable(&g.to_simple(), k).map_err(input)?;
                let mut v = serde_json::to_value(&r).map_err(input)?;
                v["index"] = json!(i);
                v["code"] = json!(hex::encode(canonical_form(g).code));
                records.push(v);
            }
            Ok(Some(json!({ "graphs": records })))
        }
        Command::Antikekule { file } => {
            let graphs = read_fullerenes(file.as_deref())?;
            let mut records = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let r = anti_kekule_number(&g.to_simple()).map_err(input)?;
                let mut v = serde_json::to_value(&r).map_err(input)?;
                v["index"] = json!(i);
                records.push(v);
            }
            Ok(Some(json!({ "graphs": records })))
        }
        Command::Certify { file, edges } => {
            let graphs = read_fullerenes(file.as_deref())?;
            if graphs.len() != 1 {
                return Err(input("certify expects exactly one graph"));
            }
            let s = graphs[0].to_simple();
            let m = Matching::new(edges.iter().map(|e| parse_edge(e)).collect::<Result<_, _>>()?);
            m.check_in(&s).map_err(input)?;
            let (rest, map) = s.without_vertices(&m.vertices());
            let cert = deficiency_certificate(&rest);
            let verified = cert.verify(&rest);
            let back = |vs: &[usize]| vs.iter().map(|&v| map[v]).collect::<Vec<_>>();
            Ok(Some(json!({
                "matching": m,
                "extends": extends_to_perfect(&s, &m).map_err(input)?,
                "barrier": back(&cert.barrier),
                "components": cert.components.iter().map(|c| back(c)).collect::<Vec<_>>(),
                "factor_critical": cert.factor_critical,
                "matchable": cert.matchable,
                "deficiency": cert.deficiency(),
                "verified": verified.is_ok(),
            })))
        }
        Command::VerifyAll { nmax, jobs, cache, no_naive } => {
            let opts =
                VerifyOptions { jobs, naive_up_to: if no_naive { 0 } else { VerifyOptions::default().naive_up_to } };
            if let Some(dir) = &cache {
                std::fs::create_dir_all(dir).map_err(input)?;
            }
            let report = verify_all_cached(nmax, opts, cache.as_deref()).map_err(input)?;
            let value = serde_json::to_value(&report).map_err(input)?;
            if report.passed() {
                Ok(Some(value))
            } else {
                Err(Failure::Check(value))
            }
        }
        Command::Canonical { file, plc } => {
            let graphs = read_graphs(file.as_deref())?;
            if plc {
                let canon: Vec<PlaneCubicGraph> = graphs
                    .iter()
                    .map(|g| planar_code::decode_graph(&canonical_form(g).code))
                    .collect::<Result<_, _>>()
                    .map_err(input)?;
                write_stdout(&planar_code::encode(&canon).map_err(input)?)?;
                return Ok(None);
            }
            let records: Vec<Value> = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    let f = canonical_form(g);
                    json!({"index": i, "code": hex::encode(&f.code), "labeling": f.labeling})
                })
                .collect();
            Ok(Some(json!({ "graphs": records })))
        }
    }
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("value serializes"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(Some(v)) => {
            print(&v);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(Failure::Check(v)) => {
            print(&v);
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
