//! Exhaustive verification over the generated catalogues.
//!
//! Each catalogued graph is analysed once (in parallel, results kept in
//! catalogue order), then every registered claim is evaluated in a single
//! ordered pass. Reports contain no timings or worker counts, so the same
//! inputs always produce the same bytes.

mod analysis;
mod claims;

pub use analysis::{analyze, GraphAnalysis, ANALYSIS_VERSION};
pub use claims::{graph_claim, GraphClaim, GRAPH_CLAIMS};

use crate::enumerator::{enumerate_range, naive_enumerate, Catalogue, EnumError, NAIVE_BOUND};
use crate::extendability::is_k_extendable;
use crate::families::{build_tube, recognize_tube, verify_tube_pm_structure, FamilyError, SPORADIC_SIZES};
use crate::graph::{canonical_code, PlaneCubicGraph};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use thiserror::Error;

/// Tubes exercised by the tube suite.
pub const TUBE_SUITE_LAYERS: std::ops::RangeInclusive<usize> = 1..=4;
/// Counterexamples listed per claim; `failures` always has the full count.
pub const MAX_LISTED_COUNTEREXAMPLES: usize = 20;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error("cannot build worker pool: {0}")]
    Pool(String),
    #[error("cache {path}: {source}")]
    Cache { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Canonical code (hex) of the offending graph, absent for
    /// population-level claims.
    pub code: Option<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub claim: String,
    pub anchor: String,
    pub population: usize,
    pub passes: usize,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl ClaimRecord {
    fn new(claim: &str, anchor: &str) -> Self {
        ClaimRecord {
            claim: claim.into(),
            anchor: anchor.into(),
            population: 0,
            passes: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, outcome: Result<(), String>, code: Option<&str>) {
        self.population += 1;
        match outcome {
            Ok(()) => self.passes += 1,
            Err(detail) => {
                self.failures += 1;
                if self.counterexamples.len() < MAX_LISTED_COUNTEREXAMPLES {
                    self.counterexamples.push(Counterexample { code: code.map(str::to_owned), detail });
                }
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PopulationSummary {
    pub graphs: usize,
    /// Counts keyed by `"p4,p5,p6"`.
    pub counts: BTreeMap<String, usize>,
    pub tubes: usize,
    pub non_2_extendable: usize,
    pub ak3: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub nmax: usize,
    pub version: String,
    pub populations: BTreeMap<usize, PopulationSummary>,
    /// Canonical codes of the sporadic candidates per size.
    pub sporadic: BTreeMap<usize, Vec<String>>,
    pub claims: Vec<ClaimRecord>,
    pub verdict: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimRecord::passed)
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimRecord> {
        self.claims.iter().find(|c| c.claim == id)
    }

    /// Pretty JSON with sorted object keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    /// Cross-check the generator against the naive search up to this order.
    pub naive_up_to: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { jobs: 0, naive_up_to: NAIVE_BOUND }
    }
}

/// JSON sidecar stored next to a catalogue: counts plus per-graph analysis
/// records, reused by later runs when the version stamp matches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub version: String,
    pub n: usize,
    pub counts: BTreeMap<String, usize>,
    pub analyses: Vec<GraphAnalysis>,
}

impl Sidecar {
    pub fn file_name(n: usize) -> String {
        format!("fullerenes_n{n}.json")
    }

    pub fn new(cat: &Catalogue, analyses: Vec<GraphAnalysis>) -> Self {
        Sidecar { version: ANALYSIS_VERSION.into(), n: cat.n, counts: cat.counts.clone(), analyses }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("sidecar serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    /// Reads a sidecar, ignoring it (returning `None`) when missing,
    /// unparsable or stamped with another version.
    pub fn load(path: &Path) -> Option<Sidecar> {
        let text = std::fs::read_to_string(path).ok()?;
        let s: Sidecar = serde_json::from_str(&text).ok()?;
        (s.version == ANALYSIS_VERSION).then_some(s)
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, HarnessError> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| HarnessError::Pool(e.to_string()))
}

/// Analyses every graph of a catalogue, in catalogue order, reusing cached
/// records whose canonical code matches.
pub fn analyze_catalogue(cat: &Catalogue, cached: Option<&Sidecar>) -> Vec<GraphAnalysis> {
    let known: BTreeMap<&str, &GraphAnalysis> = cached
        .filter(|s| s.n == cat.n)
        .map(|s| s.analyses.iter().map(|a| (a.code.as_str(), a)).collect())
        .unwrap_or_default();
    cat.graphs
        .par_iter()
        .zip(cat.codes.par_iter())
        .map(|(g, code)| match known.get(hex::encode(code).as_str()) {
            Some(a) => (*a).clone(),
            None => analyze(g),
        })
        .collect()
}

/// Enumerates every even order in `8..=nmax` and verifies the catalogues.
pub fn verify_all(nmax: usize, opts: VerifyOptions) -> Result<VerificationReport, HarnessError> {
    verify_all_cached(nmax, opts, None)
}

/// As [`verify_all`], reading and refreshing analysis sidecars in `cache`.
pub fn verify_all_cached(
    nmax: usize,
    opts: VerifyOptions,
    cache: Option<&Path>,
) -> Result<VerificationReport, HarnessError> {
    pool(opts.jobs)?.install(|| {
        let cats = enumerate_range(crate::enumerator::MIN_ORDER, nmax)?;
        let mut analysed = Vec::with_capacity(cats.len());
        for cat in cats {
            let path = cache.map(|dir| dir.join(Sidecar::file_name(cat.n)));
            let cached = path.as_deref().and_then(Sidecar::load);
            let analyses = analyze_catalogue(&cat, cached.as_ref());
            if let Some(path) = path {
                let fresh = Sidecar::new(&cat, analyses.clone());
                if cached.as_ref() != Some(&fresh) {
                    std::fs::write(&path, fresh.to_json()).map_err(|source| HarnessError::Cache { path, source })?;
                }
            }
            analysed.push((cat, analyses));
        }
        Ok(assemble(nmax, &analysed, opts))
    })
}

/// Verifies explicitly supplied catalogues, e.g. with a corrupted entry.
pub fn verify_catalogues(
    nmax: usize,
    cats: Vec<Catalogue>,
    opts: VerifyOptions,
) -> Result<VerificationReport, HarnessError> {
    pool(opts.jobs)?.install(|| {
        let analysed: Vec<(Catalogue, Vec<GraphAnalysis>)> = cats
            .into_iter()
            .map(|cat| {
                let a = analyze_catalogue(&cat, None);
                (cat, a)
            })
            .collect();
        Ok(assemble(nmax, &analysed, opts))
    })
}

/// Re-runs one per-graph claim on one graph. `None` if the claim is unknown
/// or the graph lies outside its population; otherwise the outcome.
pub fn recheck(claim: &str, g: &PlaneCubicGraph) -> Option<Result<(), String>> {
    let c = graph_claim(claim)?;
    let a = analyze(g);
    (c.applies)(&a).then(|| (c.check)(&a))
}

fn assemble(nmax: usize, analysed: &[(Catalogue, Vec<GraphAnalysis>)], opts: VerifyOptions) -> VerificationReport {
    let mut claims: Vec<ClaimRecord> = Vec::new();
    for c in GRAPH_CLAIMS {
        let mut rec = ClaimRecord::new(c.id, c.anchor);
        for a in analysed.iter().flat_map(|(_, a)| a) {
            if (c.applies)(a) {
                rec.record((c.check)(a), Some(&a.code));
            }
        }
        claims.push(rec);
    }

    let mut populations = BTreeMap::new();
    for (cat, a) in analysed {
        populations.insert(
            cat.n,
            PopulationSummary {
                graphs: a.len(),
                counts: cat.counts.clone(),
                tubes: a.iter().filter(|x| x.tube_layers.is_some()).count(),
                non_2_extendable: a.iter().filter(|x| !x.two_extendable).count(),
                ak3: a.iter().filter(|x| x.ak == Some(3)).count(),
            },
        );
    }

    // Some graph with anti-Kekulé number 3 at every even order from 10 up.
    let mut rec = ClaimRecord::new("ak3-at-every-order", "ak = 3 occurs for every even n >= 10");
    for (cat, a) in analysed.iter().filter(|(c, _)| c.n >= 10) {
        let found = a.iter().any(|x| x.ak == Some(3));
        rec.record(if found { Ok(()) } else { Err(format!("no ak = 3 graph on {} vertices", cat.n)) }, None);
    }
    claims.push(rec);

    // Every tube that fits appears in the catalogue of its order.
    let mut rec = ClaimRecord::new("tubes-catalogued", "T_k is a (4,5,6)-fullerene on 6k + 8 vertices");
    for k in (1..).take_while(|k| 6 * k + 8 <= nmax) {
        let outcome = match build_tube(k) {
            Ok((t, _)) => {
                let code = canonical_code(&t);
                let present = analysed.iter().any(|(c, _)| c.n == t.order() && c.codes.binary_search(&code).is_ok());
                if present {
                    Ok(())
                } else {
                    Err(format!("T_{k} missing from the catalogue"))
                }
            }
            Err(e) => Err(format!("T_{k}: {e}")),
        };
        rec.record(outcome, None);
    }
    claims.push(rec);

    let mut rec = ClaimRecord::new(
        "tube-perfect-matchings",
        "one edge per layer; each choice extends to a unique perfect matching",
    );
    for k in TUBE_SUITE_LAYERS {
        rec.record(tube_pm_outcome(k), None);
    }
    claims.push(rec);

    let mut rec = ClaimRecord::new("tube-witness", "two traversed edges of one gap do not extend");
    for k in TUBE_SUITE_LAYERS {
        rec.record(tube_witness_outcome(k), None);
    }
    claims.push(rec);

    // Sporadic selection: non-2-extendable, ak = 3, not a tube.
    let mut sporadic = BTreeMap::new();
    let mut rec = ClaimRecord::new("sporadic-candidates", "non-2-extendable graphs at 12, 14, 18 and 20 vertices");
    for (cat, a) in analysed.iter().filter(|(c, _)| SPORADIC_SIZES.contains(&c.n)) {
        let codes: Vec<String> = a
            .iter()
            .filter(|x| !x.two_extendable && x.ak == Some(3) && x.tube_layers.is_none())
            .map(|x| x.code.clone())
            .collect();
        let outcome = if codes.is_empty() { Err(format!("no candidate on {} vertices", cat.n)) } else { Ok(()) };
        rec.record(outcome, None);
        sporadic.insert(cat.n, codes);
    }
    claims.push(rec);

    let mut rec = ClaimRecord::new("generator-agreement", "dual generator equals direct search");
    for (cat, _) in analysed.iter().filter(|(c, _)| c.n <= opts.naive_up_to.min(NAIVE_BOUND)) {
        let outcome = match naive_enumerate(cat.n) {
            Ok(naive) if naive.code_set() == cat.code_set() => Ok(()),
            Ok(naive) => Err(format!("n = {}: {} generated, {} by direct search", cat.n, cat.len(), naive.len())),
            Err(e) => Err(format!("n = {}: {e}", cat.n)),
        };
        rec.record(outcome, None);
    }
    claims.push(rec);

    let verdict = if claims.iter().all(ClaimRecord::passed) { "pass" } else { "fail" };
    VerificationReport {
        nmax,
        version: ANALYSIS_VERSION.into(),
        populations,
        sporadic,
        claims,
        verdict: verdict.into(),
    }
}

fn tube_pm_outcome(k: usize) -> Result<(), String> {
    let r = verify_tube_pm_structure(k).map_err(|e| e.to_string())?;
    if r.holds() {
        Ok(())
    } else {
        Err(format!("T_{k}: {r:?}"))
    }
}

fn tube_witness_outcome(k: usize) -> Result<(), String> {
    let (t, desc) = build_tube(k).map_err(|e: FamilyError| e.to_string())?;
    match recognize_tube(&t) {
        Some(d) if d.n_layers == k => {}
        other => return Err(format!("T_{k} recognized as {:?}", other.map(|d| d.n_layers))),
    }
    let r = is_k_extendable(&t.to_simple(), 2).map_err(|e| e.to_string())?;
    let w = r.witness.ok_or_else(|| format!("T_{k} is 2-extendable"))?;
    let gaps: Vec<Option<usize>> = w.edges().iter().map(|e| desc.is_traversed(e)).collect();
    match gaps[..] {
        [Some(a), Some(b)] if a == b => Ok(()),
        _ => Err(format!("T_{k} witness {:?} is not two traversed edges of one gap", w.edges())),
    }
}
