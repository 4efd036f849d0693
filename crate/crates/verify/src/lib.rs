//! Verification suites. Each suite recomputes one computational claim from
//! scratch, compares it with expected values stored under `data/`, and keeps a
//! checked minor model for every positive minor observation.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use minorkit::canon::canonical_key;
use minorkit::catalog::Catalog;
use minorkit::minor::DEFAULT_BUDGET;
use minorkit::{CanonKey, Graph};
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

pub mod error;
pub mod report;
pub mod soundness;
mod suites;

pub use error::VerifyError;
pub use report::{Check, Overall, Report, SuiteResult, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Search-node budget per minor query, escalated tenfold on exhaustion.
    pub budget: u64,
    /// Members per infinite family.
    pub depth: usize,
    /// Suites to run; empty means all.
    pub suites: Vec<String>,
    pub skip: Vec<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config { budget: DEFAULT_BUDGET, depth: DEFAULT_DEPTH, suites: Vec::new(), skip: Vec::new() }
    }
}

/// Default depth for infinite families.
pub const DEFAULT_DEPTH: usize = 4;

pub struct SuiteInfo {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&Ctx) -> Result<SuiteResult, VerifyError>,
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo { id: "S1", title: "W6-free edge supersets of V8", run: suites::v8::s1 },
    SuiteInfo { id: "S2", title: "W6-free vertex splits of order-8 V8 graphs", run: suites::v8::s2 },
    SuiteInfo { id: "S3", title: "larger V8 graphs have cubic twins", run: suites::v8::s3 },
    SuiteInfo { id: "S4", title: "internally 4-connected V8 supersets", run: suites::v8::s4 },
    SuiteInfo { id: "S5", title: "cubic vertices of i4c graphs avoid triangles", run: suites::i4c::s5 },
    SuiteInfo { id: "S6", title: "W6 in L(K33), AW+6 and K44-3K2", run: suites::i4c::s6 },
    SuiteInfo { id: "S7", title: "small i4c nonplanar graphs and K▽ supersets", run: suites::i4c::s7 },
    SuiteInfo { id: "S8", title: "graphs covered by four vertices", run: suites::i4c::s8 },
    SuiteInfo { id: "S9", title: "i4c planar survey", run: suites::i4c::s9 },
    SuiteInfo { id: "S10", title: "the 27 i4c W6-free graphs", run: suites::i4c::s10 },
    SuiteInfo { id: "S11", title: "T-sum ledgers of K4, K33, cube and cube^1", run: suites::tsum::s11 },
    SuiteInfo { id: "S12", title: "T-sum ledgers of the variant families", run: suites::tsum::s12 },
    SuiteInfo { id: "S13", title: "maximality under edge additions and splits", run: suites::families::s13 },
    SuiteInfo { id: "S14", title: "infinite families at bounded depth", run: suites::families::s14 },
    SuiteInfo { id: "S15", title: "Petersen contracts to W6 at every vertex", run: suites::families::s15 },
    SuiteInfo { id: "S16", title: "listed maximal graphs are W6-free and maximal", run: suites::families::s16 },
    SuiteInfo { id: "E1", title: "engine soundness cross-checks", run: soundness::engine },
];

pub fn suite_ids() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.id).collect()
}

/// Runs one suite. Budget exhaustion surfaces as [`VerifyError::Inconclusive`].
pub fn run_suite(id: &str, cfg: &Config) -> Result<SuiteResult, VerifyError> {
    let info = SUITES
        .iter()
        .find(|s| s.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| VerifyError::UnknownSuite(id.into()))?;
    let cx = Ctx::new(cfg)?;
    let start = Instant::now();
    let mut r = (info.run)(&cx)?;
    r.runtime_ms = start.elapsed().as_millis() as u64;
    r.finish();
    Ok(r)
}

/// Runs the selected suites; errors become inconclusive results so that a
/// partial report is still produced.
pub fn run_all(cfg: &Config) -> Result<Report, VerifyError> {
    for id in cfg.suites.iter().chain(&cfg.skip) {
        if !SUITES.iter().any(|s| s.id.eq_ignore_ascii_case(id)) {
            return Err(VerifyError::UnknownSuite(id.clone()));
        }
    }
    let wanted = |id: &str| {
        (cfg.suites.is_empty() || cfg.suites.iter().any(|s| s.eq_ignore_ascii_case(id)))
            && !cfg.skip.iter().any(|s| s.eq_ignore_ascii_case(id))
    };
    let suites: Vec<SuiteResult> = SUITES
        .par_iter()
        .map(|info| {
            if !wanted(info.id) {
                let mut r = SuiteResult::new(info.id, info.title, "");
                r.verdict = Verdict::Skipped;
                return r;
            }
            run_suite(info.id, cfg).unwrap_or_else(|e| {
                let mut r = SuiteResult::new(info.id, info.title, "");
                r.verdict = Verdict::Inconclusive;
                r.note(e.to_string());
                r
            })
        })
        .collect();
    Ok(Report {
        schema: report::SCHEMA.into(),
        config: serde_json::to_value(cfg).expect("config serializes"),
        verdict: Report::overall(&suites),
        suites,
        environment: serde_json::json!({
            "crate": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "threads": rayon::current_num_threads(),
        }),
    })
}

/// Shared state for one suite run.
pub(crate) struct Ctx<'a> {
    pub cat: &'a Catalog,
    pub cfg: &'a Config,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a Config) -> Result<Self, VerifyError> {
        let cat = std::panic::catch_unwind(Catalog::builtin)
            .map_err(|_| VerifyError::CatalogUnavailable("bundled catalog failed to load".into()))?;
        Ok(Ctx { cat, cfg })
    }

    pub fn graph(&self, name: &str) -> Result<Graph, VerifyError> {
        Ok(self.cat.resolve(name)?)
    }

    pub fn key(&self, name: &str) -> Result<CanonKey, VerifyError> {
        Ok(canonical_key(&self.graph(name)?))
    }

    pub fn keys(&self, names: &[String]) -> Result<BTreeSet<CanonKey>, VerifyError> {
        names.iter().map(|n| self.key(n)).collect()
    }

    /// Names for displaying classes.
    pub fn names(&self, names: &[String]) -> Result<Names, VerifyError> {
        let mut m = Names::default();
        for n in names {
            m.0.entry(self.key(n)?).or_insert_with(|| n.clone());
        }
        Ok(m)
    }
}

/// Display names for canonical classes.
#[derive(Default)]
pub(crate) struct Names(BTreeMap<CanonKey, String>);

impl Names {
    /// Sorted display strings: graph6, followed by the name when known.
    pub fn show<'k>(&self, keys: impl IntoIterator<Item = &'k CanonKey>) -> Vec<String> {
        let mut v: Vec<String> = keys
            .into_iter()
            .map(|k| match self.0.get(k) {
                Some(n) => format!("{} {n}", k.form().as_str()),
                None => k.form().as_str().to_string(),
            })
            .collect();
        v.sort();
        v
    }
}

/// Reads one bundled expected-value file.
pub(crate) fn data<T: DeserializeOwned>(file: &str) -> Result<T, VerifyError> {
    let text = match file {
        "v8_supersets.json" => include_str!("../data/v8_supersets.json"),
        "v8_splits.json" => include_str!("../data/v8_splits.json"),
        "small_i4c.json" => include_str!("../data/small_i4c.json"),
        "w6_hosts.json" => include_str!("../data/w6_hosts.json"),
        "planar_i4c.json" => include_str!("../data/planar_i4c.json"),
        "i4c_list.json" => include_str!("../data/i4c_list.json"),
        "cover4.json" => include_str!("../data/cover4.json"),
        "maximal.json" => include_str!("../data/maximal.json"),
        _ => return Err(VerifyError::Data { file: file.into(), msg: "not bundled".into() }),
    };
    serde_json::from_str(text).map_err(|e| VerifyError::Data { file: file.into(), msg: e.to_string() })
}
