pub mod families;
pub mod i4c;
pub mod tsum;
pub mod v8;

use std::collections::BTreeMap;

use minorkit::canon::canonical_key;
use minorkit::minor::find_minor_model_escalating;
use minorkit::{verify_minor_model, CanonKey, Graph, MinorModel, Pattern};
use rayon::prelude::*;

use crate::{Ctx, SuiteResult, VerifyError, Witness};

/// Minor searches over many hosts, run in parallel. Positive answers are
/// certificate-checked and recorded in order; the result flags which hosts
/// contain the pattern.
pub(crate) fn minor_scan(
    cx: &Ctx,
    r: &mut SuiteResult,
    hosts: &[(String, Graph)],
    pattern: &Pattern,
    pattern_name: &str,
) -> Result<Vec<bool>, VerifyError> {
    let budget = cx.cfg.budget;
    let models: Vec<Option<MinorModel>> = hosts
        .par_iter()
        .map(|(_, g)| find_minor_model_escalating(g, pattern, budget))
        .collect::<Result<_, _>>()?;
    let mut found = Vec::with_capacity(hosts.len());
    for ((subject, g), m) in hosts.iter().zip(models) {
        found.push(m.is_some());
        if let Some(m) = m {
            record(r, subject, g, pattern.graph(), pattern_name, &m)?;
        }
    }
    Ok(found)
}

pub(crate) fn w6_scan(cx: &Ctx, r: &mut SuiteResult, hosts: &[(String, Graph)]) -> Result<Vec<bool>, VerifyError> {
    minor_scan(cx, r, hosts, minorkit::predicate::w6(), "W6")
}

pub(crate) fn record(
    r: &mut SuiteResult,
    subject: &str,
    host: &Graph,
    pattern: &Graph,
    pattern_name: &str,
    m: &MinorModel,
) -> Result<(), VerifyError> {
    if !verify_minor_model(host, pattern, m) {
        return Err(VerifyError::BadCertificate(format!("{pattern_name} in {subject}")));
    }
    r.witnesses.push(Witness {
        subject: subject.into(),
        graph6: minorkit::format::to_graph6(host),
        pattern: pattern_name.into(),
        pattern_graph6: minorkit::format::to_graph6(pattern),
        branch_sets: m.branch_sets.iter().map(|&s| minorkit::bits::iter(s).collect()).collect(),
    });
    Ok(())
}

/// Canonical classes with a representative, in key order.
pub(crate) fn classes(graphs: impl IntoIterator<Item = Graph>) -> BTreeMap<CanonKey, Graph> {
    let mut m = BTreeMap::new();
    for g in graphs {
        m.entry(canonical_key(&g)).or_insert(g);
    }
    m
}

pub(crate) fn forms<'k>(keys: impl IntoIterator<Item = &'k CanonKey>) -> Vec<String> {
    let mut v: Vec<String> = keys.into_iter().map(|k| k.form().as_str().to_string()).collect();
    v.sort();
    v
}

/// Hosts named by graph6 for scanning.
pub(crate) fn hosts_of<'k>(keys: impl IntoIterator<Item = &'k CanonKey>) -> Vec<(String, Graph)> {
    keys.into_iter().map(|k| (k.form().as_str().to_string(), k.graph())).collect()
}
