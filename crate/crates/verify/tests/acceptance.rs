//! Acceptance gate: runs every suite once at default settings and prints one
//! line per criterion. Criteria that the recomputation contradicts are listed
//! in `KNOWN_RED`; the gate fails if any criterion changes color. Runs
//! without the libtest harness so the lines always print.

use std::collections::BTreeMap;
use std::time::Duration;

use minorkit::canon::canonical_key;
use minorkit::catalog::Catalog;
use minorkit::format::from_graph6;
use minorkit::{verify_minor_model, MinorModel};
use minorkit_verify::{run_all, Check, Config, Report, SuiteResult, Verdict, Witness};

/// Criteria whose expected values disagree with the recomputation.
/// 3: K^{2',1}_{3,3} is not internally 4-connected, so the K▽ superset profile
///    has 3 classes with four added edges instead of 4.
/// 8: V8 itself is internally 4-connected and W6-free, giving five i4c
///    classes among the 49 instead of four.
/// 10: H1a1 has W6-free edge additions whose maximal superset belongs to an
///    unrealized family, so re-embedding cannot be certified.
const KNOWN_RED: [usize; 3] = [3, 8, 10];

// Runtime ceilings per criterion.
const S1_LIMIT: Duration = Duration::from_secs(5 * 60);
const ORDER6_LIMIT: Duration = Duration::from_secs(60);
const S6_LIMIT: Duration = Duration::from_secs(5);
const S15_LIMIT: Duration = Duration::from_secs(1);
const S9_LIMIT: Duration = Duration::from_secs(60 * 60);
const S14_LIMIT: Duration = Duration::from_secs(2 * 60);

struct Outcome {
    ok: bool,
    detail: String,
}

fn suite<'r>(report: &'r Report, id: &str) -> &'r SuiteResult {
    report.suites.iter().find(|s| s.id == id).unwrap_or_else(|| panic!("suite {id} missing"))
}

fn runtime(s: &SuiteResult) -> Duration {
    Duration::from_millis(s.runtime_ms)
}

fn failed<'a>(checks: impl IntoIterator<Item = &'a Check>) -> Vec<&'a str> {
    checks.into_iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect()
}

/// All named checks exist and hold; the detail lists what went wrong.
fn named(s: &SuiteResult, names: &[&str]) -> (bool, Vec<String>) {
    let mut bad = Vec::new();
    for n in names {
        match s.find(n) {
            Some(c) if c.ok => {}
            Some(c) => bad.push(format!("{n}: expected {} observed {}", c.expected, c.observed)),
            None => bad.push(format!("{n}: missing")),
        }
    }
    (bad.is_empty(), bad)
}

fn timed(ok: bool, s: &SuiteResult, limit: Duration, mut bad: Vec<String>) -> Outcome {
    let t = runtime(s);
    let fast = t < limit;
    if !fast {
        bad.push(format!("{} took {t:?}, limit {limit:?}", s.id));
    }
    Outcome { ok: ok && fast && s.verdict != Verdict::Inconclusive, detail: detail(&bad, Some((t, limit))) }
}

fn detail(bad: &[String], time: Option<(Duration, Duration)>) -> String {
    let t = time.map(|(t, l)| format!("{} ms of {} s", t.as_millis(), l.as_secs())).unwrap_or_default();
    if bad.is_empty() {
        t
    } else {
        let mut d = bad.join("; ");
        if d.len() > 300 {
            d.truncate(300);
            d.push_str("...");
        }
        if t.is_empty() {
            d
        } else {
            format!("{t}; {d}")
        }
    }
}

fn whole(s: &SuiteResult, prefix: &str) -> Outcome {
    let checks: Vec<&Check> = s.checks.iter().filter(|c| c.name.starts_with(prefix)).collect();
    let bad: Vec<String> = failed(checks.iter().copied()).into_iter().map(String::from).collect();
    let ok = !checks.is_empty() && bad.is_empty() && s.verdict != Verdict::Inconclusive;
    Outcome { ok, detail: detail(&bad, None) }
}

fn witness_valid(w: &Witness) -> bool {
    let (Ok(host), Ok(pattern)) = (from_graph6(&w.graph6), from_graph6(&w.pattern_graph6)) else { return false };
    let sets = w.branch_sets.iter().map(|s| s.iter().fold(0u32, |acc, &v| acc | 1 << v)).collect();
    verify_minor_model(&host, &pattern, &MinorModel { branch_sets: sets })
}

fn criteria(r: &Report) -> BTreeMap<usize, (&'static str, Outcome)> {
    let mut out = BTreeMap::new();

    let s1 = suite(r, "S1");
    let (ok, bad) = named(s1, &["profile", "classes", "names distinct"]);
    out.insert(1, ("W6-free V8 supersets: 49 classes, profile 1,2,10,20,14,2", timed(ok, s1, S1_LIMIT, bad)));

    let s7 = suite(r, "S7");
    let (ok, bad) = named(s7, &["order 6"]);
    out.insert(2, ("order-6 i4c nonplanar W6-free graphs are K33, DW+4, K6-e, K6", timed(ok, s7, ORDER6_LIMIT, bad)));

    let (ok, bad) = named(s7, &["K▽ candidates", "K▽ is the catalog graph", "K▽ profile"]);
    out.insert(3, ("K▽ is unique with superset profile 1,2,4,3,1", Outcome { ok, detail: detail(&bad, None) }));

    let s6 = suite(r, "S6");
    let certified = s6.witnesses.len() >= 3 && s6.witnesses.iter().all(witness_valid);
    let mut bad: Vec<String> = failed(&s6.checks).into_iter().map(String::from).collect();
    if !certified {
        bad.push(format!("{} witnesses, not all valid", s6.witnesses.len()));
    }
    out.insert(4, (
        "W6 in L(K33), AW+6 and K44-3K2 with checked certificates",
        timed(s6.verdict == Verdict::Pass && certified, s6, S6_LIMIT, bad),
    ));

    let s15 = suite(r, "S15");
    let (ok, bad) = named(s15, &["vertices whose star contracts to W6"]);
    out.insert(5, ("every Petersen star contracts to W6 (10/10)", timed(ok, s15, S15_LIMIT, bad)));

    let s9 = suite(r, "S9");
    let (ok, mut bad) = named(s9, &["i4c counts by order", "i4c classes", "W6-free", "with W6"]);
    let witnessed = |name: &str| {
        let key = canonical_key(&Catalog::builtin().resolve(name).expect("catalog name"));
        s9.witnesses
            .iter()
            .any(|w| witness_valid(w) && from_graph6(&w.graph6).is_ok_and(|g| canonical_key(&g) == key))
    };
    for n in ["C2_8+e", "R"] {
        if !witnessed(n) {
            bad.push(format!("no W6 certificate for {n}"));
        }
    }
    let ok = ok && witnessed("C2_8+e") && witnessed("R");
    out.insert(6, ("planar i4c survey: counts 1,1,3,1,2,1 and 7 W6-free", timed(ok, s9, S9_LIMIT, bad)));

    out.insert(7, ("T-sums of K4 and K33 give the tabulated classes", whole(suite(r, "S11"), "tsum-k4-k33 ")));

    let (ok, bad) = named(suite(r, "S4"), &["i4c W6-free classes"]);
    out.insert(8, ("exactly four of the 49 V8 supersets are i4c", Outcome { ok, detail: detail(&bad, None) }));

    let s14 = suite(r, "S14");
    let relevant: Vec<&Check> = s14.checks.iter().filter(|c| !c.name.contains("cubic twins")).collect();
    let bad: Vec<String> = failed(relevant.iter().copied()).into_iter().map(String::from).collect();
    let ok = relevant.len() >= 6 && bad.is_empty() && !s14.reduced_depth;
    out.insert(9, ("both infinite families W6-free to depth 4, cores reduce", timed(ok, s14, S14_LIMIT, bad)));

    let (s13, s16) = (suite(r, "S13"), suite(r, "S16"));
    let bad: Vec<String> = failed(s13.checks.iter().chain(&s16.checks)).into_iter().map(String::from).collect();
    let ok = bad.is_empty() && s13.verdict == Verdict::Pass && s16.verdict == Verdict::Pass;
    out.insert(10, ("maximal graphs: every addition or split has W6 or re-embeds", Outcome { ok, detail: detail(&bad, None) }));

    let e1 = suite(r, "E1");
    let bad: Vec<String> = failed(&e1.checks).into_iter().map(String::from).collect();
    out.insert(11, ("engine agrees with minor, isomorphism and certificate oracles", Outcome {
        ok: e1.verdict == Verdict::Pass && e1.checks.len() >= 7,
        detail: detail(&bad, None),
    }));

    let twins: Vec<&Check> = s14.checks.iter().filter(|c| c.name.contains("cubic twins")).collect();
    let bad: Vec<String> = failed(twins.iter().copied()).into_iter().map(String::from).collect();
    let ok = twins.len() == 2 && bad.is_empty() && suite(r, "S3").verdict == Verdict::Pass;
    out.insert(12, ("family members above order 11 have cubic twins", Outcome { ok, detail: detail(&bad, None) }));

    out
}

fn main() {
    let report = run_all(&Config::default()).expect("suites run");
    let results = criteria(&report);
    let mut changed = Vec::new();
    for (n, (title, o)) in &results {
        let mark = if o.ok { "PASS" } else { "FAIL" };
        let known = if KNOWN_RED.contains(n) { " [known]" } else { "" };
        println!("criterion {n:>2} {mark}{known}  {title}  {}", o.detail);
        if o.ok == KNOWN_RED.contains(n) {
            changed.push(*n);
        }
    }
    let invalid: Vec<String> = report
        .suites
        .iter()
        .flat_map(|s| s.witnesses.iter().filter(|w| !witness_valid(w)).map(move |w| format!("{} {}", s.id, w.subject)))
        .collect();
    let total: usize = report.suites.iter().map(|s| s.witnesses.len()).sum();
    println!("witnesses rechecked from their records: {}/{total}", total - invalid.len());
    let mut ok = results.len() == 12;
    if !invalid.is_empty() {
        println!("witnesses failing recheck: {invalid:?}");
        ok = false;
    }
    if !changed.is_empty() {
        println!("criteria changed color: {changed:?}");
        ok = false;
    }
    println!("acceptance gate: {}", if ok { "ok" } else { "FAILED" });
    if !ok {
        std::process::exit(1);
    }
}
