//! Suites on V8 and its edge supersets, vertex splits and cubic twins.

use std::collections::{BTreeMap, BTreeSet};

use minorkit::bits::{self, VertexSet};
use minorkit::canon::canonical_key;
use minorkit::constructions::enumerate_splits;
use minorkit::generate::{closure_generate, w6_free_extensions, ClosureTask, Rule};
use minorkit::{CanonKey, Graph, Pattern, Predicate};
use serde::Deserialize;

use super::{classes, forms, hosts_of, minor_scan, w6_scan};
use crate::{data, Ctx, SuiteResult, VerifyError};

#[derive(Deserialize)]
struct Named {
    claim: String,
    names: Vec<String>,
}

#[derive(Deserialize)]
struct Supersets {
    claim: String,
    profile: Vec<usize>,
    rows: BTreeMap<usize, Vec<String>>,
    maximal: Vec<String>,
    i4c: Named,
}

#[derive(Deserialize)]
struct SplitRow {
    base: String,
    vertex: u16,
    parts: [Vec<u16>; 2],
    result: String,
}

#[derive(Deserialize)]
struct Splits {
    claim: String,
    rows: Vec<SplitRow>,
    twin_supersets: Named,
    twin_splits: Named,
}

/// Every edge superset of V8 on the same vertices, by class. Each class
/// keeps the nonedge subsets (as masks over `non`) that produce it.
struct V8Supersets {
    non: Vec<(usize, usize)>,
    by_class: BTreeMap<CanonKey, (usize, Graph, Vec<u32>)>,
}

fn v8_supersets(cx: &Ctx) -> Result<V8Supersets, VerifyError> {
    let v8 = cx.graph("V8")?;
    let non: Vec<(usize, usize)> = v8.non_edges().collect();
    let mut by_class: BTreeMap<CanonKey, (usize, Graph, Vec<u32>)> = BTreeMap::new();
    for mask in 0..1u32 << non.len() {
        let g = with_mask(&v8, &non, mask);
        by_class.entry(canonical_key(&g)).or_insert_with(|| (mask.count_ones() as usize, g, Vec::new())).2.push(mask);
    }
    Ok(V8Supersets { non, by_class })
}

fn with_mask(g: &Graph, non: &[(usize, usize)], mask: u32) -> Graph {
    bits::iter(mask).fold(*g, |h, i| h.with_edge(non[i].0, non[i].1).expect("nonedge"))
}

/// The W6-free classes, with added-edge counts.
fn w6_free_supersets(cx: &Ctx, r: &mut SuiteResult, all: &V8Supersets) -> Result<BTreeMap<CanonKey, usize>, VerifyError> {
    let hosts = hosts_of(all.by_class.keys());
    let has = w6_scan(cx, r, &hosts)?;
    Ok(all.by_class.iter().zip(has).filter(|(_, h)| !h).map(|((k, (a, _, _)), _)| (*k, *a)).collect())
}

/// Label permutations of V8 that preserve it: rotations and reflections of
/// the 8-cycle.
fn v8_symmetries(v8: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for shift in 0..8 {
        for flip in [false, true] {
            let p: Vec<usize> = (0..8).map(|i| if flip { (8 + shift - i) % 8 } else { (shift + i) % 8 }).collect();
            if v8.edges().all(|(u, v)| v8.has_edge(p[u], p[v])) {
                out.push(p);
            }
        }
    }
    out
}

pub fn s1(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Supersets = data("v8_supersets.json")?;
    let mut r = SuiteResult::new("S1", "W6-free edge supersets of V8", &d.claim);
    let all = v8_supersets(cx)?;
    r.note(format!(
        "{} nonedge subsets of V8 fall into {} classes; the enumeration is complete because the order is fixed at 8",
        1u32 << all.non.len(),
        all.by_class.len()
    ));
    let free = w6_free_supersets(cx, &mut r, &all)?;

    let mut profile = vec![0usize; all.non.len() + 1];
    for &a in free.values() {
        profile[a] += 1;
    }
    let profile_ok = r.check("profile", &d.profile, &profile);
    let total: usize = d.profile.iter().sum();
    let total_ok = r.check("classes", total, free.len());

    let names: Vec<String> = d.rows.values().flatten().cloned().collect();
    let keys = cx.keys(&names)?;
    r.require("names distinct", keys.len() == names.len(), keys.len());
    let shown = cx.names(&names)?;
    for (a, row) in &d.rows {
        let expected = cx.keys(row)?;
        let observed: BTreeSet<CanonKey> = free.iter().filter(|(_, &n)| n == *a).map(|(k, _)| *k).collect();
        r.check(&format!("row {a}"), shown.show(&expected), shown.show(&observed));
    }

    let maximal: BTreeSet<CanonKey> = free
        .keys()
        .filter(|k| {
            let g = k.graph();
            let closed = g.non_edges().all(|(u, v)| !free.contains_key(&canonical_key(&g.with_edge(u, v).expect("nonedge"))));
            closed
        })
        .copied()
        .collect();
    r.check("maximal", shown.show(&cx.keys(&d.maximal)?), shown.show(&maximal));

    // The W6-free nonedge subsets must be permuted among themselves by the
    // symmetries of the labeling.
    let v8 = cx.graph("V8")?;
    let syms = v8_symmetries(&v8);
    let free_masks: BTreeSet<u32> = free.keys().flat_map(|k| all.by_class[k].2.iter().copied()).collect();
    let index: BTreeMap<(usize, usize), usize> = all.non.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let image = |p: &[usize], mask: u32| {
        bits::iter(mask).fold(0u32, |m, i| {
            let (u, v) = all.non[i];
            let e = (p[u].min(p[v]), p[u].max(p[v]));
            m | 1 << index[&e]
        })
    };
    let broken = syms.iter().flat_map(|p| free_masks.iter().map(move |&m| (p, m))).filter(|&(p, m)| !free_masks.contains(&image(p, m))).count();
    r.require("labeling symmetries permute the W6-free subsets", syms.len() == 16 && broken == 0, serde_json::json!({ "symmetries": syms.len(), "violations": broken }));

    if profile_ok && total_ok {
        let p: Vec<String> = profile.iter().take_while(|&&c| c > 0).map(|c| c.to_string()).collect();
        r.headline = Some(format!("{}/{total} classes, profile {}", free.len(), p.join(",")));
    }
    Ok(r)
}

fn label_set(g: &Graph, labels: &[u16]) -> Result<VertexSet, VerifyError> {
    labels.iter().try_fold(0, |s, &l| {
        g.index_of(l).map(|i| s | bits::bit(i)).ok_or_else(|| VerifyError::Data {
            file: "v8_splits.json".into(),
            msg: format!("label {l} not in graph"),
        })
    })
}

/// W6-free 3-connected classes among all splits of `graphs`.
fn w6_free_splits(cx: &Ctx, r: &mut SuiteResult, graphs: impl IntoIterator<Item = Graph>) -> Result<BTreeSet<CanonKey>, VerifyError> {
    let splits = classes(graphs.into_iter().flat_map(|g| enumerate_splits(&g).into_iter().map(|(_, h)| h)));
    let keep: Vec<&CanonKey> = splits.iter().filter(|(_, g)| g.is_three_connected()).map(|(k, _)| k).collect();
    let hosts = hosts_of(keep.iter().copied());
    let has = w6_scan(cx, r, &hosts)?;
    Ok(keep.into_iter().zip(has).filter(|(_, h)| !h).map(|(k, _)| *k).collect())
}

pub fn s2(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Splits = data("v8_splits.json")?;
    let mut r = SuiteResult::new("S2", "W6-free vertex splits of order-8 V8 graphs", &d.claim);

    let mut rows_free = Vec::new();
    let mut listed = BTreeSet::new();
    for (i, row) in d.rows.iter().enumerate() {
        let base = cx.graph(&row.base)?;
        let v = base.index_of(row.vertex).ok_or_else(|| VerifyError::Data {
            file: "v8_splits.json".into(),
            msg: format!("vertex {} not in {}", row.vertex, row.base),
        })?;
        let x = label_set(&base, &row.parts[0])?;
        let y = label_set(&base, &row.parts[1])?;
        let ok_parts = x & y == 0 && x | y == base.neighbors(v);
        r.require(&format!("row {i} partitions N({})", row.vertex), ok_parts, &row.parts);
        if !ok_parts {
            continue;
        }
        let h = base.split_vertex(v, x)?;
        let expected = cx.key(&row.result)?;
        listed.insert(expected);
        r.check(&format!("row {i} result"), expected.form().as_str(), canonical_key(&h).form().as_str());
        rows_free.push((format!("{} split at {}", row.base, row.vertex), h));
    }
    let has = w6_scan(cx, &mut r, &rows_free)?;
    r.require("row results are W6-free", has.iter().all(|h| !h), &has);

    // Label-free form: the W6-free 3-connected splits of the 49 classes.
    let all = v8_supersets(cx)?;
    let free = w6_free_supersets(cx, &mut r, &all)?;
    let observed = w6_free_splits(cx, &mut r, free.keys().map(|k| k.graph()))?;
    r.check("W6-free splits of the 49 classes", forms(&listed), forms(&observed));
    r.note("splits leaving a 2-separation are discarded; only 3-connected outcomes are considered");

    let shown = cx.names(&d.twin_supersets.names)?;
    let twin1 = cx.graph(&d.twin_supersets.names[0])?;
    let ext = w6_free_extensions(&twin1, cx.cfg.budget)?;
    r.check(
        "W6-free edge supersets of V8 with one twin",
        shown.show(&cx.keys(&d.twin_supersets.names)?),
        shown.show(ext.all.keys()),
    );

    let shown = cx.names(&d.twin_splits.names)?;
    let twins: Vec<Graph> = d.twin_supersets.names.iter().map(|n| cx.graph(n)).collect::<Result<_, _>>()?;
    let observed = w6_free_splits(cx, &mut r, twins)?;
    let allowed = cx.keys(&d.twin_splits.names)?;
    let outside: BTreeSet<CanonKey> = observed.difference(&allowed).copied().collect();
    r.check("W6-free splits of the one-twin graphs outside the two-twin variants", Vec::<String>::new(), shown.show(&outside));
    r.require("V8^2 is a W6-free split", observed.contains(&cx.key(&d.twin_splits.names[0])?), shown.show(&observed));
    r.note(d.twin_splits.claim);
    Ok(r)
}

/// Largest order reached by the closure from V8, given the family depth.
fn s3_max_order(depth: usize) -> usize {
    8 + depth.min(2)
}

pub fn s3(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let claim = "Every 3-connected W6-free graph obtained from V8 by edge additions and vertex splits with more than 8 vertices has two cubic vertices with the same neighbors and is a minor of V8^i+13+16+36";
    let mut r = SuiteResult::new("S3", "larger V8 graphs have cubic twins", claim);
    let max_order = s3_max_order(cx.cfg.depth);
    r.reduced_depth = max_order < 10;
    let mut task = ClosureTask::new(
        vec![cx.graph("V8")?],
        &[Rule::AddEdge, Rule::SplitVertex],
        max_order,
        usize::MAX,
        Predicate::fixed("3-connected & w6-free"),
    );
    task.budget = cx.cfg.budget;
    let closure = closure_generate(&task)?;
    r.note(format!(
        "closure from V8 under edge addition and vertex splitting, up to order {max_order}: {} classes",
        closure.len()
    ));
    r.note(format!("classes by order: {:?}", closure.order_counts()));

    let large: Vec<CanonKey> = closure.keys().iter().filter(|k| k.order() > 8).copied().collect();
    let without: Vec<String> = large.iter().filter(|k| !k.graph().has_cubic_twins()).map(|k| k.form().as_str().to_string()).collect();
    r.check("members above order 8 without cubic twins", Vec::<String>::new(), without);

    let mut missing = Vec::new();
    for order in 9..=max_order {
        let name = format!("V8^{}+13+16+36", order - 8);
        let host = Pattern::new(&cx.graph(&name)?);
        let members: Vec<(String, Graph)> = large.iter().filter(|k| k.order() == order).map(|k| (format!("{name} >= {}", k.form().as_str()), k.graph())).collect();
        // Each member is the pattern and the family graph is the host.
        for (subject, g) in &members {
            let found = minor_scan(cx, &mut r, &[(subject.clone(), *host.graph())], &Pattern::new(g), subject)?;
            if !found[0] {
                missing.push(subject.clone());
            }
        }
    }
    r.check("members not contained in V8^i+13+16+36", Vec::<String>::new(), missing);
    Ok(r)
}

pub fn s4(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Supersets = data("v8_supersets.json")?;
    let mut r = SuiteResult::new("S4", "internally 4-connected V8 supersets", &d.i4c.claim);
    let all = v8_supersets(cx)?;
    let free = w6_free_supersets(cx, &mut r, &all)?;
    let i4c: BTreeSet<CanonKey> = free.keys().filter(|k| k.graph().is_internally_four_connected()).copied().collect();
    let shown = cx.names(&d.i4c.names)?;
    r.check("i4c W6-free classes", shown.show(&cx.keys(&d.i4c.names)?), shown.show(&i4c));
    Ok(r)
}
