//! Suites on internally 4-connected graphs: small orders, the planar
//! survey, four-vertex covers and the final list.

use std::collections::{BTreeMap, BTreeSet};

use minorkit::bits;
use minorkit::generate::{enumerate_all_graphs, generate_3connected};
use minorkit::{CanonKey, Graph, Pattern, Predicate};
use serde::Deserialize;

use super::{classes, hosts_of, minor_scan, w6_scan};
use crate::{data, Ctx, SuiteResult, VerifyError};

#[derive(Deserialize)]
struct Named {
    claim: String,
    names: Vec<String>,
}

#[derive(Deserialize)]
struct Ktri {
    claim: String,
    order: usize,
    size: usize,
    profile: BTreeMap<usize, usize>,
    names: BTreeMap<usize, Vec<String>>,
}

#[derive(Deserialize)]
struct Small {
    order5: Named,
    order6: Named,
    order7: Named,
    ktri: Ktri,
}

#[derive(Deserialize)]
struct Hosts {
    claim: String,
    hosts: Vec<String>,
}

#[derive(Deserialize)]
struct Survey {
    claim: String,
    counts: BTreeMap<usize, usize>,
    names: BTreeMap<usize, Vec<String>>,
    w6_free: Vec<String>,
    with_w6: Vec<String>,
}

#[derive(Deserialize)]
struct List {
    claim: String,
    names: Vec<String>,
    v8_containing: Vec<String>,
    isomorphic: Vec<[String; 2]>,
    exhaustive_orders: Vec<usize>,
}

#[derive(Deserialize)]
struct Cover {
    claim: String,
    names: Vec<String>,
    max_order: usize,
}

/// Cubic vertices lying in a triangle.
fn cubic_in_triangle(g: &Graph) -> Vec<u16> {
    (0..g.order())
        .filter(|&v| g.degree(v) == 3 && bits::iter(g.neighbors(v)).any(|u| g.neighbors(u) & g.neighbors(v) != 0))
        .map(|v| g.label(v))
        .collect()
}

fn orders_of(keys: &BTreeSet<CanonKey>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for k in keys {
        *m.entry(k.order()).or_insert(0) += 1;
    }
    m
}

pub fn s5(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let claim = "A cubic vertex of an internally 4-connected graph is not in a triangle";
    let mut r = SuiteResult::new("S5", "cubic vertices of i4c graphs avoid triangles", claim);
    let i4c = Predicate::fixed("i4c");
    let mut seen: BTreeSet<CanonKey> = BTreeSet::new();
    for n in 5..=7 {
        seen.extend(enumerate_all_graphs(n, &i4c)?.keys().iter().copied());
    }
    let exhaustive = seen.len();
    seen.extend(
        cx.cat.entries().iter().filter(|e| e.graph.is_internally_four_connected()).map(|e| minorkit::canon::canonical_key(&e.graph)),
    );
    r.note(format!(
        "{exhaustive} i4c classes from exhaustive enumeration at orders 5 to 7, {} including catalog entries",
        seen.len()
    ));
    let with_cubic = seen.iter().filter(|k| (0..k.order()).any(|v| k.graph().degree(v) == 3)).count();
    r.note(format!("{with_cubic} of them have a cubic vertex"));
    let bad: Vec<String> = seen
        .iter()
        .filter(|k| !cubic_in_triangle(&k.graph()).is_empty())
        .map(|k| k.form().as_str().to_string())
        .collect();
    r.check("i4c graphs with a cubic vertex in a triangle", Vec::<String>::new(), bad);
    Ok(r)
}

pub fn s6(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Hosts = data("w6_hosts.json")?;
    let mut r = SuiteResult::new("S6", "W6 in L(K33), AW+6 and K44-3K2", &d.claim);
    let hosts: Vec<(String, Graph)> = d.hosts.iter().map(|n| Ok((n.clone(), cx.graph(n)?))).collect::<Result<_, VerifyError>>()?;
    let found = w6_scan(cx, &mut r, &hosts)?;
    for (n, f) in d.hosts.iter().zip(found) {
        r.check(&format!("{n} has W6"), true, f);
    }
    Ok(r)
}

pub fn s7(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Small = data("small_i4c.json")?;
    let mut r = SuiteResult::new(
        "S7",
        "small i4c nonplanar graphs and K▽ supersets",
        "Exhaustive classification of internally 4-connected W6-free nonplanar graphs of orders 5, 6 and 7, and the edge supersets of K▽",
    );

    let o5 = enumerate_all_graphs(5, &Predicate::fixed("i4c & nonplanar"))?;
    let shown = cx.names(&d.order5.names)?;
    r.check("order 5", shown.show(&cx.keys(&d.order5.names)?), shown.show(o5.keys()));
    r.note(d.order5.claim);

    let target = Predicate::fixed("3-connected & nonplanar & i4c & w6-free");
    let o6 = enumerate_all_graphs(6, &target)?;
    let shown = cx.names(&d.order6.names)?;
    r.check("order 6", shown.show(&cx.keys(&d.order6.names)?), shown.show(o6.keys()));
    r.note(format!("{}; all 2^15 labeled graphs on 6 vertices examined", d.order6.claim));

    let nonplanar7 = enumerate_all_graphs(7, &Predicate::fixed("3-connected & nonplanar"))?;
    let o7 = nonplanar7.filter(&target, cx.cfg.budget)?;
    let shown = cx.names(&d.order7.names)?;
    r.check("order 7", shown.show(&cx.keys(&d.order7.names)?), shown.show(o7.keys()));
    r.note(d.order7.claim);

    // K▽ is the unique 3-connected nonplanar graph of its order and size.
    let candidates: Vec<CanonKey> =
        nonplanar7.keys().iter().filter(|k| k.order() == d.ktri.order && k.graph().size() == d.ktri.size).copied().collect();
    r.check("K▽ candidates", 1, candidates.len());
    let ktri = cx.key("Ktri33")?;
    r.check("K▽ is the catalog graph", vec![ktri.form().as_str()], candidates.iter().map(|k| k.form().as_str().to_string()).collect::<Vec<_>>());

    let ext = minorkit::generate::w6_free_extensions(&ktri.graph(), cx.cfg.budget)?;
    let size = ktri.graph().size();
    let i4c: BTreeSet<CanonKey> = ext.all.keys().iter().filter(|k| k.graph().is_internally_four_connected()).copied().collect();
    let mut profile: BTreeMap<usize, usize> = BTreeMap::new();
    for k in &i4c {
        *profile.entry(k.graph().size() - size).or_insert(0) += 1;
    }
    r.check("K▽ profile", &d.ktri.profile, &profile);
    r.note(d.ktri.claim);
    let names: Vec<String> = d.ktri.names.values().flatten().cloned().collect();
    let shown = cx.names(&names)?;
    for (a, row) in &d.ktri.names {
        let observed: BTreeSet<CanonKey> = i4c.iter().filter(|k| k.graph().size() - size == *a).copied().collect();
        r.check(&format!("K▽ plus {a} edges"), shown.show(&cx.keys(row)?), shown.show(&observed));
    }

    // Every order-7 graph found contains K▽, hence is an edge superset of it.
    let hosts = hosts_of(o7.keys());
    let found = minor_scan(cx, &mut r, &hosts, &Pattern::new(&ktri.graph()), "K▽")?;
    r.require("order-7 graphs contain K▽", found.iter().all(|&f| f), found.iter().filter(|&&f| f).count());
    Ok(r)
}

/// Graphs whose edges are all met by the four vertices `0..4`: any edges
/// among those four, plus independent outer vertices attached to three or
/// four of them, with no two cubic outer vertices sharing neighbors.
fn four_cover_graphs(max_order: usize) -> Vec<Graph> {
    let inner: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
    let types: [u32; 5] = [0b1110, 0b1101, 0b1011, 0b0111, 0b1111];
    let mut out = Vec::new();
    let outer_max = max_order - 4;
    // Each cubic type appears at most once; the degree-4 type any number of times.
    for cubic in 0u32..16 {
        let c = cubic.count_ones() as usize;
        for full in 0..=outer_max.saturating_sub(c) {
            let attach: Vec<u32> = bits::iter(cubic).map(|i| types[i]).chain(std::iter::repeat_n(types[4], full)).collect();
            for mask in 0u32..1 << inner.len() {
                let n = 4 + attach.len();
                let mut rows = vec![0u32; n];
                for (i, &(u, v)) in inner.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        rows[u] |= 1 << v;
                        rows[v] |= 1 << u;
                    }
                }
                for (j, &a) in attach.iter().enumerate() {
                    let y = 4 + j;
                    rows[y] = a;
                    for x in bits::iter(a) {
                        rows[x] |= 1 << y;
                    }
                }
                out.push(Graph::from_adjacency(&rows).expect("symmetric"));
            }
        }
    }
    out
}

fn has_cover_of_size(g: &Graph, k: usize) -> bool {
    let mut found = false;
    bits::for_each_subset_of_size(g.vertex_set(), k, |s| {
        if !found && g.edges().all(|(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1) {
            found = true;
        }
    });
    found
}

pub fn s8(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Cover = data("cover4.json")?;
    let mut r = SuiteResult::new("S8", "graphs covered by four vertices", &d.claim);
    r.note(format!(
        "outer vertices have degree 3 or 4 (i4c forces degree at least 3), cubic outer vertices have distinct neighborhoods (two with equal ones leave a 3-separation with both sides of at least two vertices), and the order runs from 8 to {}",
        d.max_order
    ));
    let all = classes(four_cover_graphs(d.max_order));
    let scoped: Vec<(&CanonKey, &Graph)> = all
        .iter()
        .filter(|(k, g)| k.order() >= 8 && !has_cover_of_size(g, 3) && g.is_internally_four_connected())
        .collect();
    r.note(format!("{} classes, {} of order 8 or more that are i4c with no 3-vertex cover", all.len(), scoped.len()));
    let hosts = hosts_of(scoped.iter().map(|(k, _)| *k));
    let has = w6_scan(cx, &mut r, &hosts)?;
    let free: BTreeSet<CanonKey> = scoped.iter().zip(has).filter(|(_, h)| !h).map(|((k, _), _)| **k).collect();
    let shown = cx.names(&d.names)?;
    r.check("i4c W6-free", shown.show(&cx.keys(&d.names)?), shown.show(&free));
    Ok(r)
}

pub fn s9(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: Survey = data("planar_i4c.json")?;
    let mut r = SuiteResult::new("S9", "i4c planar survey", &d.claim);
    let (max_n, max_m) = (11, 17);
    let planar = generate_3connected(max_n, max_m, &Predicate::fixed("planar"))?;
    r.note(format!(
        "{} 3-connected planar classes with at most {max_n} vertices and {max_m} edges, grown from wheels by edge additions and vertex splits; planarity is kept by minors so pruning on it is complete",
        planar.len()
    ));
    let i4c: BTreeSet<CanonKey> = planar.keys().iter().filter(|k| k.graph().is_internally_four_connected()).copied().collect();
    r.check("i4c counts by order", &d.counts, orders_of(&i4c));
    let names: Vec<String> = d.names.values().flatten().cloned().collect();
    let shown = cx.names(&names)?;
    r.check("i4c classes", shown.show(&cx.keys(&names)?), shown.show(&i4c));

    let hosts: Vec<(String, Graph)> = shown.show(&i4c).into_iter().zip(&i4c).map(|(s, k)| (s, k.graph())).collect();
    let has = w6_scan(cx, &mut r, &hosts)?;
    let free: BTreeSet<CanonKey> = i4c.iter().zip(&has).filter(|(_, h)| !**h).map(|(k, _)| *k).collect();
    let with: BTreeSet<CanonKey> = i4c.iter().zip(&has).filter(|(_, h)| **h).map(|(k, _)| *k).collect();
    r.check("W6-free", shown.show(&cx.keys(&d.w6_free)?), shown.show(&free));
    r.check("with W6", shown.show(&cx.keys(&d.with_w6)?), shown.show(&with));
    Ok(r)
}

pub fn s10(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let d: List = data("i4c_list.json")?;
    let mut r = SuiteResult::new("S10", "the 27 i4c W6-free graphs", &d.claim);
    let keys = cx.keys(&d.names)?;
    r.check("distinct classes", d.names.len(), keys.len());

    let hosts: Vec<(String, Graph)> = d.names.iter().map(|n| Ok((n.clone(), cx.graph(n)?))).collect::<Result<_, VerifyError>>()?;
    let not_i4c: Vec<&str> = hosts.iter().filter(|(_, g)| !g.is_internally_four_connected()).map(|(n, _)| n.as_str()).collect();
    r.check("members that are not i4c", Vec::<&str>::new(), not_i4c);
    let has = w6_scan(cx, &mut r, &hosts)?;
    let with: Vec<&str> = hosts.iter().zip(&has).filter(|(_, h)| **h).map(|((n, _), _)| n.as_str()).collect();
    r.check("members with W6", Vec::<&str>::new(), with);
    let tri: Vec<&str> = hosts.iter().filter(|(_, g)| !cubic_in_triangle(g).is_empty()).map(|(n, _)| n.as_str()).collect();
    r.check("members with a cubic vertex in a triangle", Vec::<&str>::new(), tri);

    let v8 = minorkit::predicate::v8();
    let found = minor_scan(cx, &mut r, &hosts, v8, "V8")?;
    let mut observed: Vec<&str> = hosts.iter().zip(&found).filter(|(_, f)| **f).map(|((n, _), _)| n.as_str()).collect();
    observed.sort();
    let mut expected: Vec<&str> = d.v8_containing.iter().map(String::as_str).collect();
    expected.sort();
    r.check("members containing V8", expected, observed);

    for [a, b] in &d.isomorphic {
        r.check(&format!("{a} is {b}"), cx.key(b)?.form().as_str(), cx.key(a)?.form().as_str());
    }

    let shown = cx.names(&d.names)?;
    let target = Predicate::fixed("i4c & w6-free");
    for &n in &d.exhaustive_orders {
        let got = enumerate_all_graphs(n, &target)?;
        let listed: BTreeSet<CanonKey> = keys.iter().filter(|k| k.order() == n).copied().collect();
        r.check(&format!("all i4c W6-free graphs of order {n}"), shown.show(&listed), shown.show(got.keys()));
    }
    Ok(r)
}
