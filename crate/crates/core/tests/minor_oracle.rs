//! Minor search checked against exhaustive delete/contract closure, plus
//! certificate and monotonicity properties.

use std::collections::{HashMap, HashSet};

use minorkit::canon::canonical_key;
use minorkit::minor::{find_minor_model, Pattern, find_minor_model_with, DEFAULT_BUDGET};
use minorkit::{verify_minor_model, CanonKey, Graph, MinorModel};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::build(n, edges).unwrap()
}

fn wheel(n: usize) -> Graph {
    let mut e: Vec<(usize, usize)> = (1..=n).map(|i| (i, i % n + 1)).collect();
    e.extend((1..=n).map(|i| (i, n + 1)));
    Graph::build(n + 1, e).unwrap()
}

fn complete(n: usize) -> Graph {
    Graph::build(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)))).unwrap()
}

fn k33() -> Graph {
    Graph::build(6, (1..=3).flat_map(|a| (4..=6).map(move |b| (a, b)))).unwrap()
}

/// Every minor of `g`, by canonical key, via single deletions and contractions.
fn all_minors(g: &Graph, memo: &mut HashMap<CanonKey, HashSet<CanonKey>>) -> HashSet<CanonKey> {
    let key = canonical_key(g);
    if let Some(s) = memo.get(&key) {
        return s.clone();
    }
    let mut out = HashSet::from([key]);
    let mut children = Vec::new();
    for (u, v) in g.edges() {
        children.push(g.without_edge(u, v).unwrap());
        children.push(g.contract(u, v).unwrap());
    }
    if g.order() > 1 {
        for v in 0..g.order() {
            children.push(g.without_vertex(v).unwrap());
        }
    }
    for c in children {
        out.extend(all_minors(&c, memo));
    }
    memo.insert(key, out.clone());
    out
}

#[test]
fn search_agrees_with_exhaustive_closure() {
    let patterns = [complete(4), k33(), wheel(4), wheel(5)];
    let prepared: Vec<Pattern> = patterns.iter().map(Pattern::new).collect();
    let keys: Vec<CanonKey> = patterns.iter().map(canonical_key).collect();
    let mut memo = HashMap::new();
    let mut checked = 0;
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            let minors = all_minors(&g, &mut memo);
            for ((p, h), key) in prepared.iter().zip(&patterns).zip(&keys) {
                let found = find_minor_model_with(&g, p, DEFAULT_BUDGET).unwrap();
                assert_eq!(found.is_some(), minors.contains(key), "host {g:?} pattern {h:?}");
                if let Some(m) = found {
                    assert!(verify_minor_model(&g, h, &m));
                }
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 4 * (1 + 2 + 8 + 64 + 1024 + 32768));
}

#[test]
fn search_agrees_on_every_small_pattern() {
    // All classes of connected and disconnected patterns up to 5 vertices
    // against every 6-vertex host class.
    let mut memo = HashMap::new();
    let mut hosts = HashMap::new();
    for mask in 0..(1u64 << 15) {
        let g = graph_from_mask(6, mask);
        hosts.entry(canonical_key(&g)).or_insert(g);
    }
    let mut patterns = HashMap::new();
    for n in 1..=5 {
        for mask in 0..(1u64 << (n * (n - 1) / 2)) {
            let h = graph_from_mask(n, mask);
            patterns.entry(canonical_key(&h)).or_insert(h);
        }
    }
    for g in hosts.values() {
        let minors = all_minors(g, &mut memo);
        for (key, h) in &patterns {
            let found = find_minor_model(g, h).unwrap();
            assert_eq!(found.is_some(), minors.contains(key), "host {g:?} pattern {h:?}");
            if let Some(m) = found {
                assert!(verify_minor_model(g, h, &m));
            }
        }
    }
}

/// Invalid by construction: each corruption breaks one of the model rules.
fn corrupt(model: &MinorModel, host: &Graph, rng: &mut ChaCha8Rng) -> MinorModel {
    let mut m = model.clone();
    let k = m.branch_sets.len();
    loop {
        match rng.gen_range(0..5) {
            0 => {
                // Overlap two branch sets.
                if k < 2 {
                    continue;
                }
                let a = rng.gen_range(0..k);
                let b = (a + rng.gen_range(1..k)) % k;
                let v = m.branch_sets[b].trailing_zeros();
                m.branch_sets[a] |= 1 << v;
            }
            1 => {
                let a = rng.gen_range(0..k);
                m.branch_sets[a] = 0;
            }
            2 => {
                if host.order() == 32 {
                    continue;
                }
                let a = rng.gen_range(0..k);
                m.branch_sets[a] |= 1 << rng.gen_range(host.order()..32);
            }
            3 => {
                if rng.gen_bool(0.5) {
                    m.branch_sets.pop();
                } else {
                    m.branch_sets.push(0);
                }
            }
            _ => {
                // Replace a set by two nonadjacent unused vertices.
                let used: u32 = m.branch_sets.iter().fold(0, |a, s| a | s);
                let a = rng.gen_range(0..k);
                let free: Vec<usize> = (0..host.order())
                    .filter(|&v| (used & !m.branch_sets[a]) >> v & 1 == 0)
                    .collect();
                let pair = free.iter().flat_map(|&x| free.iter().map(move |&y| (x, y))).find(|&(x, y)| {
                    x < y && !host.has_edge(x, y)
                });
                match pair {
                    Some((x, y)) => m.branch_sets[a] = 1 << x | 1 << y,
                    None => continue,
                }
            }
        }
        return m;
    }
}

#[test]
fn checker_rejects_corrupted_models() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let w6 = wheel(6);
    let mut hosts = Vec::new();
    while hosts.len() < 40 {
        let n = rng.gen_range(8..=11);
        let mask = rng.gen::<u64>() & ((1u64 << (n * (n - 1) / 2)) - 1);
        let g = graph_from_mask(n, mask);
        if let Some(m) = find_minor_model(&g, &w6).unwrap() {
            assert!(verify_minor_model(&g, &w6, &m));
            hosts.push((g, m));
        }
    }
    let mut rejected = 0;
    for i in 0..1000 {
        let (g, m) = &hosts[i % hosts.len()];
        let bad = corrupt(m, g, &mut rng);
        assert!(!verify_minor_model(g, &w6, &bad), "{bad:?} on {g:?}");
        rejected += 1;
    }
    assert_eq!(rejected, 1000);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mask = rng.gen::<u64>() & ((1u64 << (n * (n - 1) / 2)) - 1);
        graph_from_mask(n, mask)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minors_are_monotone(g in arb_graph(9), pick in any::<prop::sample::Index>()) {
        for h in [complete(4), k33(), wheel(4), wheel(5)] {
            let here = find_minor_model(&g, &h).unwrap().is_some();
            let edges: Vec<_> = g.edges().collect();
            let non: Vec<_> = g.non_edges().collect();
            if here && !non.is_empty() {
                let (u, v) = non[pick.index(non.len())];
                prop_assert!(find_minor_model(&g.with_edge(u, v).unwrap(), &h).unwrap().is_some());
            }
            if !edges.is_empty() {
                let (u, v) = edges[pick.index(edges.len())];
                if find_minor_model(&g.contract(u, v).unwrap(), &h).unwrap().is_some() {
                    prop_assert!(here);
                }
                if find_minor_model(&g.without_edge(u, v).unwrap(), &h).unwrap().is_some() {
                    prop_assert!(here);
                }
            }
        }
    }

    #[test]
    fn minors_are_transitive(g in arb_graph(9), seed in any::<u64>()) {
        // Build H from G by random deletions/contractions, F from H likewise.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let shrink = |mut x: Graph, rng: &mut ChaCha8Rng| {
            for _ in 0..rng.gen_range(0..4) {
                let edges: Vec<_> = x.edges().collect();
                if edges.is_empty() || x.order() <= 2 {
                    break;
                }
                let (u, v) = edges[rng.gen_range(0..edges.len())];
                x = if rng.gen_bool(0.5) { x.contract(u, v).unwrap() } else { x.without_edge(u, v).unwrap() };
            }
            x
        };
        let h = shrink(g, &mut rng);
        let f = shrink(h, &mut rng);
        prop_assert!(find_minor_model(&g, &h).unwrap().is_some());
        prop_assert!(find_minor_model(&h, &f).unwrap().is_some());
        let m = find_minor_model(&g, &f).unwrap();
        prop_assert!(m.as_ref().is_some_and(|m| verify_minor_model(&g, &f, m)));
    }
}
