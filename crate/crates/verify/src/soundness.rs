//! Cross-checks of the minor engine, the canonical labeling and the
//! certificate checker against slow, independent oracles.

use std::collections::{BTreeSet, HashSet};

use minorkit::bits;
use minorkit::canon::canonical_key;
use minorkit::constructions::{complete, complete_bipartite, family, wheel, Family};
use minorkit::generate::enumerate_all_graphs;
use minorkit::minor::find_minor_model_escalating;
use minorkit::{verify_minor_model, CanonKey, Graph, MinorModel, Pattern, Predicate};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Ctx, SuiteResult, VerifyError};

const SEED: u64 = 0x5eed_6b17;
/// Graph classes on 1..=7 vertices.
const CLASS_COUNTS: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
pub const CORRUPTIONS: usize = 1000;

/// Patterns of at most six vertices checked against every small host.
pub fn small_patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K4", complete(4)),
        ("W4", wheel(4)),
        ("K23", complete_bipartite(2, 3)),
        ("K5", complete(5)),
        ("W5", wheel(5)),
        ("K33", complete_bipartite(3, 3)),
        ("Prism", family(Family::Prism)),
    ]
}

/// Every minor of `g`, by class: closure under deleting an edge,
/// contracting an edge and deleting a vertex.
pub fn brute_minors(g: &Graph) -> HashSet<CanonKey> {
    let mut seen = HashSet::new();
    let mut stack = vec![*g];
    seen.insert(canonical_key(g));
    while let Some(h) = stack.pop() {
        let mut next = Vec::new();
        for (u, v) in h.edges() {
            next.push(h.without_edge(u, v).expect("edge"));
            next.push(h.contract(u, v).expect("edge"));
        }
        if h.order() > 1 {
            next.extend((0..h.order()).map(|v| h.without_vertex(v).expect("vertex")));
        }
        for x in next {
            if seen.insert(canonical_key(&x)) {
                stack.push(x);
            }
        }
    }
    seen
}

/// Smallest upper-triangle adjacency word over all vertex orders.
pub fn brute_form(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut w = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                w = w << 1 | g.has_edge(perm[i], perm[j]) as u64;
            }
        }
        best = best.min(w);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Model validity checked directly from the definition.
pub fn model_is_valid(host: &Graph, pattern: &Graph, sets: &[u32]) -> bool {
    if sets.len() != pattern.order() {
        return false;
    }
    let mut used = 0u32;
    for &s in sets {
        if s == 0 || s & used != 0 || s & !host.vertex_set() != 0 {
            return false;
        }
        used |= s;
        let start = s.trailing_zeros() as usize;
        let mut reach = 1u32 << start;
        let mut frontier = reach;
        while frontier != 0 {
            let mut grow = 0;
            for v in bits::iter(frontier) {
                grow |= host.neighbors(v) & s;
            }
            frontier = grow & !reach;
            reach |= grow;
        }
        if reach != s {
            return false;
        }
    }
    pattern.edges().all(|(a, b)| bits::iter(sets[a]).any(|v| host.neighbors(v) & sets[b] != 0))
}

fn corrupt(rng: &mut ChaCha8Rng, host: &Graph, sets: &[u32]) -> Vec<u32> {
    let mut s = sets.to_vec();
    let n = host.order();
    let i = rng.gen_range(0..s.len());
    match rng.gen_range(0..5) {
        0 => {
            // Move a host vertex into set i.
            let v = rng.gen_range(0..n);
            for x in s.iter_mut() {
                *x &= !(1 << v);
            }
            s[i] |= 1 << v;
        }
        1 => {
            let members: Vec<usize> = bits::iter(s[i]).collect();
            s[i] &= !(1 << members[rng.gen_range(0..members.len())]);
        }
        2 => {
            let j = rng.gen_range(0..s.len());
            s.swap(i, j);
            let v = rng.gen_range(0..n);
            s[i] ^= 1 << v;
        }
        3 => s[i] = 0,
        _ => s[i] |= 1 << rng.gen_range(0..n),
    }
    s
}

pub(crate) fn engine(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let mut r = SuiteResult::new(
        "E1",
        "engine soundness cross-checks",
        "Minor search agrees with exhaustive minor closure on small hosts, canonical labeling agrees with a permutation-minimum form, and the certificate checker accepts every search result and rejects corrupted models",
    );
    let budget = cx.cfg.budget;

    // Minor search against brute-force minor closure.
    let patterns: Vec<(&str, Graph, Pattern, CanonKey)> =
        small_patterns().into_iter().map(|(n, g)| (n, g, Pattern::new(&g), canonical_key(&g))).collect();
    let mut hosts: Vec<Graph> = Vec::new();
    for n in 1..=6 {
        hosts.extend(enumerate_all_graphs(n, &Predicate::all())?.graphs());
    }
    let mut pairs = 0;
    let mut disagree = Vec::new();
    let mut models: Vec<(Graph, Graph, MinorModel)> = Vec::new();
    for h in &hosts {
        let minors = brute_minors(h);
        for (name, g, p, k) in &patterns {
            pairs += 1;
            let found = find_minor_model_escalating(h, p, budget)?;
            if found.is_some() != minors.contains(k) {
                disagree.push(format!("{name} in {}", minorkit::format::to_graph6(h)));
            }
            if let Some(m) = found {
                models.push((*h, *g, m));
            }
        }
    }
    r.note(format!("{pairs} host/pattern pairs over {} hosts of order at most 6", hosts.len()));
    r.check("minor search disagrees with minor closure", Vec::<String>::new(), disagree);

    // Canonical labeling against permutation-minimum forms.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut counts = Vec::new();
    let mut merged = 0;
    let mut unstable = 0;
    for n in 1..=7 {
        let classes = enumerate_all_graphs(n, &Predicate::all())?;
        counts.push(classes.len());
        let forms: BTreeSet<u64> = classes.graphs().map(|g| brute_form(&g)).collect();
        merged += classes.len() - forms.len();
        for g in classes.graphs() {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permute(&perm)?;
            if canonical_key(&h) != canonical_key(&g) || brute_form(&h) != brute_form(&g) {
                unstable += 1;
            }
        }
    }
    r.check("classes on 1 to 7 vertices", CLASS_COUNTS, &counts);
    r.check("classes sharing a permutation-minimum form", 0, merged);
    r.check("relabelings changing the canonical form", 0, unstable);

    // Certificates from the search, for W6 as well as the small patterns.
    let w6 = minorkit::predicate::w6();
    for g in [family(Family::Petersen), minorkit::constructions::line_graph(&complete_bipartite(3, 3))?, wheel(7)] {
        if let Some(m) = find_minor_model_escalating(&g, w6, budget)? {
            models.push((g, *w6.graph(), m));
        }
    }
    let rejected: Vec<String> = models
        .iter()
        .filter(|(h, p, m)| !verify_minor_model(h, p, m))
        .map(|(h, _, _)| minorkit::format::to_graph6(h))
        .collect();
    r.note(format!("{} models produced by the search", models.len()));
    r.check("search-produced models rejected by the checker", Vec::<String>::new(), rejected);

    let usable: Vec<&(Graph, Graph, MinorModel)> = models.iter().filter(|(h, _, _)| h.order() >= 2).collect();
    let (mut invalid, mut invalid_accepted, mut valid_disagree, mut tries) = (0usize, 0usize, 0usize, 0usize);
    while invalid < CORRUPTIONS && tries < 100 * CORRUPTIONS {
        tries += 1;
        let (h, p, m) = usable[rng.gen_range(0..usable.len())];
        let sets = corrupt(&mut rng, h, &m.branch_sets);
        let verdict = verify_minor_model(h, p, &MinorModel { branch_sets: sets.clone() });
        if model_is_valid(h, p, &sets) {
            valid_disagree += usize::from(!verdict);
        } else {
            invalid += 1;
            invalid_accepted += usize::from(verdict);
        }
    }
    r.check("corrupted invalid models", CORRUPTIONS, invalid);
    r.check("corrupted invalid models accepted", 0, invalid_accepted);
    r.check("corrupted but still valid models rejected", 0, valid_disagree);
    Ok(r)
}
