//! Minor containment for small graphs.
//!
//! For a connected host `G` and any pattern `H` with `|H| <= |G|`, `H` is a
//! minor of `G` exactly when `V(G)` can be split into `|H|` connected parts
//! whose quotient graph contains `H` as a spanning subgraph: vertices outside
//! every branch set of a model can always be absorbed into a neighbouring
//! branch set. The search therefore only contracts edges, one at a time,
//! until `|H|` vertices remain, and then looks for `H` as a spanning
//! subgraph of the quotient. Intermediate quotients are deduplicated up to
//! isomorphism, and a quotient is abandoned as soon as it cannot keep enough
//! edges. The final embedding step orders pattern vertices by degree and
//! breaks pattern symmetry with a stabilizer chain.
//!
//! Disconnected hosts are handled component by component.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::bits::{self, VertexSet};
use crate::canon::{self, CanonKey};
use crate::error::MinorError;
use crate::graph::{Graph, MAX_ORDER};

/// Default limit on search nodes per query.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Branch sets of a minor model, indexed by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorModel {
    /// Pattern label to sorted host labels.
    pub fn to_label_map(&self, host: &Graph, pattern: &Graph) -> Vec<(u16, Vec<u16>)> {
        self.branch_sets
            .iter()
            .enumerate()
            .map(|(p, &set)| {
                let mut hosts: Vec<u16> = bits::iter(set).map(|v| host.label(v)).collect();
                hosts.sort_unstable();
                (pattern.label(p), hosts)
            })
            .collect()
    }
}

/// A pattern with its embedding order and symmetry-breaking constraints
/// computed once, for reuse across many hosts.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    edges: usize,
    degrees_desc: Vec<usize>,
    /// Pattern vertices in the order they are embedded.
    order: Vec<usize>,
    /// For each position, earlier positions adjacent to it.
    back: Vec<VertexSet>,
    /// For each position, earlier positions whose image must be smaller.
    below: Vec<VertexSet>,
    degree: Vec<usize>,
}

impl Pattern {
    pub fn new(h: &Graph) -> Self {
        let n = h.order();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed: VertexSet = 0;
        while order.len() < n {
            // Prefer vertices tied to many placed ones, then high degree.
            let next = (0..n)
                .filter(|&v| placed & bits::bit(v) == 0)
                .max_by_key(|&v| {
                    ((h.neighbors(v) & placed).count_ones(), h.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex exists");
            order.push(next);
            placed |= bits::bit(next);
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back: Vec<VertexSet> = order
            .iter()
            .enumerate()
            .map(|(i, &v)| bits::iter(h.neighbors(v)).filter(|&u| pos[u] < i).fold(0, |m, u| m | bits::bit(pos[u])))
            .collect();
        // Lex-leader constraints: image of order[i] is the smallest image in
        // its orbit under the stabilizer of order[..i].
        let mut below = vec![0; n];
        for i in 0..n {
            let orbit = canon::stabilizer_orbits(h, &order[..i]);
            let v = order[i];
            for u in 0..n {
                if u != v && orbit[u] == orbit[v] {
                    below[pos[u]] |= bits::bit(i);
                }
            }
        }
        Pattern {
            graph: *h,
            edges: h.size(),
            degrees_desc: h.degree_sequence(),
            degree: order.iter().map(|&v| h.degree(v)).collect(),
            order,
            back,
            below,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    fn order_len(&self) -> usize {
        self.order.len()
    }
}

/// Finds a model of `pattern` in `host`, or `None` if there is none.
pub fn find_minor_model(host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>, MinorError> {
    find_minor_model_with(host, &Pattern::new(pattern), DEFAULT_BUDGET)
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> Result<bool, MinorError> {
    Ok(find_minor_model(host, pattern)?.is_some())
}

/// Runs the search with `budget`, and once more with ten times the budget if
/// the first attempt runs out. Only the second failure is reported.
pub fn find_minor_model_escalating(
    host: &Graph,
    pattern: &Pattern,
    budget: u64,
) -> Result<Option<MinorModel>, MinorError> {
    match find_minor_model_with(host, pattern, budget) {
        Err(MinorError::SearchBudgetExceeded { .. }) => {
            find_minor_model_with(host, pattern, budget.saturating_mul(10))
        }
        other => other,
    }
}

/// As [`find_minor_model`] with a prepared pattern and explicit node budget.
pub fn find_minor_model_with(
    host: &Graph,
    pattern: &Pattern,
    budget: u64,
) -> Result<Option<MinorModel>, MinorError> {
    let h = pattern.order_len();
    if h > host.order() || pattern.edges > host.size() {
        return Ok(None);
    }
    let comps = host.components();
    if comps.len() == 1 {
        let mut s = Search::new(pattern, budget);
        return s.run(host);
    }
    split_by_components(host, pattern, &comps, budget)
}

fn split_by_components(
    host: &Graph,
    pattern: &Pattern,
    comps: &[VertexSet],
    budget: u64,
) -> Result<Option<MinorModel>, MinorError> {
    let pg = &pattern.graph;
    let pcomps = pg.components();
    let hosts: Vec<Graph> = comps.iter().map(|&c| host.induced(c).expect("nonempty component")).collect();
    let r = comps.len();
    let s = pcomps.len();
    let mut memo: HashMap<(usize, u32), Option<MinorModel>> = HashMap::new();
    let mut assign = vec![0usize; s];
    loop {
        let mut groups = vec![0u32; r];
        for (pi, &hi) in assign.iter().enumerate() {
            groups[hi] |= 1 << pi;
        }
        let mut parts = Vec::new();
        let mut ok = true;
        for (hi, &grp) in groups.iter().enumerate() {
            if grp == 0 {
                continue;
            }
            let model = match memo.get(&(hi, grp)) {
                Some(m) => m.clone(),
                None => {
                    let pset = bits::iter(grp).fold(0, |m, i| m | pcomps[i]);
                    let sub = Pattern::new(&pg.induced(pset).expect("nonempty"));
                    let m = find_minor_model_with(&hosts[hi], &sub, budget)?;
                    let m = m.map(|m| MinorModel {
                        branch_sets: m.branch_sets.iter().map(|&b| bits::expand(b, comps[hi])).collect(),
                    });
                    memo.insert((hi, grp), m.clone());
                    m
                }
            };
            match model {
                Some(m) => {
                    let pset = bits::iter(grp).fold(0, |acc, i| acc | pcomps[i]);
                    parts.push((pset, m));
                }
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let mut branch_sets = vec![0; pg.order()];
            for (pset, m) in parts {
                for (i, p) in bits::iter(pset).enumerate() {
                    branch_sets[p] = m.branch_sets[i];
                }
            }
            return Ok(Some(MinorModel { branch_sets }));
        }
        // Next assignment in mixed radix.
        let mut i = 0;
        loop {
            if i == s {
                return Ok(None);
            }
            assign[i] += 1;
            if assign[i] < r {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// Compact visited-set key; graphs up to 16 vertices pack into 16 rows of 16 bits.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum StateKey {
    Small(u8, [u16; 16]),
    Large(CanonKey),
}

impl StateKey {
    fn of(n: usize, rows: &[u32]) -> Self {
        let key = canon::canonical_key(&Graph::from_raw(n, rows));
        if n <= 16 {
            let g = key.graph();
            let mut packed = [0u16; 16];
            for (p, &r) in packed.iter_mut().zip(g.rows()) {
                *p = r as u16;
            }
            StateKey::Small(n as u8, packed)
        } else {
            StateKey::Large(key)
        }
    }
}

struct Search<'p> {
    pattern: &'p Pattern,
    budget: u64,
    nodes: u64,
    visited: std::collections::HashSet<StateKey>,
}

impl<'p> Search<'p> {
    fn new(pattern: &'p Pattern, budget: u64) -> Self {
        Search { pattern, budget, nodes: 0, visited: Default::default() }
    }

    fn tick(&mut self) -> Result<(), MinorError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(MinorError::SearchBudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn run(&mut self, host: &Graph) -> Result<Option<MinorModel>, MinorError> {
        let n = host.order();
        let mut rows = [0u32; MAX_ORDER];
        rows[..n].copy_from_slice(host.rows());
        let mut sets = [0u32; MAX_ORDER];
        for (v, s) in sets.iter_mut().enumerate().take(n) {
            *s = bits::bit(v);
        }
        // A plain subgraph copy needs no contraction at all.
        if let Some(f) = self.embed(n, &rows)? {
            return Ok(Some(self.model(&f, &sets)));
        }
        self.descend(n, &rows, &sets)
    }

    fn model(&self, images: &[usize], sets: &[u32]) -> MinorModel {
        let mut branch_sets = vec![0; self.pattern.order_len()];
        for (i, &img) in images.iter().enumerate() {
            branch_sets[self.pattern.order[i]] = sets[img];
        }
        MinorModel { branch_sets }
    }

    fn descend(&mut self, n: usize, rows: &[u32; MAX_ORDER], sets: &[u32; MAX_ORDER]) -> Result<Option<MinorModel>, MinorError> {
        self.tick()?;
        let h = self.pattern.order_len();
        let m: usize = rows[..n].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if m < self.pattern.edges + (n - h) {
            return Ok(None);
        }
        if n == h {
            return Ok(self.embed(n, rows)?.map(|f| self.model(&f, sets)));
        }
        if n > h + 1 && !self.visited.insert(StateKey::of(n, rows)) {
            return Ok(None);
        }
        let mut child_rows = [0u32; MAX_ORDER];
        let mut child_sets = [0u32; MAX_ORDER];
        for u in 0..n {
            for v in bits::iter(rows[u] & !bits::full(u + 1)) {
                contract_raw(n, rows, sets, u, v, &mut child_rows, &mut child_sets);
                if let Some(model) = self.descend(n - 1, &child_rows, &child_sets)? {
                    return Ok(Some(model));
                }
            }
        }
        Ok(None)
    }

    /// Injective embedding of the pattern into the graph given by `rows`.
    /// Returns the images in pattern embedding order.
    fn embed(&mut self, n: usize, rows: &[u32; MAX_ORDER]) -> Result<Option<Vec<usize>>, MinorError> {
        let p = self.pattern;
        let h = p.order_len();
        if h > n {
            return Ok(None);
        }
        let mut degs: Vec<usize> = rows[..n].iter().map(|r| r.count_ones() as usize).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        if p.degrees_desc.iter().zip(&degs).any(|(need, have)| need > have) {
            return Ok(None);
        }
        let mut images = vec![0usize; h];
        let found = self.embed_at(0, n, rows, 0, &mut images)?;
        Ok(found.then_some(images))
    }

    fn embed_at(
        &mut self,
        i: usize,
        n: usize,
        rows: &[u32; MAX_ORDER],
        used: VertexSet,
        images: &mut [usize],
    ) -> Result<bool, MinorError> {
        let p = self.pattern;
        if i == p.order_len() {
            return Ok(true);
        }
        self.tick()?;
        let mut cand = bits::full(n) & !used;
        for j in bits::iter(p.back[i]) {
            cand &= rows[images[j]];
        }
        let floor = bits::iter(p.below[i]).map(|j| images[j]).max();
        if let Some(f) = floor {
            cand &= !bits::full(f + 1);
        }
        let need = p.degree[i] as u32;
        for c in bits::iter(cand) {
            if rows[c].count_ones() < need {
                continue;
            }
            images[i] = c;
            if self.embed_at(i + 1, n, rows, used | bits::bit(c), images)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Contracts `u`-`v` (`u < v`) on raw rows: `v` merges into `u`, later indices shift down.
fn contract_raw(
    n: usize,
    rows: &[u32; MAX_ORDER],
    sets: &[u32; MAX_ORDER],
    u: usize,
    v: usize,
    out_rows: &mut [u32; MAX_ORDER],
    out_sets: &mut [u32; MAX_ORDER],
) {
    let low = bits::full(v);
    let squeeze = |r: u32| (r & low) | ((r >> 1) & !low);
    let merged = (rows[u] | rows[v]) & !bits::bit(u) & !bits::bit(v);
    let mut k = 0;
    for w in 0..n {
        if w == v {
            continue;
        }
        let mut r = if w == u { merged } else { rows[w] };
        if w != u && r & bits::bit(v) != 0 {
            r = (r & !bits::bit(v)) | bits::bit(u);
        }
        out_rows[k] = squeeze(r & !bits::bit(v));
        out_sets[k] = if w == u { sets[u] | sets[v] } else { sets[w] };
        k += 1;
    }
    debug_assert_eq!(k, n - 1);
}

/// Planarity by excluded minors: no `K5` and no `K3,3`.
pub fn is_planar(g: &Graph) -> bool {
    let (n, m) = (g.order(), g.size());
    if n <= 4 || m <= 8 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let blocks = [kuratowski_k5(), kuratowski_k33()];
    !blocks.iter().any(|p| {
        find_minor_model_with(g, p, u64::MAX)
            .expect("unbounded search cannot exceed its budget")
            .is_some()
    })
}

fn kuratowski_k5() -> &'static Pattern {
    static K5: std::sync::OnceLock<Pattern> = std::sync::OnceLock::new();
    K5.get_or_init(|| {
        let mut e = Vec::new();
        for u in 1..=5 {
            for v in u + 1..=5 {
                e.push((u, v));
            }
        }
        Pattern::new(&Graph::build(5, e).expect("K5"))
    })
}

fn kuratowski_k33() -> &'static Pattern {
    static K33: std::sync::OnceLock<Pattern> = std::sync::OnceLock::new();
    K33.get_or_init(|| {
        let e = (1..=3).flat_map(|a| (4..=6).map(move |b| (a, b)));
        Pattern::new(&Graph::build(6, e).expect("K33"))
    })
}

/// A shared memo of minor verdicts keyed by canonical forms of host and
/// pattern. Bounded; when full the least recently used half is dropped.
pub struct MinorCache {
    capacity: usize,
    inner: Mutex<CacheInner>,
}

#[derive(Default)]
struct CacheInner {
    clock: u64,
    map: HashMap<(CanonKey, CanonKey), (bool, u64)>,
    hits: u64,
    misses: u64,
}

impl MinorCache {
    pub fn new(capacity: usize) -> Self {
        MinorCache { capacity: capacity.max(2), inner: Mutex::new(CacheInner::default()) }
    }

    pub fn has_minor(&self, host: &Graph, pattern: &Pattern, budget: u64) -> Result<bool, MinorError> {
        let key = (canon::canonical_key(host), canon::canonical_key(pattern.graph()));
        {
            let mut inner = self.inner.lock().expect("cache lock");
            inner.clock += 1;
            let now = inner.clock;
            if let Some(entry) = inner.map.get_mut(&key) {
                entry.1 = now;
                let hit = entry.0;
                inner.hits += 1;
                return Ok(hit);
            }
            inner.misses += 1;
        }
        let verdict = find_minor_model_with(host, pattern, budget)?.is_some();
        let mut inner = self.inner.lock().expect("cache lock");
        if inner.map.len() >= self.capacity {
            let mut stamps: Vec<u64> = inner.map.values().map(|e| e.1).collect();
            let mid = stamps.len() / 2;
            let (_, cut, _) = stamps.select_nth_unstable(mid);
            let cut = *cut;
            inner.map.retain(|_, e| e.1 > cut);
        }
        let now = inner.clock;
        inner.map.insert(key, (verdict, now));
        Ok(verdict)
    }

    /// `(hits, misses)` so far.
    pub fn stats(&self) -> (u64, u64) {
        let inner = self.inner.lock().expect("cache lock");
        (inner.hits, inner.misses)
    }

    pub fn len(&self) -> usize {
        self.inner.lock().expect("cache lock").map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
