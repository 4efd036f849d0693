//! T-sum ledgers: for a base graph, a class of its cubic vertices and a
//! second summand (`K4` or `K3,3`), which graphs come out for each number
//! of contracted matching edges.
//!
//! Printed ledgers name vertices by figure labels that are not available
//! here, so everything is label-free. A row's vertex class such as `5(3,4)`
//! is read only as "some set of cubic vertices with at least three members",
//! and the binder searches for an assignment of rows to actual automorphism
//! orbits and of result names to isomorphism classes that is consistent
//! across the whole table. Several printed classes may share one actual
//! orbit as long as its size allows it.
//!
//! Named results are `W6`-free outcomes unless a cell says otherwise; a T2-sum with `K4` that
//! only reproduces the base is ignored unless the cell names the base. Two
//! readings are supported. In a `complete` table every listed cell names
//! exactly the `W6`-free outcomes. In a `representative` table each named
//! result must occur among them, but others may exist.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canon, canonical_key, CanonKey, CanonicalForm};
use crate::constructions::{complete, complete_bipartite, enumerate_t_sums};
use crate::error::{ConstructionError, MinorError};
use crate::graph::Graph;
use crate::minor::MinorModel;
use crate::predicate::w6_model;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Summand {
    K4,
    K33,
}

impl Summand {
    pub fn graph(self) -> Graph {
        match self {
            Summand::K4 => complete(4),
            Summand::K33 => complete_bipartite(3, 3),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Semantics {
    Complete,
    Representative,
}

/// One cell: the listed contraction counts and what they produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub contracted: Vec<u8>,
    /// Named results. Empty means every outcome has a `W6` minor.
    #[serde(default)]
    pub results: Vec<String>,
    /// The named results are not asserted `W6`-free, so they are matched
    /// against every outcome.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub any_outcome: bool,
}

impl Cell {
    pub fn is_w6(&self) -> bool {
        self.results.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub base: String,
    pub summand: Summand,
    /// Vertex class as printed, e.g. `5(3,4)`, or `any`.
    pub vertices: String,
    pub cells: Vec<Cell>,
}

impl Row {
    /// Number of vertices in the printed class; `any` counts as one.
    pub fn class_size(&self) -> usize {
        if self.vertices == "any" {
            return 1;
        }
        self.vertices.split(|c: char| !c.is_ascii_alphanumeric()).filter(|t| !t.is_empty()).count()
    }

    fn slot(&self) -> (String, String) {
        (self.base.clone(), self.vertices.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TSumTable {
    pub id: String,
    pub title: String,
    pub semantics: Semantics,
    pub rows: Vec<Row>,
}

impl TSumTable {
    /// Every result name, in first-appearance order.
    pub fn names(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for n in self.rows.iter().flat_map(|r| &r.cells).flat_map(|c| &c.results) {
            if !out.contains(n) {
                out.push(n.clone());
            }
        }
        out
    }
}

const BUILTIN: [&str; 10] = [
    include_str!("../data/tables/tsum-k4-k33.json"),
    include_str!("../data/tables/tsum-cube.json"),
    include_str!("../data/tables/tsum-cube1.json"),
    include_str!("../data/tables/tsum-h3.json"),
    include_str!("../data/tables/tsum-h3a.json"),
    include_str!("../data/tables/tsum-h3b.json"),
    include_str!("../data/tables/tsum-h1.json"),
    include_str!("../data/tables/tsum-h2.json"),
    include_str!("../data/tables/tsum-k33-10.json"),
    include_str!("../data/tables/tsum-k43.json"),
];

/// The bundled tables, in dependency order.
pub fn builtin_tables() -> Vec<TSumTable> {
    BUILTIN.iter().map(|s| serde_json::from_str(s).expect("bundled table parses")).collect()
}

pub fn builtin_table(id: &str) -> Option<TSumTable> {
    builtin_tables().into_iter().find(|t| t.id == id)
}

/// Classes of T-sums at one vertex, by contraction count.
pub type Outcomes = [Vec<CanonKey>; 4];

/// Memo of T-sum outcomes and `W6` verdicts, shared between tables.
pub struct Evaluator {
    budget: u64,
    w6: Mutex<HashMap<CanonKey, Option<MinorModel>>>,
    sums: Mutex<HashMap<(CanonKey, usize, Summand), Arc<Outcomes>>>,
}

impl Evaluator {
    pub fn new(budget: u64) -> Self {
        Evaluator { budget, w6: Mutex::default(), sums: Mutex::default() }
    }

    /// A `W6` model on the canonical representative of `key`.
    pub fn w6(&self, key: &CanonKey) -> Result<Option<MinorModel>, MinorError> {
        if let Some(m) = self.w6.lock().expect("memo").get(key) {
            return Ok(m.clone());
        }
        let m = w6_model(&key.graph(), self.budget)?;
        self.w6.lock().expect("memo").insert(*key, m.clone());
        Ok(m)
    }

    pub fn w6_free(&self, key: &CanonKey) -> Result<bool, MinorError> {
        Ok(self.w6(key)?.is_none())
    }

    /// Decides `W6` for many classes at once, in parallel.
    pub fn prefetch(&self, keys: &[CanonKey]) -> Result<(), MinorError> {
        let todo: Vec<CanonKey> = {
            let memo = self.w6.lock().expect("memo");
            keys.iter().filter(|k| !memo.contains_key(k)).copied().collect::<BTreeSet<_>>().into_iter().collect()
        };
        todo.par_iter().try_for_each(|k| self.w6(k).map(|_| ()))
    }

    /// T-sum classes of `base` at vertex `x` (an index of `base` itself).
    pub fn outcomes(&self, base: &Graph, x: usize, summand: Summand) -> Result<Arc<Outcomes>, ConstructionError> {
        let memo_key = (canonical_key(base), x, summand);
        if let Some(o) = self.sums.lock().expect("memo").get(&memo_key) {
            return Ok(o.clone());
        }
        let sums = enumerate_t_sums(base, x, &summand.graph(), 0)?;
        let out = Arc::new(std::array::from_fn(|i| sums.classes(i)));
        self.sums.lock().expect("memo").insert(memo_key, Arc::clone(&out));
        Ok(out)
    }
}

/// Cubic automorphism orbits of `g`, each a sorted vertex list.
pub fn cubic_orbits(g: &Graph) -> Vec<Vec<usize>> {
    let c = canon(g);
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in (0..g.order()).filter(|&v| g.degree(v) == 3) {
        match out.iter_mut().find(|o| c.orbit[o[0]] == c.orbit[v]) {
            Some(o) => o.push(v),
            None => out.push(vec![v]),
        }
    }
    out
}

/// Resolves names defined outside the tables (families, expressions).
pub type Resolver<'a> = &'a (dyn Fn(&str) -> Option<Graph> + Sync);

/// Names fixed before a table is read: earlier tables and the resolver.
pub struct Context<'a> {
    pub known: BTreeMap<String, CanonKey>,
    pub resolve: Resolver<'a>,
    pub eval: &'a Evaluator,
    resolved: Mutex<HashMap<String, Option<CanonKey>>>,
}

impl<'a> Context<'a> {
    pub fn new(resolve: Resolver<'a>, eval: &'a Evaluator) -> Self {
        Context { known: BTreeMap::new(), resolve, eval, resolved: Mutex::default() }
    }

    /// A name fixed outside the table being read.
    pub fn global(&self, name: &str) -> Option<CanonKey> {
        if let Some(k) = self.known.get(name) {
            return Some(*k);
        }
        if let Some(k) = self.resolved.lock().expect("memo").get(name) {
            return *k;
        }
        let k = (self.resolve)(name).map(|g| canonical_key(&g));
        self.resolved.lock().expect("memo").insert(name.to_string(), k);
        k
    }

    fn lookup(&self, a: &Assignment, name: &str) -> Option<CanonKey> {
        let global = name.split_once('#').map_or(name, |(g, _)| g);
        a.names.get(name).copied().or_else(|| self.global(global))
    }
}

/// One consistent reading of a table.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Assignment {
    /// Result name to class, for names local to the table.
    pub names: BTreeMap<String, CanonKey>,
    /// `(base, printed class)` to an index into `cubic_orbits(base)`.
    pub orbit_of: BTreeMap<(String, String), usize>,
    used: BTreeMap<(String, usize), usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RowFailure {
    pub row: usize,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct Binding {
    pub table: String,
    /// Groups of rows that share no table-local name, read independently.
    pub parts: Vec<Part>,
    /// Classes each name takes in some consistent reading.
    pub candidates: BTreeMap<String, BTreeSet<CanonKey>>,
    /// Rows no assignment could satisfy. They are skipped so the rest of the
    /// table is still read.
    pub failed_rows: Vec<RowFailure>,
    /// The search dropped assignments beyond the cap.
    pub truncated: bool,
}

/// Consistent readings of one group of rows, at most one per distinct
/// state that later rows could observe.
#[derive(Debug, Clone)]
pub struct Part {
    pub rows: Vec<usize>,
    pub assignments: Vec<Assignment>,
}

impl Binding {
    /// Number of consistent readings of the whole table, saturating.
    pub fn readings(&self) -> usize {
        self.parts.iter().fold(1usize, |acc, p| acc.saturating_mul(p.assignments.len().max(1)))
    }

    /// Classes a name may take.
    pub fn classes_of(&self, name: &str) -> BTreeSet<CanonKey> {
        self.candidates.get(name).cloned().unwrap_or_default()
    }

    /// Names that take a single class in every reading. Row-scoped names are
    /// left out.
    pub fn unique_names(&self) -> BTreeMap<String, CanonKey> {
        self.candidates
            .iter()
            .filter(|(n, c)| !n.contains('#') && c.len() == 1)
            .map(|(n, c)| (n.clone(), *c.first().expect("one class")))
            .collect()
    }
}

/// Names that spell out added edges depend on figure labels, so the same
/// spelling in two rows need not be the same graph. They are scoped to
/// their row; a resolver may still fix them.
fn scoped(ri: usize, name: &str) -> String {
    if name.contains('+') {
        format!("{name}#r{ri}")
    } else {
        name.to_string()
    }
}

fn cell_names(ri: usize, cell: &Cell) -> Vec<String> {
    cell.results.iter().map(|n| scoped(ri, n)).collect()
}

const MAX_ASSIGNMENTS: usize = 4096;

fn base_of(row: &Row, a: &Assignment, cx: &Context) -> Option<Graph> {
    cx.lookup(a, &row.base).map(|k| k.graph())
}

/// The outcomes a cell's names are matched against: normally the `W6`-free
/// ones, leaving out a T2-sum with `K4` that just reproduces the base unless
/// the cell names the base.
#[allow(clippy::too_many_arguments)]
fn pool(
    ri: usize,
    row: &Row,
    cell: &Cell,
    i: u8,
    base: &CanonKey,
    outcomes: &Outcomes,
    a: &Assignment,
    cx: &Context,
) -> Result<Vec<CanonKey>, MinorError> {
    let all = &outcomes[i as usize];
    if cell.any_outcome {
        return Ok(all.clone());
    }
    let names_base = cell_names(ri, cell).iter().any(|n| cx.lookup(a, n) == Some(*base));
    cx.eval.prefetch(all)?;
    let mut out = Vec::new();
    for k in all {
        let echo = row.summand == Summand::K4 && i == 2 && k == base && !names_base;
        if !echo && cx.eval.w6_free(k)? {
            out.push(*k);
        }
    }
    Ok(out)
}

/// All ways to bind `names` injectively into `classes`, extending `a`.
fn match_names(names: &[String], classes: &[CanonKey], exact: bool, a: &Assignment, cx: &Context) -> Vec<Assignment> {
    if exact && names.len() != classes.len() {
        return Vec::new();
    }
    fn go(
        i: usize,
        names: &[String],
        classes: &[CanonKey],
        taken: &mut [bool],
        a: &mut Assignment,
        cx: &Context,
        out: &mut Vec<Assignment>,
    ) {
        if i == names.len() {
            out.push(a.clone());
            return;
        }
        let want = cx.lookup(a, &names[i]);
        for (j, k) in classes.iter().enumerate() {
            if taken[j] || want.is_some_and(|w| w != *k) {
                continue;
            }
            taken[j] = true;
            if want.is_none() {
                a.names.insert(names[i].clone(), *k);
            }
            go(i + 1, names, classes, taken, a, cx, out);
            if want.is_none() {
                a.names.remove(&names[i]);
            }
            taken[j] = false;
        }
    }
    let mut out = Vec::new();
    let mut taken = vec![false; classes.len()];
    go(0, names, classes, &mut taken, &mut a.clone(), cx, &mut out);
    out
}

fn candidate_orbits(row: &Row, a: &Assignment, orbits: &[Vec<usize>]) -> Vec<usize> {
    if let Some(&o) = a.orbit_of.get(&row.slot()) {
        return vec![o];
    }
    let need = row.class_size();
    (0..orbits.len())
        .filter(|&o| {
            let used = a.used.get(&(row.base.clone(), o)).copied().unwrap_or(0);
            row.vertices == "any" || orbits[o].len() >= used + need
        })
        .collect()
}

/// Extensions of one assignment by one row.
fn extend_row(ri: usize, row: &Row, semantics: Semantics, a: &Assignment, cx: &Context) -> Result<Vec<Assignment>, String> {
    let base = base_of(row, a, cx).ok_or_else(|| format!("base `{}` is not bound", row.base))?;
    let base_key = canonical_key(&base);
    let orbits = cubic_orbits(&base);
    if orbits.is_empty() {
        return Err(format!("base `{}` has no cubic vertex", row.base));
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for o in candidate_orbits(row, a, &orbits) {
        let outcomes = cx.eval.outcomes(&base, orbits[o][0], row.summand).map_err(|e| e.to_string())?;
        let mut states = vec![a.clone()];
        for cell in row.cells.iter().filter(|c| !c.is_w6()) {
            for &i in &cell.contracted {
                if i > 3 {
                    return Err(format!("contraction count {i} is out of range"));
                }
                let mut next = Vec::new();
                for s in &states {
                    let p = pool(ri, row, cell, i, &base_key, &outcomes, s, cx).map_err(|e| e.to_string())?;
                    next.extend(match_names(&cell_names(ri, cell), &p, semantics == Semantics::Complete, s, cx));
                }
                states = next;
            }
        }
        for mut s in states {
            if row.vertices != "any" && !s.orbit_of.contains_key(&row.slot()) {
                s.orbit_of.insert(row.slot(), o);
                *s.used.entry((row.base.clone(), o)).or_default() += row.class_size();
            }
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Reads one table against the names already fixed in `cx`.
fn components(table: &TSumTable, cx: &Context) -> Vec<Vec<usize>> {
    let n = table.rows.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            p[x] = find(p, p[x]);
        }
        p[x]
    }
    let mut owner: HashMap<String, usize> = HashMap::new();
    for (ri, row) in table.rows.iter().enumerate() {
        let names = std::iter::once(row.base.clone()).chain(row.cells.iter().flat_map(|c| cell_names(ri, c)));
        for name in names {
            let raw = name.split_once('#').map_or(name.as_str(), |(g, _)| g);
            if cx.global(raw).is_some() && row.base != name {
                continue;
            }
            match owner.get(&name) {
                Some(&other) => {
                    let (a, b) = (find(&mut parent, ri), find(&mut parent, other));
                    parent[a] = b;
                }
                None => {
                    owner.insert(name, ri);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for ri in 0..n {
        let r = find(&mut parent, ri);
        groups.entry(r).or_default().push(ri);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Reads one table against the names already fixed in `cx`.
pub fn bind_table(table: &TSumTable, cx: &Context) -> Binding {
    let mut parts = Vec::new();
    let mut candidates: BTreeMap<String, BTreeSet<CanonKey>> = BTreeMap::new();
    let mut failed_rows = Vec::new();
    let mut truncated = false;
    for rows in components(table, cx) {
        let (assignments, c, f, t) = bind_rows(table, &rows, cx);
        for (n, ks) in c {
            candidates.entry(n).or_default().extend(ks);
        }
        failed_rows.extend(f);
        truncated |= t;
        parts.push(Part { rows, assignments });
    }
    failed_rows.sort_by_key(|f: &RowFailure| f.row);
    Binding { table: table.id.clone(), parts, candidates, failed_rows, truncated }
}

type Candidates = BTreeMap<String, BTreeSet<CanonKey>>;

fn bind_rows(table: &TSumTable, rows: &[usize], cx: &Context) -> (Vec<Assignment>, Candidates, Vec<RowFailure>, bool) {
    // Last row mentioning each name, as a base or a result.
    let mut last_ref: HashMap<String, usize> = HashMap::new();
    for &ri in rows {
        let row = &table.rows[ri];
        last_ref.insert(row.base.clone(), ri);
        for c in &row.cells {
            for n in cell_names(ri, c) {
                last_ref.insert(n, ri);
            }
        }
    }
    let live = |n: &str, ri: usize| last_ref.get(n).is_some_and(|&r| r > ri);
    let project = |a: &Assignment, ri: usize| Assignment {
        names: a.names.iter().filter(|(n, _)| live(n, ri)).map(|(n, k)| (n.clone(), *k)).collect(),
        orbit_of: a.orbit_of.iter().filter(|((b, _), _)| live(b, ri)).map(|(s, o)| (s.clone(), *o)).collect(),
        used: a.used.iter().filter(|((b, _), _)| live(b, ri)).map(|(s, u)| (s.clone(), *u)).collect(),
    };
    type Retired = BTreeMap<String, BTreeSet<CanonKey>>;
    let mut states: Vec<(Assignment, Retired)> = vec![(Assignment::default(), Retired::new())];
    let mut failed_rows = Vec::new();
    let mut truncated = false;
    for &ri in rows {
        let row = &table.rows[ri];
        // Readings that agree on everything later rows can see are merged,
        // keeping the union of what they bound to names already retired.
        let mut next: Vec<(Assignment, Retired)> = Vec::new();
        let mut index: HashMap<Assignment, usize> = HashMap::new();
        let mut reason = String::new();
        for (a, retired) in &states {
            match extend_row(ri, row, table.semantics, a, cx) {
                Ok(v) => {
                    for b in v {
                        let mut r = retired.clone();
                        for (n, k) in b.names.iter().filter(|(n, _)| !live(n, ri)) {
                            r.entry(n.clone()).or_default().insert(*k);
                        }
                        match index.get(&project(&b, ri)) {
                            Some(&j) => {
                                for (n, ks) in r {
                                    next[j].1.entry(n).or_default().extend(ks);
                                }
                            }
                            None => {
                                index.insert(project(&b, ri), next.len());
                                next.push((b, r));
                            }
                        }
                    }
                }
                Err(e) => reason = e,
            }
        }
        if next.is_empty() {
            if reason.is_empty() {
                reason = "no orbit and name assignment matches the listed results".into();
            }
            failed_rows.push(RowFailure { row: ri, reason });
            continue;
        }
        if next.len() > MAX_ASSIGNMENTS {
            next.truncate(MAX_ASSIGNMENTS);
            truncated = true;
        }
        states = next;
    }
    let mut candidates: BTreeMap<String, BTreeSet<CanonKey>> = BTreeMap::new();
    for (a, retired) in &states {
        for (n, k) in &a.names {
            candidates.entry(n.clone()).or_default().insert(*k);
        }
        for (n, ks) in retired {
            candidates.entry(n.clone()).or_default().extend(ks);
        }
    }
    let assignments = states.into_iter().map(|(a, _)| a).collect();
    (assignments, candidates, failed_rows, truncated)
}

/// Binds tables in order, passing uniquely bound names forward.
pub fn bind_all(tables: &[TSumTable], cx: &mut Context) -> Vec<Binding> {
    let mut out = Vec::new();
    for t in tables {
        let b = bind_table(t, cx);
        for (n, k) in b.unique_names() {
            cx.known.entry(n).or_insert(k);
        }
        out.push(b);
    }
    out
}

/// One outcome class as reported.
#[derive(Debug, Clone, Serialize)]
pub struct OutcomeReport {
    pub graph6: CanonicalForm,
    pub w6_free: bool,
    /// Branch sets of a `W6` model on the graph6 representative.
    pub w6_model: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellCheck {
    pub row: usize,
    pub contracted: u8,
    /// Expected names; empty for "every outcome has `W6`".
    pub expected: Vec<String>,
    pub outcomes: Vec<OutcomeReport>,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableCheck {
    pub table: String,
    pub semantics: Semantics,
    pub readings: usize,
    /// Base and printed class, with the size of the actual orbit used.
    pub orbits: Vec<(String, usize)>,
    pub cells: Vec<CellCheck>,
    pub failed_rows: Vec<RowFailure>,
    pub names: BTreeMap<String, CanonicalForm>,
    pub ok: bool,
}

fn report(k: &CanonKey, cx: &Context) -> Result<OutcomeReport, MinorError> {
    let m = cx.eval.w6(k)?;
    Ok(OutcomeReport {
        graph6: k.form(),
        w6_free: m.is_none(),
        w6_model: m.map(|m| m.branch_sets.iter().map(|&s| crate::bits::iter(s).collect()).collect()),
    })
}

fn check_under(table: &TSumTable, rows: &[usize], a: &Assignment, cx: &Context) -> Result<Vec<CellCheck>, ConstructionError> {
    let mut out = Vec::new();
    for &ri in rows {
        let row = &table.rows[ri];
        let Some(base) = base_of(row, a, cx) else { continue };
        let base_key = canonical_key(&base);
        let orbits = cubic_orbits(&base);
        let o = match (row.vertices.as_str(), a.orbit_of.get(&row.slot())) {
            ("any", _) => 0,
            (_, Some(&o)) => o,
            _ => continue,
        };
        if o >= orbits.len() {
            continue;
        }
        let outcomes = cx.eval.outcomes(&base, orbits[o][0], row.summand)?;
        for cell in &row.cells {
            for &i in &cell.contracted {
                let Some(got) = outcomes.get(i as usize) else { continue };
                cx.eval.prefetch(got)?;
                let reports: Vec<OutcomeReport> = got.iter().map(|k| report(k, cx)).collect::<Result<_, _>>()?;
                let (ok, detail) = if cell.is_w6() {
                    // Reproducing the base is not a new outcome.
                    let echo = |k: &CanonKey| row.summand == Summand::K4 && i == 2 && *k == base_key;
                    let bad = got.iter().zip(&reports).filter(|(k, r)| r.w6_free && !echo(k)).count();
                    (bad == 0, format!("{bad} of {} outcomes are new and W6-free", got.len()))
                } else {
                    let named: Vec<Option<CanonKey>> = cell_names(ri, cell).iter().map(|n| cx.lookup(a, n)).collect();
                    let named_set: BTreeSet<CanonKey> = named.iter().flatten().copied().collect();
                    let distinct = named.iter().all(Option::is_some) && named_set.len() == named.len();
                    let p: BTreeSet<CanonKey> =
                        pool(ri, row, cell, i, &base_key, &outcomes, a, cx)?.into_iter().collect();
                    let ok = distinct
                        && match table.semantics {
                            Semantics::Complete => named_set == p,
                            Semantics::Representative => named_set.is_subset(&p),
                        };
                    (ok, format!("{} names bound, {} matching outcomes", named_set.len(), p.len()))
                };
                out.push(CellCheck { row: ri, contracted: i, expected: cell.results.clone(), outcomes: reports, ok, detail });
            }
        }
    }
    Ok(out)
}

/// Checks a bound table. For each group of rows, reports the first reading
/// under which every cell holds, or failing that the first reading.
pub fn check_table(table: &TSumTable, binding: &Binding, cx: &Context) -> Result<TableCheck, ConstructionError> {
    let mut cells = Vec::new();
    let mut names = BTreeMap::new();
    let mut orbits = Vec::new();
    let empty = [Assignment::default()];
    for part in &binding.parts {
        let readings = if part.assignments.is_empty() { &empty[..] } else { &part.assignments[..] };
        let mut chosen: Option<(&Assignment, Vec<CellCheck>)> = None;
        for a in readings {
            let c = check_under(table, &part.rows, a, cx)?;
            let all_ok = c.iter().all(|c| c.ok);
            if chosen.is_none() || all_ok {
                chosen = Some((a, c));
            }
            if all_ok {
                break;
            }
        }
        let (a, c) = chosen.expect("at least one reading");
        cells.extend(c);
        names.extend(a.names.iter().map(|(n, k)| (n.clone(), k.form())));
        for ((base, printed), &o) in &a.orbit_of {
            if let Some(k) = cx.lookup(a, base) {
                orbits.push((format!("{base} {printed}"), cubic_orbits(&k.graph())[o].len()));
            }
        }
    }
    cells.sort_by_key(|c| (c.row, c.contracted));
    let ok = binding.failed_rows.is_empty() && cells.iter().all(|c| c.ok);
    Ok(TableCheck {
        table: table.id.clone(),
        semantics: table.semantics,
        readings: binding.readings(),
        orbits,
        cells,
        failed_rows: binding.failed_rows.clone(),
        names,
        ok,
    })
}
