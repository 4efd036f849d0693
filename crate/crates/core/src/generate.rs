//! Isomorph-free generation.
//!
//! `closure_generate` grows a set of seeds by single edge additions and
//! vertex splits, keeping one representative per isomorphism class and
//! discarding anything that fails the keep-predicate. Every step adds exactly
//! one edge, so the frontier is processed level by level in edge count and a
//! class is expanded at most once.
//!
//! Completeness depends on the caller: with a minor-closed keep-predicate the
//! closure of `W3` under both rules reaches every 3-connected graph that is
//! not a wheel (wheels are seeded directly), and add-edge alone from a fixed
//! graph reaches every edge-superset on the same vertex set.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonKey, CanonicalForm};
use crate::constructions::{enumerate_edge_additions, enumerate_splits, wheel};
use crate::error::{GenerateError, GraphError};
use crate::graph::{Graph, MAX_ORDER};
use crate::minor::DEFAULT_BUDGET;
use crate::predicate::Predicate;

/// Largest order accepted by `enumerate_all_graphs`.
pub const ENUM_MAX_ORDER: usize = 7;
/// Largest order accepted by `generate_3connected`.
pub const THREE_CONNECTED_MAX_ORDER: usize = 12;
/// Default cap on distinct classes seen by one closure task.
pub const DEFAULT_MAX_CLASSES: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    AddEdge,
    SplitVertex,
}

impl std::str::FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "add-edge" => Ok(Rule::AddEdge),
            "split" | "split-vertex" => Ok(Rule::SplitVertex),
            _ => Err(format!("unknown rule `{s}` (expected add-edge or split-vertex)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClosureTask {
    pub seeds: Vec<Graph>,
    pub rules: Vec<Rule>,
    pub max_order: usize,
    pub max_edges: usize,
    pub keep: Predicate,
    /// Node budget per minor search inside the keep-predicate (escalated on
    /// exhaustion).
    pub budget: u64,
    /// Abort with `BoundsExceeded` once this many distinct classes are seen.
    pub max_classes: usize,
}

impl ClosureTask {
    pub fn new(seeds: Vec<Graph>, rules: &[Rule], max_order: usize, max_edges: usize, keep: Predicate) -> Self {
        ClosureTask {
            seeds,
            rules: rules.to_vec(),
            max_order,
            max_edges,
            keep,
            budget: DEFAULT_BUDGET,
            max_classes: DEFAULT_MAX_CLASSES,
        }
    }

    fn allows(&self, rule: Rule) -> bool {
        self.rules.contains(&rule)
    }
}

/// Result of a closure: one canonical representative per class, sorted by
/// canonical key.
#[derive(Debug, Clone)]
pub struct Closure {
    keys: Vec<CanonKey>,
    /// Classes examined, including those rejected by the keep-predicate.
    pub visited: usize,
}

impl Closure {
    fn from_keys(mut keys: Vec<CanonKey>, visited: usize) -> Self {
        keys.sort_unstable();
        Closure { keys, visited }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[CanonKey] {
        &self.keys
    }

    pub fn contains(&self, key: &CanonKey) -> bool {
        self.keys.binary_search(key).is_ok()
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.keys.iter().map(CanonKey::graph)
    }

    pub fn forms(&self) -> Vec<CanonicalForm> {
        self.keys.iter().map(CanonKey::form).collect()
    }

    /// Class counts per `(order, edges)`.
    pub fn profile(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for g in self.graphs() {
            *out.entry((g.order(), g.size())).or_default() += 1;
        }
        out
    }

    /// Class counts per order.
    pub fn order_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for k in &self.keys {
            *out.entry(k.order()).or_default() += 1;
        }
        out
    }

    /// Keeps only the classes satisfying `pred`.
    pub fn filter(&self, pred: &Predicate, budget: u64) -> Result<Closure, GenerateError> {
        let kept: Vec<Option<CanonKey>> = self
            .keys
            .par_iter()
            .map(|k| Ok(pred.eval(&k.graph(), budget)?.then_some(*k)))
            .collect::<Result<_, GenerateError>>()?;
        Ok(Closure::from_keys(kept.into_iter().flatten().collect(), self.visited))
    }
}

fn children(g: &Graph, task: &ClosureTask) -> Vec<Graph> {
    let mut out = Vec::new();
    if g.size() >= task.max_edges {
        return out;
    }
    if task.allows(Rule::AddEdge) {
        out.extend(enumerate_edge_additions(g).into_iter().map(|(_, h)| h));
    }
    if task.allows(Rule::SplitVertex) && g.order() < task.max_order {
        out.extend(enumerate_splits(g).into_iter().map(|(_, h)| h));
    }
    out
}

/// Closure of the seeds under the task's rules, filtered by the
/// keep-predicate at every step.
pub fn closure_generate(task: &ClosureTask) -> Result<Closure, GenerateError> {
    if task.max_order > MAX_ORDER {
        return Err(GenerateError::BoundsExceeded(format!(
            "max order {} is above the {MAX_ORDER}-vertex cap",
            task.max_order
        )));
    }
    let mut visited: HashSet<CanonKey> = HashSet::new();
    let mut kept: Vec<CanonKey> = Vec::new();
    let mut pending: Vec<CanonKey> = task
        .seeds
        .iter()
        .filter(|g| g.order() <= task.max_order && g.size() <= task.max_edges)
        .map(canonical_key)
        .collect();
    pending.sort_unstable();
    pending.dedup();

    while !pending.is_empty() {
        // Lowest edge count first; everything else waits.
        let level = pending.iter().map(|k| k.graph().size()).min().expect("nonempty");
        let (now, later): (Vec<CanonKey>, Vec<CanonKey>) =
            pending.into_iter().partition(|k| k.graph().size() == level);
        pending = later;

        let fresh: Vec<CanonKey> = now.into_iter().filter(|k| visited.insert(*k)).collect();
        if visited.len() > task.max_classes {
            let g = fresh.last().map(|k| k.form().to_string()).unwrap_or_default();
            return Err(GenerateError::BoundsExceeded(format!(
                "more than {} classes visited (last: {g})",
                task.max_classes
            )));
        }
        let verdicts: Vec<bool> = fresh
            .par_iter()
            .map(|k| task.keep.eval(&k.graph(), task.budget))
            .collect::<Result<_, _>>()?;
        let survivors: Vec<CanonKey> =
            fresh.into_iter().zip(verdicts).filter(|(_, ok)| *ok).map(|(k, _)| k).collect();

        let mut next: Vec<CanonKey> = survivors
            .par_iter()
            .flat_map_iter(|k| children(&k.graph(), task).into_iter().map(|h| canonical_key(&h)))
            .collect();
        next.retain(|k| !visited.contains(k));
        pending.extend(next);
        pending.sort_unstable();
        pending.dedup();
        kept.extend(survivors);
    }
    Ok(Closure::from_keys(kept, visited.len()))
}

/// Every graph on exactly `n` vertices satisfying `keep`, one per class.
pub fn enumerate_all_graphs(n: usize, keep: &Predicate) -> Result<Closure, GenerateError> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(GraphError::OutOfRange(format!("order {n} not in 1..={ENUM_MAX_ORDER}")).into());
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let classes: HashSet<CanonKey> = (0..1u64 << pairs.len())
        .into_par_iter()
        .fold(HashSet::new, |mut set, mask| {
            let mut rows = [0u32; MAX_ORDER];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
            }
            set.insert(canonical_key(&Graph::from_adjacency(&rows[..n]).expect("symmetric")));
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let visited = classes.len();
    let all = Closure::from_keys(classes.into_iter().collect(), visited);
    all.filter(keep, DEFAULT_BUDGET)
}

/// All 3-connected graphs with at most `max_n` vertices and `max_m` edges
/// satisfying `keep`, grown from wheels.
///
/// `keep` must be minor-closed on 3-connected graphs (see
/// [`Predicate::is_minor_closed`]); otherwise pruning would lose graphs whose
/// ancestors fail it. Use [`Closure::filter`] for the other predicates.
pub fn generate_3connected(max_n: usize, max_m: usize, keep: &Predicate) -> Result<Closure, GenerateError> {
    if max_n > THREE_CONNECTED_MAX_ORDER {
        return Err(GenerateError::BoundsExceeded(format!(
            "order {max_n} is above {THREE_CONNECTED_MAX_ORDER}"
        )));
    }
    if !keep.is_minor_closed() {
        return Err(GenerateError::BoundsExceeded(format!(
            "`{keep}` is not minor-closed and cannot prune the wheel closure"
        )));
    }
    let seeds: Vec<Graph> = (3..max_n).map(wheel).collect();
    let mut lits = keep.literals().to_vec();
    lits.extend("3-connected".parse::<Predicate>()?.literals());
    let task = ClosureTask::new(
        seeds,
        &[Rule::AddEdge, Rule::SplitVertex],
        max_n,
        max_m,
        Predicate::of(&lits),
    );
    closure_generate(&task)
}

/// W6-free edge-supersets of `g` on the same vertex set, and among them the
/// ones maximal under edge addition.
pub struct Extensions {
    pub all: Closure,
    pub maximal: Vec<CanonKey>,
}

/// Every class of W6-free edge-superset of `g`, with the maximal ones marked.
///
/// W6-freeness survives edge deletion, so every W6-free superset is reached
/// through W6-free intermediates and the add-edge closure is complete. A
/// member is maximal iff none of its one-edge extensions is in the closure.
pub fn w6_free_extensions(g: &Graph, budget: u64) -> Result<Extensions, GenerateError> {
    let mut task = ClosureTask::new(
        vec![*g],
        &[Rule::AddEdge],
        g.order(),
        usize::MAX,
        Predicate::fixed("w6-free"),
    );
    task.budget = budget;
    let all = closure_generate(&task)?;
    let maximal = all
        .keys()
        .par_iter()
        .filter(|k| {
            let h = k.graph();
            let mut plus = h.non_edges().map(|(u, v)| h.with_edge(u, v).expect("nonedge"));
            plus.all(|x| !all.contains(&canonical_key(&x)))
        })
        .copied()
        .collect();
    Ok(Extensions { all, maximal })
}

/// The maximal W6-free edge-supersets of `g`, as canonical forms.
pub fn maximal_w6_free_extensions(g: &Graph) -> Result<Vec<CanonicalForm>, GenerateError> {
    let ext = w6_free_extensions(g, DEFAULT_BUDGET)?;
    Ok(ext.maximal.iter().map(CanonKey::form).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::constructions::{complete, complete_bipartite, v8};

    #[test]
    fn four_vertex_graphs() {
        assert_eq!(enumerate_all_graphs(4, &Predicate::all()).unwrap().len(), 11);
        assert!(enumerate_all_graphs(8, &Predicate::all()).is_err());
    }

    #[test]
    fn small_i4c_nonplanar() {
        let five = enumerate_all_graphs(5, &Predicate::fixed("i4c & nonplanar")).unwrap();
        assert_eq!(five.keys(), [canonical_key(&complete(5))]);
        let six = enumerate_all_graphs(6, &Predicate::fixed("3-connected & nonplanar & w6-free & i4c")).unwrap();
        assert_eq!(six.len(), 4);
        assert!(six.contains(&canonical_key(&complete_bipartite(3, 3))));
        assert!(six.contains(&canonical_key(&complete(6))));
    }

    #[test]
    fn v8_supersets() {
        let task = ClosureTask::new(vec![v8()], &[Rule::AddEdge], 8, 28, Predicate::fixed("w6-free"));
        let c = closure_generate(&task).unwrap();
        assert_eq!(c.len(), 49);
        let per_edges: Vec<usize> = c.profile().values().copied().collect();
        assert_eq!(per_edges, [1, 2, 10, 20, 14, 2]);
    }

    #[test]
    fn bounds_are_checked() {
        let task = ClosureTask::new(vec![v8()], &[Rule::AddEdge], 40, 28, Predicate::all());
        assert!(matches!(closure_generate(&task), Err(GenerateError::BoundsExceeded(_))));
        let mut task = ClosureTask::new(vec![v8()], &[Rule::AddEdge], 8, 28, Predicate::all());
        task.max_classes = 5;
        assert!(matches!(closure_generate(&task), Err(GenerateError::BoundsExceeded(_))));
        assert!(generate_3connected(8, 12, &Predicate::fixed("i4c")).is_err());
    }

    #[test]
    fn complete_graph_is_its_own_maximal_extension() {
        let k6 = complete(6);
        assert_eq!(maximal_w6_free_extensions(&k6).unwrap(), vec![canonical_key(&k6).form()]);
    }
}
