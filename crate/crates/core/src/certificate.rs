//! Stand-alone checker for minor models. Deliberately uses nothing but
//! `Graph::has_edge` so that it does not share logic with the search.

use crate::graph::Graph;
use crate::minor::MinorModel;

/// True iff `model` is a valid model of `pattern` in `host`: one nonempty
/// branch set per pattern vertex, pairwise disjoint, each inducing a
/// connected subgraph of the host, and every pattern edge realized by a host
/// edge between the corresponding branch sets.
pub fn verify_minor_model(host: &Graph, pattern: &Graph, model: &MinorModel) -> bool {
    let n = host.order();
    let sets: Vec<Vec<usize>> = model
        .branch_sets
        .iter()
        .map(|&s| (0..32).filter(|&i| s >> i & 1 == 1).collect())
        .collect();
    if sets.len() != pattern.order() {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for (p, set) in sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for &v in set {
            if v >= n || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = p;
        }
    }
    for set in &sets {
        let mut reached = vec![set[0]];
        let mut i = 0;
        while i < reached.len() {
            let x = reached[i];
            for &y in set {
                if !reached.contains(&y) && host.has_edge(x, y) {
                    reached.push(y);
                }
            }
            i += 1;
        }
        if reached.len() != set.len() {
            return false;
        }
    }
    for a in 0..pattern.order() {
        for b in a + 1..pattern.order() {
            if pattern.has_edge(a, b) {
                let joined = sets[a].iter().any(|&x| sets[b].iter().any(|&y| host.has_edge(x, y)));
                if !joined {
                    return false;
                }
            }
        }
    }
    true
}
