//! Immutable simple graphs on at most 32 vertices.
//!
//! Adjacency is one `u32` bitset per vertex. Internally vertices are dense
//! indices `0..order`; every vertex also carries an external label (1-based
//! by default) that survives edits, so names like "vertex 3" stay addressable
//! after contractions and splits.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::bits::{self, VertexSet};
use crate::error::GraphError;

/// Hard cap on the number of vertices.
pub const MAX_ORDER: usize = 32;

/// A simple undirected graph with bitset adjacency.
///
/// Equality and hashing only look at the order and adjacency; labels are
/// presentation data and two graphs built in different ways compare equal as
/// long as their adjacency rows agree.
#[derive(Clone, Copy)]
pub struct Graph {
    order: u8,
    adj: [VertexSet; MAX_ORDER],
    labels: [u16; MAX_ORDER],
}

/// A `k`-separation described by its two vertex sides.
///
/// `cut` is the intersection of the sides; both sides have at least one
/// private vertex and no edge runs between the private parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Separation {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
    pub cut: VertexSet,
}

impl Separation {
    pub fn k(&self) -> usize {
        self.cut.count_ones() as usize
    }
}

impl Graph {
    /// The edgeless graph on `order` vertices labeled `1..=order`.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OutOfRange(format!("order {order} outside 1..={MAX_ORDER}")));
        }
        let mut labels = [0u16; MAX_ORDER];
        for (i, l) in labels.iter_mut().enumerate().take(order) {
            *l = i as u16 + 1;
        }
        Ok(Graph { order: order as u8, adj: [0; MAX_ORDER], labels })
    }

    /// Builds a graph from 1-based edge pairs. Duplicate pairs collapse.
    pub fn build<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            if u == 0 || v == 0 || u > order || v > order {
                return Err(GraphError::OutOfRange(format!("edge {u}-{v} with order {order}")));
            }
            if u == v {
                return Err(GraphError::LoopRejected(u));
            }
            g.set_edge(u - 1, v - 1);
        }
        Ok(g)
    }

    /// Builds a graph from 0-based adjacency rows, validating symmetry.
    pub fn from_adjacency(rows: &[VertexSet]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let mask = bits::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(GraphError::OutOfRange(format!("row {v} refers past order {n}")));
            }
            if row & bits::bit(v) != 0 {
                return Err(GraphError::LoopRejected(v + 1));
            }
            for u in bits::iter(row) {
                if rows[u] & bits::bit(v) == 0 {
                    return Err(GraphError::Asymmetric(v + 1, u + 1));
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    /// Unchecked constructor for hot paths that already maintain the invariants.
    pub(crate) fn from_raw(order: usize, adj: &[VertexSet]) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&order));
        let mut g = Graph::empty(order).expect("order checked by caller");
        g.adj[..order].copy_from_slice(&adj[..order]);
        g
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bits::bit(v);
        self.adj[v] |= bits::bit(u);
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Adjacency rows, one per vertex.
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.order as usize]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bits::bit(v) != 0
    }

    /// All vertices as a bitset.
    pub fn vertex_set(&self) -> VertexSet {
        bits::full(self.order())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            bits::iter(self.adj[u] & !bits::full(u + 1)).map(move |v| (u, v))
        })
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| {
            bits::iter(!self.adj[u] & bits::full(n) & !bits::full(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn label(&self, v: usize) -> u16 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels[..self.order()]
    }

    /// Index of the vertex carrying `label`.
    pub fn index_of(&self, label: u16) -> Option<usize> {
        self.labels().iter().position(|&l| l == label)
    }

    fn next_label(&self) -> u16 {
        self.labels().iter().copied().max().unwrap_or(0) + 1
    }

    /// Replaces the labels with `1..=order`.
    pub fn with_default_labels(mut self) -> Self {
        for i in 0..self.order() {
            self.labels[i] = i as u16 + 1;
        }
        self
    }

    /// Same graph with explicit labels.
    pub fn with_labels(mut self, labels: &[u16]) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::OutOfRange(format!(
                "{} labels for order {}",
                labels.len(),
                self.order()
            )));
        }
        self.labels[..labels.len()].copy_from_slice(labels);
        Ok(self)
    }

    /// Looks up a 1-based label pair and returns the 0-based indices.
    pub fn edge_by_labels(&self, a: u16, b: u16) -> Result<(usize, usize), GraphError> {
        let u = self.index_of(a).ok_or_else(|| GraphError::OutOfRange(format!("no vertex {a}")))?;
        let v = self.index_of(b).ok_or_else(|| GraphError::OutOfRange(format!("no vertex {b}")))?;
        Ok((u, v))
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopRejected(self.label(u) as usize));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u + 1, v + 1));
        }
        let mut g = *self;
        g.adj[u] &= !bits::bit(v);
        g.adj[v] &= !bits::bit(u);
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::OutOfRange(format!("vertex index {v} with order {}", self.order())))
        } else {
            Ok(())
        }
    }

    /// The subgraph induced by `keep`, with indices compacted in order.
    pub fn induced(&self, keep: VertexSet) -> Result<Self, GraphError> {
        let keep = keep & self.vertex_set();
        let n = keep.count_ones() as usize;
        let mut g = Graph::empty(n)?;
        for (i, v) in bits::iter(keep).enumerate() {
            g.adj[i] = bits::compress(self.adj[v] & keep, keep);
            g.labels[i] = self.labels[v];
        }
        Ok(g)
    }

    pub fn without_vertex(&self, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        self.induced(self.vertex_set() & !bits::bit(v))
    }

    /// Contracts edge `uv` and simplifies.
    ///
    /// The endpoint with the larger label disappears into the one with the
    /// smaller label; indices above the removed vertex shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u + 1, v + 1));
        }
        let (keep, gone) = if self.labels[u] <= self.labels[v] { (u, v) } else { (v, u) };
        let mut g = *self;
        let merged = (g.adj[keep] | g.adj[gone]) & !bits::bit(keep) & !bits::bit(gone);
        for w in bits::iter(g.adj[gone]) {
            g.adj[w] &= !bits::bit(gone);
        }
        g.adj[gone] = 0;
        for w in bits::iter(merged) {
            g.adj[w] |= bits::bit(keep);
        }
        g.adj[keep] = merged;
        g.induced(g.vertex_set() & !bits::bit(gone))
    }

    /// Contracts the edge between two labeled vertices.
    pub fn contract_labels(&self, a: u16, b: u16) -> Result<Self, GraphError> {
        let (u, v) = self.edge_by_labels(a, b)?;
        self.contract(u, v)
    }

    /// Splits `v`: `v` keeps the neighbors in `x_side` and a new vertex takes
    /// the rest of `N(v)`; the two are joined by an edge.
    ///
    /// The new vertex is appended last and gets the next free label, so
    /// contracting the new edge returns the original graph.
    pub fn split_vertex(&self, v: usize, x_side: VertexSet) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let nbrs = self.adj[v];
        let y_side = nbrs & !x_side;
        if x_side & !nbrs != 0 || x_side.count_ones() < 2 || y_side.count_ones() < 2 {
            return Err(GraphError::BadSplit(format!(
                "vertex {} with parts of sizes {} and {}",
                self.label(v),
                (x_side & nbrs).count_ones(),
                y_side.count_ones()
            )));
        }
        let n = self.order();
        if n + 1 > MAX_ORDER {
            return Err(GraphError::OutOfRange("split would exceed the vertex cap".into()));
        }
        let mut g = *self;
        let y = n;
        g.order += 1;
        g.labels[y] = self.next_label();
        for w in bits::iter(y_side) {
            g.adj[w] &= !bits::bit(v);
            g.adj[w] |= bits::bit(y);
        }
        g.adj[v] = x_side | bits::bit(y);
        g.adj[y] = y_side | bits::bit(v);
        Ok(g)
    }

    /// Appends `count` pairwise nonadjacent vertices whose neighborhood is
    /// exactly `attach`.
    pub fn add_twins(&self, attach: VertexSet, count: usize) -> Result<Self, GraphError> {
        if attach & !self.vertex_set() != 0 {
            return Err(GraphError::OutOfRange("attachment set outside the graph".into()));
        }
        if self.order() + count > MAX_ORDER {
            return Err(GraphError::OutOfRange(format!(
                "{} + {count} vertices exceeds the cap of {MAX_ORDER}",
                self.order()
            )));
        }
        let mut g = *self;
        for _ in 0..count {
            let y = g.order();
            g.labels[y] = g.next_label();
            g.order += 1;
            g.adj[y] = attach;
            for w in bits::iter(attach) {
                g.adj[w] |= bits::bit(y);
            }
        }
        Ok(g)
    }

    /// Relabels positions: vertex `v` moves to index `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let n = self.order();
        if perm.len() != n || perm.iter().fold(0u32, |m, &p| m | bits::bit(p % 32)) != bits::full(n) {
            return Err(GraphError::OutOfRange("not a permutation of the vertices".into()));
        }
        let mut g = *self;
        for v in 0..n {
            g.adj[perm[v]] = bits::iter(self.adj[v]).fold(0, |m, u| m | bits::bit(perm[u]));
            g.labels[perm[v]] = self.labels[v];
        }
        Ok(g)
    }

    /// Disjoint union; the second graph's labels are shifted past the first's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.order();
        if n + other.order() > MAX_ORDER {
            return Err(GraphError::OutOfRange("union exceeds the vertex cap".into()));
        }
        let shift = self.next_label() - 1;
        let mut g = *self;
        g.order += other.order;
        for v in 0..other.order() {
            g.adj[n + v] = other.adj[v] << n;
            g.labels[n + v] = other.labels[v] + shift;
        }
        Ok(g)
    }

    /// Vertex sets of the connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let comp = self.reach(bits::lowest(rest), within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// Everything reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bits::bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits::iter(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_set()) == self.vertex_set()
    }

    fn is_connected_within(&self, within: VertexSet) -> bool {
        within == 0 || self.reach(bits::lowest(within), within) == within
    }

    /// `k`-connectivity by deleting every vertex set of size `< k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        let n = self.order();
        if n <= k {
            return false;
        }
        let all = self.vertex_set();
        let mut ok = true;
        bits::for_each_subset_upto(all, k - 1, |cut| {
            if ok && !self.is_connected_within(all & !cut) {
                ok = false;
            }
        });
        ok
    }

    pub fn is_three_connected(&self) -> bool {
        let n = self.order();
        if n < 4 || self.min_degree() < 3 {
            return false;
        }
        let all = self.vertex_set();
        if !self.is_connected() {
            return false;
        }
        for a in 0..n {
            let without_a = all & !bits::bit(a);
            if !self.is_connected_within(without_a) {
                return false;
            }
            for b in a + 1..n {
                if !self.is_connected_within(without_a & !bits::bit(b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Vertex connectivity via Menger: the minimum, over nonadjacent pairs,
    /// of the number of internally disjoint paths. `K_n` gives `n - 1`.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.order();
        let mut best = n.saturating_sub(1);
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.local_connectivity(s, t, best));
                    if best == 0 {
                        return 0;
                    }
                }
            }
        }
        best
    }

    /// Maximum number of internally disjoint `s`-`t` paths for nonadjacent
    /// `s`, `t`, stopping early once `limit` is reached.
    pub fn local_connectivity(&self, s: usize, t: usize, limit: usize) -> usize {
        // Split every vertex into in/out halves; unit capacities everywhere.
        let n = self.order();
        let node_in = |v: usize| 2 * v;
        let node_out = |v: usize| 2 * v + 1;
        let size = 2 * n;
        let mut cap = vec![0i8; size * size];
        for v in 0..n {
            let c = if v == s || v == t { n as i8 } else { 1 };
            cap[node_in(v) * size + node_out(v)] = c;
            for u in bits::iter(self.adj[v]) {
                cap[node_out(v) * size + node_in(u)] = 1;
            }
        }
        let (source, sink) = (node_out(s), node_in(t));
        let mut flow = 0;
        let mut parent = vec![usize::MAX; size];
        while flow < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for y in 0..size {
                    if parent[y] == usize::MAX && cap[x * size + y] > 0 {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                cap[x * size + y] -= 1;
                cap[y * size + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }

    /// Internal 4-connectivity.
    ///
    /// `G` must be 3-connected with at least five vertices, and every vertex
    /// cut `S` of size three must leave a side that is a claw `K_{1,3}` under
    /// every way of distributing the edges inside `S`. That holds exactly when
    /// `S` is independent and `G - S` either has two components one of which
    /// is a single vertex, or has three components that are all single
    /// vertices.
    pub fn is_internally_four_connected(&self) -> bool {
        let n = self.order();
        if n < 5 || !self.is_three_connected() {
            return false;
        }
        let all = self.vertex_set();
        let mut ok = true;
        bits::for_each_subset_of_size(all, 3, |cut| {
            if !ok {
                return;
            }
            let comps = self.components_within(all & !cut);
            if comps.len() < 2 {
                return;
            }
            let independent = bits::iter(cut).all(|v| self.adj[v] & cut == 0);
            let singles = comps.iter().filter(|c| c.count_ones() == 1).count();
            let claw_side = match comps.len() {
                2 => singles >= 1,
                3 => singles == 3,
                _ => false,
            };
            if !independent || !claw_side {
                ok = false;
            }
        });
        ok
    }

    /// Every `k`-separation at the vertex level: each way of grouping the
    /// components of `G - S` into two nonempty sides, for every `k`-set `S`
    /// that disconnects the graph.
    pub fn separations(&self, k: usize) -> Vec<Separation> {
        let all = self.vertex_set();
        let mut out = Vec::new();
        bits::for_each_subset_of_size(all, k, |cut| {
            let comps = self.components_within(all & !cut);
            if comps.len() < 2 {
                return;
            }
            // Fix the first component on side A to avoid listing mirror images.
            let r = comps.len();
            for mask in 0u32..(1 << (r - 1)) {
                let mut a = comps[0];
                let mut b = 0;
                for (i, c) in comps.iter().enumerate().skip(1) {
                    if mask & (1 << (i - 1)) != 0 {
                        a |= c;
                    } else {
                        b |= c;
                    }
                }
                if b != 0 {
                    out.push(Separation { side_a: a | cut, side_b: b | cut, cut });
                }
            }
        });
        out
    }

    /// Cubic vertices grouped by identical neighborhoods; only groups of two
    /// or more are returned.
    pub fn cubic_twin_classes(&self) -> Vec<VertexSet> {
        let mut groups: Vec<(VertexSet, VertexSet)> = Vec::new();
        for v in 0..self.order() {
            if self.degree(v) != 3 {
                continue;
            }
            match groups.iter_mut().find(|(n, _)| *n == self.adj[v]) {
                Some((_, members)) => *members |= bits::bit(v),
                None => groups.push((self.adj[v], bits::bit(v))),
            }
        }
        groups.into_iter().map(|(_, m)| m).filter(|m| m.count_ones() >= 2).collect()
    }

    pub fn has_cubic_twins(&self) -> bool {
        !self.cubic_twin_classes().is_empty()
    }

    /// The complement graph.
    pub fn complement(&self) -> Self {
        let mut g = *self;
        let all = self.vertex_set();
        for v in 0..self.order() {
            g.adj[v] = all & !self.adj[v] & !bits::bit(v);
        }
        g
    }

    /// Edge list in label space, `(a, b)` with `a < b`, sorted.
    pub fn labeled_edges(&self) -> Vec<(u16, u16)> {
        let mut e: Vec<(u16, u16)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u], self.labels[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.rows() == other.rows()
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.rows().hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.order(), self.size())?;
        let edges: Vec<String> =
            self.labeled_edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        write!(f, "{})", edges.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                e.push((u, v));
            }
        }
        Graph::build(n, e).unwrap()
    }

    fn v8() -> Graph {
        let mut e: Vec<(usize, usize)> = (1..=8).map(|i| (i, i % 8 + 1)).collect();
        e.extend((1..=4).map(|i| (i, i + 4)));
        Graph::build(8, e).unwrap()
    }

    #[test]
    fn build_k4_and_v8() {
        let g = k(4);
        assert_eq!(g.degree_sequence(), vec![3, 3, 3, 3]);
        let v = v8();
        assert_eq!(v.size(), 12);
        assert!((0..8).all(|i| v.degree(i) == 3));
        let single = Graph::build(1, []).unwrap();
        assert_eq!((single.order(), single.size()), (1, 0));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(Graph::build(0, []), Err(GraphError::OutOfRange(_))));
        assert!(matches!(Graph::build(33, []), Err(GraphError::OutOfRange(_))));
        assert!(matches!(Graph::build(3, [(1, 4)]), Err(GraphError::OutOfRange(_))));
        assert!(matches!(Graph::build(3, [(2, 2)]), Err(GraphError::LoopRejected(2))));
        let dup = Graph::build(3, [(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn contract_collapses_parallels() {
        let g = k(4).contract(0, 1).unwrap();
        assert_eq!(g, k(3));
        assert_eq!(g.labels(), &[1, 3, 4]);
        assert!(matches!(v8().contract(0, 2), Err(GraphError::NotAnEdge(..))));
    }

    #[test]
    fn contract_keeps_lower_label() {
        let g = Graph::build(3, [(1, 2), (2, 3)]).unwrap();
        let c = g.contract(2, 1).unwrap();
        assert_eq!(c.labels(), &[1, 2]);
        assert!(c.has_edge(0, 1));
    }

    #[test]
    fn split_then_contract_is_identity() {
        let w4 = Graph::build(5, [(1, 2), (2, 3), (3, 4), (4, 1), (5, 1), (5, 2), (5, 3), (5, 4)]).unwrap();
        let hub = 4;
        let split = w4.split_vertex(hub, 0b0011).unwrap();
        assert_eq!(split.order(), 6);
        assert_eq!(split.size(), 9);
        let back = split.contract(hub, 5).unwrap();
        assert_eq!(back, w4);
        assert_eq!(back.labels(), w4.labels());
        assert!(w4.split_vertex(hub, 0b0001).is_err());
        assert!(w4.split_vertex(0, 0b0010).is_err());
    }

    #[test]
    fn connectivity_of_small_graphs() {
        assert_eq!(k(4).vertex_connectivity(), 3);
        assert_eq!(k(1).vertex_connectivity(), 0);
        assert_eq!(v8().vertex_connectivity(), 3);
        assert!(v8().is_three_connected());
        let path = Graph::build(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(path.vertex_connectivity(), 1);
        let two = Graph::build(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(two.vertex_connectivity(), 0);
    }

    #[test]
    fn internal_four_connectivity_basics() {
        let k33 = Graph::build(6, [(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)]).unwrap();
        assert!(k33.is_internally_four_connected());
        assert!(!k(4).is_internally_four_connected());
        assert!(k(5).is_internally_four_connected());
        // K_{4,3} plus an edge on the 3-side: cubic vertices sit in triangles.
        let mut e = Vec::new();
        for a in 1..=4 {
            for b in 5..=7 {
                e.push((a, b));
            }
        }
        e.push((5, 6));
        assert!(!Graph::build(7, e).unwrap().is_internally_four_connected());
        // W5: rim vertices are cubic and lie in triangles.
        let w5 = Graph::build(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (6, 1), (6, 2), (6, 3), (6, 4), (6, 5)]).unwrap();
        assert!(w5.is_three_connected());
        assert!(!w5.is_internally_four_connected());
    }

    #[test]
    fn separations_are_well_formed() {
        let g = v8();
        for s in g.separations(3) {
            assert_eq!(s.side_a & s.side_b, s.cut);
            assert_eq!(s.side_a | s.side_b, g.vertex_set());
            assert_ne!(s.side_a & !s.side_b, 0);
            assert_ne!(s.side_b & !s.side_a, 0);
            for (u, v) in g.edges() {
                let e = bits::bit(u) | bits::bit(v);
                assert!(e & !s.side_a == 0 || e & !s.side_b == 0);
            }
        }
    }

    #[test]
    fn twins_and_permutation() {
        let g = v8().add_twins(0b100101, 2).unwrap();
        assert_eq!(g.order(), 10);
        // Vertex 2 of V8 already has neighborhood {1, 3, 6}.
        assert_eq!(g.cubic_twin_classes(), vec![0b11_0000_0010]);
        assert_eq!(g.labels()[8..], [9, 10]);
        let p: Vec<usize> = (0..10).rev().collect();
        let h = g.permute(&p).unwrap();
        assert_eq!(h.size(), g.size());
        assert_eq!(h.permute(&p).unwrap(), g);
    }
}
