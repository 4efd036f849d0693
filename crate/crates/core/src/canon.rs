//! Canonical labeling by individualization and refinement.
//!
//! The search tree is explored depth first. Each leaf is a discrete ordered
//! partition, i.e. a relabeling; the canonical graph is the relabeled graph
//! with the largest adjacency rows among all leaves. Automorphisms are
//! detected when two leaves produce the same relabeled graph, and are used
//! both to skip equivalent children and to abandon subtrees early. The
//! generators recorded this way generate the full automorphism group.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, VertexSet};
use crate::format;
use crate::graph::{Graph, MAX_ORDER};

/// Adjacency rows of a canonically relabeled graph. Cheap to hash and compare.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    n: u8,
    rows: [u32; MAX_ORDER],
}

impl CanonKey {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> Graph {
        Graph::from_raw(self.n as usize, &self.rows)
    }

    pub fn form(&self) -> CanonicalForm {
        CanonicalForm(format::to_graph6(&self.graph()))
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", format::to_graph6(&self.graph()))
    }
}

/// Printable canonical form: the graph6 string of the canonical relabeling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative graph.
    pub fn graph(&self) -> Graph {
        format::from_graph6(&self.0).expect("canonical forms are valid graph6")
    }

    pub fn key(&self) -> CanonKey {
        canonical_key(&self.graph())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

/// A vertex permutation: `p[v]` is the image of `v`.
pub type Perm = Vec<u8>;

/// Everything the search learns about one graph.
#[derive(Clone, Debug)]
pub struct Canon {
    /// `position[v]` is the canonical index of vertex `v`.
    pub position: Vec<usize>,
    pub key: CanonKey,
    /// Generators of the (color-preserving) automorphism group.
    pub generators: Vec<Perm>,
    /// `orbit[v]` is the smallest vertex in the orbit of `v`.
    pub orbit: Vec<usize>,
    pub group_order: u128,
}

impl Canon {
    pub fn form(&self) -> CanonicalForm {
        self.key.form()
    }

    /// Orbits as vertex sets, ordered by smallest member.
    pub fn orbit_sets(&self) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = Vec::new();
        let mut rep_index = vec![usize::MAX; self.orbit.len()];
        for (v, &r) in self.orbit.iter().enumerate() {
            if rep_index[r] == usize::MAX {
                rep_index[r] = out.len();
                out.push(0);
            }
            out[rep_index[r]] |= bits::bit(v);
        }
        out
    }
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    canon(g).key
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canon(g).form()
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    canon(g).key.graph()
}

pub fn canon(g: &Graph) -> Canon {
    canon_colored(g, &[g.vertex_set()])
}

/// Canonical labeling of a vertex-colored graph.
///
/// `cells` is an ordered partition of the vertices; automorphisms must map
/// each cell to itself and the canonical labeling respects the cell order.
/// Empty cells are ignored.
pub fn canon_colored(g: &Graph, cells: &[VertexSet]) -> Canon {
    let n = g.order();
    let mut start: Vec<VertexSet> = cells.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(start.iter().fold(0, |a, c| a | c), g.vertex_set());
    refine(g, &mut start);
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
        first_path: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    search.explore(&start, &mut path);
    let best = search.best.take().expect("search visits at least one leaf");
    let mut position = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        position[v as usize] = i;
    }
    let orbit = orbits_of(n, &search.generators, &[]);
    let group_order = search.group_order(&start);
    Canon { position, key: best.key, generators: search.generators, orbit, group_order }
}

/// Orbits of the automorphism group, as `orbit[v]` = smallest vertex in the orbit of `v`.
pub fn automorphism_orbits(g: &Graph) -> Vec<usize> {
    canon(g).orbit
}

/// Orbits of the subgroup of automorphisms fixing each vertex of `fixed`.
pub fn stabilizer_orbits(g: &Graph, fixed: &[usize]) -> Vec<usize> {
    let mut cells: Vec<VertexSet> = fixed.iter().map(|&v| bits::bit(v)).collect();
    let fixed_set = cells.iter().fold(0, |a, c| a | c);
    cells.push(g.vertex_set() & !fixed_set);
    canon_colored(g, &cells).orbit
}

/// Isomorphism test with cheap invariant filters in front.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_key(g) == canonical_key(h)
}

/// An isomorphism `g -> h` as `map[v]` = image of `v`, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let (cg, ch) = (canon(g), canon(h));
    if cg.key != ch.key {
        return None;
    }
    let mut inv_h = vec![0; h.order()];
    for (v, &p) in ch.position.iter().enumerate() {
        inv_h[p] = v;
    }
    Some(cg.position.iter().map(|&p| inv_h[p]).collect())
}

struct Leaf {
    key: CanonKey,
    lab: Vec<u8>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Perm>,
    first_path: Vec<usize>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the caller should unwind to `level`.
    fn explore(&mut self, cells: &[VertexSet], path: &mut Vec<usize>) -> Option<usize> {
        let level = path.len();
        let Some(target_idx) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(cells, path);
        };
        let target = cells[target_idx];
        let mut explored: VertexSet = 0;
        let mut seen_gens = usize::MAX;
        let mut orbit = Vec::new();
        for v in bits::iter(target) {
            if seen_gens != self.generators.len() {
                orbit = orbits_of(self.g.order(), &self.generators, path);
                seen_gens = self.generators.len();
            }
            if bits::iter(explored).any(|u| orbit[u] == orbit[v]) {
                continue;
            }
            explored |= bits::bit(v);
            let mut child = cells.to_vec();
            child[target_idx] = target & !bits::bit(v);
            child.insert(target_idx, bits::bit(v));
            refine(self.g, &mut child);
            path.push(v);
            let jump = self.explore(&child, path);
            path.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[VertexSet], path: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let lab: Vec<u8> = cells.iter().map(|c| bits::lowest(*c) as u8).collect();
        let key = relabel(self.g, &lab);
        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            let leaf = Leaf { key, lab: lab.clone(), path: path.to_vec() };
            self.first = Some(Leaf { key, lab, path: path.to_vec() });
            self.best = Some(leaf);
            return None;
        };
        if key == first.key {
            let gamma = automorphism(&first.lab, &lab, n);
            let to = common_prefix(&first.path, path);
            self.add_generator(gamma);
            return Some(to);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match key.rows[..n].cmp(&best.key.rows[..n]) {
            Ordering::Equal => {
                let gamma = automorphism(&best.lab, &lab, n);
                let to = common_prefix(&best.path, path);
                self.add_generator(gamma);
                Some(to)
            }
            Ordering::Greater => {
                self.best = Some(Leaf { key, lab, path: path.to_vec() });
                None
            }
            Ordering::Less => None,
        }
    }

    fn add_generator(&mut self, gamma: Perm) {
        if gamma.iter().enumerate().any(|(i, &p)| p as usize != i) && !self.generators.contains(&gamma) {
            self.generators.push(gamma);
        }
    }

    /// Product over the first path of the orbit length of the chosen vertex
    /// under the pointwise stabilizer of the path prefix above it.
    fn group_order(&self, _start: &[VertexSet]) -> u128 {
        let n = self.g.order();
        let mut order: u128 = 1;
        for k in 0..self.first_path.len() {
            let orbit = orbits_of(n, &self.generators, &self.first_path[..k]);
            let v = self.first_path[k];
            let len = orbit.iter().filter(|&&r| r == orbit[v]).count();
            order = order.saturating_mul(len as u128);
        }
        order
    }
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// The permutation sending leaf `from` onto leaf `to`.
fn automorphism(from: &[u8], to: &[u8], n: usize) -> Perm {
    let mut gamma = vec![0u8; n];
    for i in 0..n {
        gamma[from[i] as usize] = to[i];
    }
    gamma
}

fn relabel(g: &Graph, lab: &[u8]) -> CanonKey {
    let n = g.order();
    let mut pos = [0u8; MAX_ORDER];
    for (i, &v) in lab.iter().enumerate() {
        pos[v as usize] = i as u8;
    }
    let mut rows = [0u32; MAX_ORDER];
    for (i, &v) in lab.iter().enumerate() {
        rows[i] = bits::iter(g.neighbors(v as usize)).fold(0, |r, u| r | bits::bit(pos[u] as usize));
    }
    CanonKey { n: n as u8, rows }
}

/// Orbits under the generators that fix every vertex of `fixed`.
fn orbits_of(n: usize, generators: &[Perm], fixed: &[usize]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gamma in generators {
        if fixed.iter().any(|&v| gamma[v] as usize != v) {
            continue;
        }
        for (v, &image) in gamma.iter().enumerate().take(n) {
            let (a, b) = (find(&mut parent, v), find(&mut parent, image as usize));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Refines an ordered partition until it is equitable.
///
/// Each cell is split by the number of neighbors its vertices have in a
/// splitter cell; the resulting pieces are ordered by that count. Every step
/// depends only on the ordered partition, so the result is invariant under
/// relabeling.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let n = g.order();
    let mut counts = [0u8; MAX_ORDER];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            if cells.len() == n {
                return;
            }
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.count_ones() == 1 {
                    i += 1;
                    continue;
                }
                let mut lo = u8::MAX;
                let mut hi = 0;
                for v in bits::iter(cell) {
                    let c = (g.neighbors(v) & splitter).count_ones() as u8;
                    counts[v] = c;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    i += 1;
                    continue;
                }
                let mut pieces = Vec::new();
                for c in lo..=hi {
                    let piece = bits::iter(cell).filter(|&v| counts[v] == c).fold(0, |m, v| m | bits::bit(v));
                    if piece != 0 {
                        pieces.push(piece);
                    }
                }
                let added = pieces.len();
                cells.splice(i..=i, pieces);
                if i < s {
                    s += added - 1;
                }
                i += added;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}
