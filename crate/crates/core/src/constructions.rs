//! Named graph families and the three generative operations: adding an
//! edge, splitting a vertex, and gluing two graphs at cubic vertices.
//!
//! Labeling conventions (all 1-based):
//!
//! * `W_n`: rim `1..=n` in cyclic order, hub `n+1`.
//! * `V8`: the 8-cycle `1..=8` plus the diagonals `i, i+4`.
//! * cube: the 8-cycle `1..=8` plus chords `14, 36, 58, 72`. Odd and even
//!   labels form the bipartition, `N(3) = {2,4,6}` and 8 is antipodal to 3.
//! * Petersen: outer cycle `1..=5`, inner pentagram on `6..=10`
//!   (`6-8-10-7-9-6`), spokes `i, i+5`.
//! * `DW_n`, `DW+_n`: rim `1..=n`, hubs `n+1` and `n+2`.
//! * `AW_2n`, `AW+_2n`: rim `1..=2n`; hub `2n+1` sees the odd rim vertices and
//!   hub `2n+2` the even ones.
//! * `K_{m,3}` and its edge-added variants: `X1 = 1..=m`, `X2 = m+1..=m+3`.
//! * Prism: triangles `123` and `456` with the matching `14, 25, 36`.
//! * `K_{4,4} - 3K_2`: sides `1..=4` and `5..=8` without `15, 26, 37`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, VertexSet};
use crate::canon::{canonical_key, CanonKey};
use crate::error::{ConstructionError, GraphError};
use crate::graph::Graph;

/// Parameters for one of the named families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Wheel(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Petersen,
    V8,
    Cube,
    Prism,
    /// `C²_n`: the square of the `n`-cycle.
    CycleSquare(usize),
    DoubleWheel { n: usize, hub_edge: bool },
    /// Rim of length `2n`.
    AltDoubleWheel { n: usize, hub_edge: bool },
    /// `K_{m,3}` plus explicit edges inside each side. Pairs are 1-based
    /// positions within the side (`1..=m` for `X1`, `1..=3` for `X2`).
    KmThree { m: usize, x1: Vec<(usize, usize)>, x2: Vec<(usize, usize)> },
    K44Minus3K2,
}

impl Family {
    pub fn build(&self) -> Result<Graph, ConstructionError> {
        let bad = |s: String| Err(ConstructionError::BadParameter(s));
        let g = match *self {
            Family::Wheel(n) if n < 3 => return bad(format!("wheel needs n >= 3, got {n}")),
            Family::Wheel(n) => {
                let mut e = cycle_edges(n);
                e.extend((1..=n).map(|i| (i, n + 1)));
                Graph::build(n + 1, e)?
            }
            Family::Cycle(n) if n < 3 => return bad(format!("cycle needs n >= 3, got {n}")),
            Family::Cycle(n) => Graph::build(n, cycle_edges(n))?,
            Family::Complete(n) => {
                Graph::build(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))?
            }
            Family::CompleteBipartite(a, b) if a == 0 || b == 0 => {
                return bad(format!("K_{{{a},{b}}} needs both sides nonempty"))
            }
            Family::CompleteBipartite(a, b) => {
                Graph::build(a + b, (1..=a).flat_map(|u| (a + 1..=a + b).map(move |v| (u, v))))?
            }
            Family::Petersen => {
                let mut e = cycle_edges(5);
                e.extend([(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]);
                e.extend((1..=5).map(|i| (i, i + 5)));
                Graph::build(10, e)?
            }
            Family::V8 => {
                let mut e = cycle_edges(8);
                e.extend((1..=4).map(|i| (i, i + 4)));
                Graph::build(8, e)?
            }
            Family::Cube => {
                let mut e = cycle_edges(8);
                e.extend([(1, 4), (3, 6), (5, 8), (7, 2)]);
                Graph::build(8, e)?
            }
            Family::Prism => {
                Graph::build(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])?
            }
            Family::CycleSquare(n) if n < 5 => return bad(format!("C²_n needs n >= 5, got {n}")),
            Family::CycleSquare(n) => {
                let mut e = cycle_edges(n);
                e.extend((1..=n).map(|i| (i, (i + 1) % n + 1)));
                Graph::build(n, e)?
            }
            Family::DoubleWheel { n, .. } if n < 3 => {
                return bad(format!("double wheel needs n >= 3, got {n}"))
            }
            Family::DoubleWheel { n, hub_edge } => {
                let mut e = cycle_edges(n);
                e.extend((1..=n).flat_map(|i| [(i, n + 1), (i, n + 2)]));
                if hub_edge {
                    e.push((n + 1, n + 2));
                }
                Graph::build(n + 2, e)?
            }
            Family::AltDoubleWheel { n, .. } if n < 3 => {
                return bad(format!("alternating double wheel needs 2n >= 6, got {}", 2 * n))
            }
            Family::AltDoubleWheel { n, hub_edge } => {
                let r = 2 * n;
                let mut e = cycle_edges(r);
                e.extend((1..=r).map(|i| (i, if i % 2 == 1 { r + 1 } else { r + 2 })));
                if hub_edge {
                    e.push((r + 1, r + 2));
                }
                Graph::build(r + 2, e)?
            }
            Family::KmThree { m, ref x1, ref x2 } => {
                if m == 0 {
                    return bad("K_{m,3} needs m >= 1".into());
                }
                let inside = |&(a, b): &(usize, usize), k: usize| a != b && (1..=k).contains(&a) && (1..=k).contains(&b);
                if !x1.iter().all(|p| inside(p, m)) || !x2.iter().all(|p| inside(p, 3)) {
                    return bad(format!("side edges out of range for K_{{{m},3}}"));
                }
                let mut e: Vec<(usize, usize)> =
                    (1..=m).flat_map(|u| (m + 1..=m + 3).map(move |v| (u, v))).collect();
                e.extend(x1.iter().copied());
                e.extend(x2.iter().map(|&(a, b)| (a + m, b + m)));
                Graph::build(m + 3, e)?
            }
            Family::K44Minus3K2 => {
                let e = (1..=4)
                    .flat_map(|u| (5..=8).map(move |v| (u, v)))
                    .filter(|&(u, v)| !matches!((u, v), (1, 5) | (2, 6) | (3, 7)));
                Graph::build(8, e)?
            }
        };
        Ok(g)
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (1..=n).map(|i| (i, i % n + 1)).collect()
}

/// Shorthand for families whose parameters are known to be valid.
///
/// # Panics
/// If the parameters are out of range.
pub fn family(f: Family) -> Graph {
    f.build().unwrap_or_else(|e| panic!("{f:?}: {e}"))
}

pub fn wheel(n: usize) -> Graph {
    family(Family::Wheel(n))
}

pub fn complete(n: usize) -> Graph {
    family(Family::Complete(n))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    family(Family::CompleteBipartite(a, b))
}

pub fn v8() -> Graph {
    family(Family::V8)
}

pub fn cube() -> Graph {
    family(Family::Cube)
}

pub fn petersen() -> Graph {
    family(Family::Petersen)
}

/// The line graph. Vertices follow the edge order of `g.edges()`.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((i + 1, j + 1));
            }
        }
    }
    Graph::build(edges.len().max(1), out)
}

/// Adds `t` new pairwise nonadjacent cubic vertices whose neighborhood is the
/// three vertices with the given labels.
pub fn add_cubic_vertices(g: &Graph, attach: [u16; 3], t: usize) -> Result<Graph, GraphError> {
    let mut set = 0;
    for l in attach {
        let v = g.index_of(l).ok_or_else(|| GraphError::OutOfRange(format!("no vertex {l}")))?;
        set |= bits::bit(v);
    }
    if set.count_ones() != 3 {
        return Err(GraphError::OutOfRange(format!("{attach:?} is not a 3-set")));
    }
    g.add_twins(set, t)
}

/// Adds edges given as label pairs.
pub fn with_label_edges(g: &Graph, edges: &[(u16, u16)]) -> Result<Graph, GraphError> {
    let mut h = *g;
    for &(a, b) in edges {
        let (u, v) = h.edge_by_labels(a, b)?;
        h = h.with_edge(u, v)?;
    }
    Ok(h)
}

/// Every single-edge addition, one per nonedge, in nonedge order.
pub fn enumerate_edge_additions(g: &Graph) -> Vec<((usize, usize), Graph)> {
    g.non_edges()
        .map(|(u, v)| ((u, v), g.with_edge(u, v).expect("nonedge of a valid graph")))
        .collect()
}

/// One vertex split: `v` keeps `x` and the new vertex takes `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub v: usize,
    pub x: VertexSet,
    pub y: VertexSet,
}

/// Every split of every vertex of degree at least 4. Each unordered
/// partition appears once; `x` always holds the lowest neighbor.
pub fn enumerate_splits(g: &Graph) -> Vec<(SplitSpec, Graph)> {
    let mut out = Vec::new();
    for v in 0..g.order() {
        let nbrs = g.neighbors(v);
        let d = nbrs.count_ones() as usize;
        if d < 4 {
            continue;
        }
        let first = bits::lowest(nbrs);
        let rest = nbrs & !bits::bit(first);
        // Subsets of the other neighbors that join `first` on the x side.
        let packed = bits::full(d - 1);
        for sub in 0..=packed {
            let x = bits::expand(sub, rest) | bits::bit(first);
            let y = nbrs & !x;
            if x.count_ones() < 2 || y.count_ones() < 2 {
                continue;
            }
            let h = g.split_vertex(v, x).expect("partition checked above");
            out.push((SplitSpec { v, x, y }, h));
        }
    }
    out
}

/// One gluing of `G1` at cubic `x` with `G2` at cubic `y`: the k-th
/// neighbor of `x` (ascending index) is matched to `matching[k]` in `G2`,
/// and matching edge k is contracted when bit k of `contracted` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TSumSpec {
    pub x: usize,
    pub y: usize,
    pub matching: [usize; 3],
    pub contracted: u8,
}

impl TSumSpec {
    pub fn contracted_count(&self) -> usize {
        self.contracted.count_ones() as usize
    }
}

/// Builds a single T-sum. Vertices of `G1 - x` keep their labels; those of
/// `G2 - y` are shifted past them.
pub fn t_sum(g1: &Graph, g2: &Graph, spec: &TSumSpec) -> Result<Graph, ConstructionError> {
    for (g, v) in [(g1, spec.x), (g2, spec.y)] {
        if v >= g.order() || g.degree(v) != 3 {
            return Err(ConstructionError::NotCubic(format!("index {v}")));
        }
    }
    let nx: Vec<usize> = bits::iter(g1.neighbors(spec.x)).collect();
    let ny = g2.neighbors(spec.y);
    let image = spec.matching.iter().fold(0, |m, &w| m | bits::bit(w));
    if image != ny {
        return Err(ConstructionError::BadParameter("matching is not a bijection onto N(y)".into()));
    }
    let a = g1.without_vertex(spec.x)?;
    let b = g2.without_vertex(spec.y)?;
    let shift = |v: usize, gone: usize| if v > gone { v - 1 } else { v };
    let mut h = a.disjoint_union(&b)?;
    let n1 = a.order();
    let pairs: Vec<(usize, usize)> =
        (0..3).map(|k| (shift(nx[k], spec.x), n1 + shift(spec.matching[k], spec.y))).collect();
    for &(u, v) in &pairs {
        h = h.with_edge(u, v)?;
    }
    // Contract by label so earlier contractions don't invalidate indices.
    let labeled: Vec<(u16, u16)> = pairs.iter().map(|&(u, v)| (h.label(u), h.label(v))).collect();
    for (k, &(la, lb)) in labeled.iter().enumerate() {
        if spec.contracted >> k & 1 == 1 {
            h = h.contract_labels(la, lb)?;
        }
    }
    Ok(h)
}

/// All T-sums at the given pair of cubic vertices, deduplicated up to
/// isomorphism within each contraction count. `by_count[i]` holds one
/// representative per class of T_i-sums, sorted by canonical key.
#[derive(Debug, Clone)]
pub struct TSums {
    pub by_count: [Vec<(TSumSpec, Graph)>; 4],
}

impl TSums {
    pub fn classes(&self, i: usize) -> Vec<CanonKey> {
        self.by_count[i].iter().map(|(_, g)| canonical_key(g)).collect()
    }
}

pub fn enumerate_t_sums(g1: &Graph, x: usize, g2: &Graph, y: usize) -> Result<TSums, ConstructionError> {
    if y >= g2.order() || g2.degree(y) != 3 {
        return Err(ConstructionError::NotCubic(format!("index {y} of the second graph")));
    }
    let ny: Vec<usize> = bits::iter(g2.neighbors(y)).collect();
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut specs = Vec::new();
    for p in perms {
        for contracted in 0u8..8 {
            specs.push(TSumSpec { x, y, matching: [ny[p[0]], ny[p[1]], ny[p[2]]], contracted });
        }
    }
    let built: Vec<(TSumSpec, Graph, CanonKey)> = specs
        .into_par_iter()
        .map(|s| t_sum(g1, g2, &s).map(|g| (s, g, canonical_key(&g))))
        .collect::<Result<_, _>>()?;
    let mut by_count: [Vec<(TSumSpec, Graph, CanonKey)>; 4] = Default::default();
    for (s, g, k) in built {
        let bucket = &mut by_count[s.contracted_count()];
        if !bucket.iter().any(|(_, _, k2)| *k2 == k) {
            bucket.push((s, g, k));
        }
    }
    let by_count = by_count.map(|mut v| {
        v.sort_by_key(|a| a.2);
        v.into_iter().map(|(s, g, _)| (s, g)).collect()
    });
    Ok(TSums { by_count })
}

/// All T-sums over every cubic vertex of each graph.
pub fn enumerate_all_t_sums(g1: &Graph, g2: &Graph) -> Result<TSums, ConstructionError> {
    let mut merged: [Vec<(TSumSpec, Graph, CanonKey)>; 4] = Default::default();
    for x in (0..g1.order()).filter(|&v| g1.degree(v) == 3) {
        for y in (0..g2.order()).filter(|&v| g2.degree(v) == 3) {
            let t = enumerate_t_sums(g1, x, g2, y)?;
            for (i, bucket) in t.by_count.into_iter().enumerate() {
                for (s, g) in bucket {
                    let k = canonical_key(&g);
                    if !merged[i].iter().any(|(_, _, k2)| *k2 == k) {
                        merged[i].push((s, g, k));
                    }
                }
            }
        }
    }
    let by_count = merged.map(|mut v| {
        v.sort_by_key(|a| a.2);
        v.into_iter().map(|(s, g, _)| (s, g)).collect()
    });
    Ok(TSums { by_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::minor::has_minor;
    use std::collections::HashSet;

    #[test]
    fn family_sizes() {
        let w6 = wheel(6);
        assert_eq!((w6.order(), w6.size(), w6.max_degree()), (7, 12, 6));
        for n in 3..10 {
            let w = wheel(n);
            assert_eq!((w.order(), w.size()), (n + 1, 2 * n));
            let dw = family(Family::DoubleWheel { n, hub_edge: true });
            assert_eq!((dw.order(), dw.size()), (n + 2, 3 * n + 1));
        }
        for n in 5..12 {
            let c = family(Family::CycleSquare(n));
            assert!((0..n).all(|v| c.degree(v) == 4));
        }
        let v = v8();
        assert_eq!(v.size(), 12);
        assert!((0..8).all(|i| v.degree(i) == 3));
        assert_eq!(petersen().size(), 15);
        assert!((0..10).all(|i| petersen().degree(i) == 3));
    }

    #[test]
    fn cube_labeling() {
        let c = cube();
        assert!((0..8).all(|v| c.degree(v) == 3));
        assert_eq!(c.neighbors(2), 0b10_1010); // N(3) = {2,4,6}
        assert!(are_isomorphic(&c, &complete_bipartite(4, 4).without_edge(0, 4).unwrap().without_edge(1, 5).unwrap().without_edge(2, 6).unwrap().without_edge(3, 7).unwrap()));
    }

    #[test]
    fn named_isomorphisms() {
        let dw3 = family(Family::DoubleWheel { n: 3, hub_edge: true });
        assert!(are_isomorphic(&dw3, &complete(5)));
        let k22 = family(Family::KmThree { m: 3, x1: vec![(1, 2), (2, 3)], x2: vec![(1, 2), (2, 3)] });
        assert!(are_isomorphic(&k22, &family(Family::DoubleWheel { n: 4, hub_edge: true })));
        let aw = family(Family::AltDoubleWheel { n: 3, hub_edge: true });
        assert_eq!(aw.order(), 8);
        assert!(has_minor(&aw, &wheel(6)).unwrap());
        let aw8 = family(Family::AltDoubleWheel { n: 4, hub_edge: false });
        assert!((0..8).all(|v| aw8.degree(v) == 3));
    }

    #[test]
    fn line_graph_of_k33() {
        let l = line_graph(&complete_bipartite(3, 3)).unwrap();
        assert_eq!((l.order(), l.size()), (9, 18));
        assert!((0..9).all(|v| l.degree(v) == 4));
    }

    #[test]
    fn v8_edge_additions_and_splits() {
        let adds = enumerate_edge_additions(&v8());
        assert_eq!(adds.len(), 16);
        let classes: HashSet<_> = adds.iter().map(|(_, g)| canonical_key(g)).collect();
        assert_eq!(classes.len(), 2);
        assert!(enumerate_splits(&v8()).is_empty());
        assert!(enumerate_edge_additions(&complete(6)).is_empty());
    }

    #[test]
    fn splits_invert_contraction() {
        let w4 = wheel(4);
        let splits = enumerate_splits(&w4);
        // Only the hub has degree 4; its neighbors split 2+2 in three ways.
        assert_eq!(splits.len(), 3);
        for (s, h) in splits {
            assert_eq!(h.order(), 6);
            let back = h.contract(s.v, 5).unwrap();
            assert_eq!(back, w4);
        }
        let k6 = complete(6);
        for (s, h) in enumerate_splits(&k6) {
            assert_eq!(s.x | s.y, k6.neighbors(s.v));
            assert_eq!(h.contract(s.v, 6).unwrap(), k6);
        }
        // Five neighbors: 10 partitions into 2+3 per vertex.
        assert_eq!(enumerate_splits(&k6).len(), 6 * 10);
    }

    #[test]
    fn split_of_v8_plus_13_16_gives_twin_graph() {
        let g = with_label_edges(&v8(), &[(1, 3), (1, 6)]).unwrap();
        let x = bits::bit(2) | bits::bit(5);
        let h = g.split_vertex(0, x).unwrap();
        let m = add_cubic_vertices(&v8(), [1, 3, 6], 1).unwrap();
        assert!(are_isomorphic(&h, &m));
    }

    #[test]
    fn cubic_vertices_commute() {
        let c = cube();
        let a = add_cubic_vertices(&add_cubic_vertices(&c, [2, 4, 6], 2).unwrap(), [2, 4, 6], 1).unwrap();
        let b = add_cubic_vertices(&c, [2, 4, 6], 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(add_cubic_vertices(&c, [2, 4, 6], 0).unwrap(), c);
        assert_eq!(b.order(), 11);
    }

    #[test]
    fn t_sums_of_small_pieces() {
        let k4 = complete(4);
        let k33 = complete_bipartite(3, 3);
        let t = enumerate_t_sums(&k4, 0, &k4, 0).unwrap();
        assert!(t.by_count[3].is_empty() || t.by_count[3].iter().all(|(_, g)| g.order() == 3));
        let prism = family(Family::Prism);
        assert_eq!(t.by_count[0].len(), 1);
        assert!(are_isomorphic(&t.by_count[0][0].1, &prism));
        assert!(are_isomorphic(&t.by_count[1][0].1, &wheel(4)));
        assert!(are_isomorphic(&t.by_count[2][0].1, &k4));

        let t = enumerate_t_sums(&k33, 0, &k33, 0).unwrap();
        assert_eq!(t.by_count[3].len(), 1);
        assert!(are_isomorphic(&t.by_count[3][0].1, &complete_bipartite(4, 3)));
        assert_eq!(t.by_count[2].len(), 1);
        assert_eq!(t.by_count[2][0].1.order(), 8);
        for i in 0..4 {
            for (s, g) in &t.by_count[i] {
                assert_eq!(s.contracted_count(), i);
                assert_eq!(g.order(), 6 + 6 - 2 - i);
            }
        }
    }

    #[test]
    fn t_sum_rejects_noncubic() {
        let k5 = complete(5);
        assert!(matches!(enumerate_t_sums(&k5, 0, &k5, 0), Err(ConstructionError::NotCubic(_))));
    }
}
