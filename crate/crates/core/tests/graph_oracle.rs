//! Connectivity predicates checked against exhaustive definitions.

use minorkit::bits;
use minorkit::format::{from_graph6, to_graph6};
use minorkit::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

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

fn connected_without(g: &Graph, removed: u32) -> bool {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| removed >> v & 1 == 0).collect();
    if keep.is_empty() {
        return true;
    }
    let mut seen = vec![keep[0]];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &y in &keep {
            if !seen.contains(&y) && g.has_edge(x, y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    seen.len() == keep.len()
}

/// Smallest number of vertices whose removal disconnects the graph or
/// leaves a single vertex.
fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    let mut best = n - 1;
    for cut in 0u32..(1 << n) {
        let k = cut.count_ones() as usize;
        if k < best && k < n - 1 && !connected_without(g, cut) {
            best = k;
        }
    }
    best
}

/// The literal definition: every 3-separation, under every placement of the
/// edges inside the cut, has a side that is a claw.
fn brute_i4c(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 || brute_connectivity(g) < 3 {
        return false;
    }
    for cut in 0u32..(1 << n) {
        if cut.count_ones() != 3 {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| cut >> v & 1 == 0).collect();
        // Every bipartition of the rest into two nonempty sides with no edges across.
        for side in 1u32..(1 << rest.len()) - 1 {
            let a: u32 = rest.iter().enumerate().filter(|(i, _)| side >> i & 1 == 1).map(|(_, &v)| 1 << v).sum();
            let b: u32 = rest.iter().map(|&v| 1u32 << v).sum::<u32>() & !a;
            if a & 1 << rest[0] == 0 {
                continue;
            }
            let across = bits::iter(a).any(|x| bits::iter(b).any(|y| g.has_edge(x, y)));
            if across {
                continue;
            }
            let inner: Vec<(usize, usize)> = g
                .edges()
                .filter(|&(x, y)| cut >> x & 1 == 1 && cut >> y & 1 == 1)
                .collect();
            for dist in 0u32..(1 << inner.len()) {
                let side_edges = |private: u32, mine: bool| -> Vec<(usize, usize)> {
                    let mut e: Vec<(usize, usize)> = g
                        .edges()
                        .filter(|&(x, y)| (private >> x & 1 == 1) || (private >> y & 1 == 1))
                        .collect();
                    for (i, &ie) in inner.iter().enumerate() {
                        if (dist >> i & 1 == 1) == mine {
                            e.push(ie);
                        }
                    }
                    e
                };
                let claw = |private: u32, mine: bool| {
                    let e = side_edges(private, mine);
                    private.count_ones() == 1 && e.len() == 3 && {
                        let c = private.trailing_zeros() as usize;
                        e.iter().all(|&(x, y)| x == c || y == c)
                    }
                };
                if !claw(a, true) && !claw(b, false) {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn connectivity_matches_cut_enumeration() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            let k = brute_connectivity(&g);
            assert_eq!(g.vertex_connectivity(), k, "{}", to_graph6(&g));
            assert_eq!(g.is_three_connected(), k >= 3 && n >= 4, "{}", to_graph6(&g));
            assert_eq!(g.is_connected(), k >= 1 || n == 1);
        }
    }
}

#[test]
fn connectivity_on_seven_vertices() {
    (0..(1u64 << 21)).into_par_iter().for_each(|mask| {
        let g = graph_from_mask(7, mask);
        let k = brute_connectivity(&g);
        assert_eq!(g.vertex_connectivity(), k, "{}", to_graph6(&g));
        assert_eq!(g.is_three_connected(), k >= 3, "{}", to_graph6(&g));
    });
}

#[test]
fn internal_four_connectivity_matches_definition() {
    for n in 5..=7 {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            if g.min_degree() < 3 {
                assert!(!g.is_internally_four_connected());
                continue;
            }
            assert_eq!(g.is_internally_four_connected(), brute_i4c(&g), "{}", to_graph6(&g));
        }
    }
}

#[test]
fn separations_cover_every_disconnecting_cut() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(4..=9);
        let mask = rng.gen::<u64>() & ((1u64 << (n * (n - 1) / 2)) - 1);
        let g = graph_from_mask(n, mask);
        for k in 1..=3 {
            let seps = g.separations(k);
            for s in &seps {
                assert_eq!(s.k(), k);
                assert_eq!(s.side_a | s.side_b, g.vertex_set());
                assert!(!connected_without(&g, s.cut));
            }
            for cut in 0u32..(1 << n) {
                if cut.count_ones() as usize == k && !connected_without(&g, cut) {
                    assert!(seps.iter().any(|s| s.cut == cut));
                }
            }
        }
    }
}

#[test]
fn graph6_round_trips_in_bulk() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 1..=32 {
        for _ in 0..10_000 {
            let mut rows = vec![0u32; n];
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        rows[u] |= 1 << v;
                        rows[v] |= 1 << u;
                    }
                }
            }
            let g = Graph::from_adjacency(&rows).unwrap();
            let s = to_graph6(&g);
            let back = from_graph6(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_graph6(&back), s);
        }
    }
}
