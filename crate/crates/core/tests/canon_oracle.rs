//! Canonical labeling checked against brute force over all permutations.

use std::collections::HashMap;

use minorkit::canon::{canon, stabilizer_orbits};
use minorkit::format::{from_graph6, to_graph6};
use minorkit::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

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

/// Smallest edge mask over all relabelings, plus automorphisms.
fn brute(g: &Graph, perms: &[Vec<usize>]) -> (u64, Vec<Vec<usize>>) {
    let n = g.order();
    let mut best = u64::MAX;
    let mut autos = Vec::new();
    for p in perms {
        let mut mask = 0u64;
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << k;
                }
                k += 1;
            }
        }
        best = best.min(mask);
        if g.edges().all(|(u, v)| g.has_edge(p[u], p[v])) {
            autos.push(p.clone());
        }
    }
    (best, autos)
}

fn brute_orbits(n: usize, autos: &[Vec<usize>], fixed: &[usize]) -> Vec<usize> {
    (0..n)
        .map(|v| {
            autos
                .iter()
                .filter(|p| fixed.iter().all(|&f| p[f] == f))
                .map(|p| p[v])
                .min()
                .unwrap()
        })
        .collect()
}

#[test]
fn all_graphs_up_to_six_vertices() {
    for n in 1..=6 {
        let perms = permutations(n);
        let pairs = n * (n - 1) / 2;
        let mut classes: HashMap<u64, minorkit::CanonKey> = HashMap::new();
        let mut keys = std::collections::HashSet::new();
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            let c = canon(&g);
            let (min_mask, autos) = brute(&g, &perms);
            match classes.get(&min_mask) {
                Some(k) => assert_eq!(*k, c.key, "n={n} mask={mask}"),
                None => {
                    assert!(keys.insert(c.key), "two classes share a key at n={n}");
                    classes.insert(min_mask, c.key);
                }
            }
            assert_eq!(c.group_order, autos.len() as u128, "n={n} mask={mask}");
            assert_eq!(c.orbit, brute_orbits(n, &autos, &[]), "n={n} mask={mask}");
        }
        let expected = [1, 2, 4, 11, 34, 156][n - 1];
        assert_eq!(classes.len(), expected, "isomorphism classes on {n} vertices");
    }
}

#[test]
fn stabilizer_orbits_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let perms = permutations(7);
    for _ in 0..200 {
        let g = graph_from_mask(7, rng.gen::<u64>() & ((1 << 21) - 1));
        let (_, autos) = brute(&g, &perms);
        let c = canon(&g);
        assert_eq!(c.group_order, autos.len() as u128);
        for fixed in [vec![0], vec![0, 3], vec![6, 2, 4]] {
            assert_eq!(stabilizer_orbits(&g, &fixed), brute_orbits(7, &autos, &fixed));
        }
    }
}

proptest! {
    #[test]
    fn graph6_round_trips(n in 1usize..=32, seed in any::<u64>(), density in 0.0f64..1.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, edges).unwrap();
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labeling(n in 2usize..=14, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, edges).unwrap();
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            p.swap(i, rng.gen_range(0..=i));
        }
        let h = g.permute(&p).unwrap();
        prop_assert_eq!(canon(&g).key, canon(&h).key);
        prop_assert_eq!(canon(&g).group_order, canon(&h).group_order);
    }
}
