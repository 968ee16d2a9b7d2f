//! Independent oracles cross-checking the production algorithms by a
//! structurally different route: planarity via forbidden-minor search,
//! colourability via raw assignment enumeration, and encoding plus
//! canonical-form invariants via randomized property tests.

use defekt::{
    are_isomorphic, brute_force_enumerate, canonical_form, emit_graph6, enumerate_triangle_free,
    is_mk_colourable, is_planar, parse_graph6, validate_colouring, SearchConfig, SmallGraph,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Random labeled graph with edge probability 1/2.
fn random_graph(seed: u64, n: usize) -> SmallGraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut g = SmallGraph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(0.5) {
                g = g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// True when `g` has a minor matching `pattern` on `parts` branch sets:
/// every vertex is assigned to one branch set or none, each branch set is
/// nonempty and connected, and each pattern edge has a crossing edge.
fn has_minor(g: &SmallGraph, pattern: &[(usize, usize)], parts: usize) -> bool {
    fn connected_in(g: &SmallGraph, mask: u32) -> bool {
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= g.row(v) & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    fn rec(g: &SmallGraph, pattern: &[(usize, usize)], classes: &mut [u32], v: usize) -> bool {
        let n = g.order();
        if v == n {
            for &c in classes.iter() {
                if c == 0 || !connected_in(g, c) {
                    return false;
                }
            }
            for &(a, b) in pattern {
                let mut hit = false;
                let mut f = classes[a];
                while f != 0 {
                    let x = f.trailing_zeros() as usize;
                    f &= f - 1;
                    if g.row(x) & classes[b] != 0 {
                        hit = true;
                        break;
                    }
                }
                if !hit {
                    return false;
                }
            }
            return true;
        }
        for c in 0..classes.len() {
            classes[c] |= 1 << v;
            if rec(g, pattern, classes, v + 1) {
                return true;
            }
            classes[c] &= !(1u32 << v);
        }
        rec(g, pattern, classes, v + 1)
    }

    let mut classes = vec![0u32; parts];
    rec(g, pattern, &mut classes, 0)
}

/// Planarity by Wagner's theorem: planar iff no K5 minor and no K3,3 minor.
/// Graphs with at most 8 edges are planar outright, since the smallest
/// nonplanar graph K3,3 already has 9.
fn is_planar_minor_oracle(g: &SmallGraph) -> bool {
    if g.edge_count() <= 8 {
        return true;
    }
    let k5: Vec<(usize, usize)> = (1..5).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    !has_minor(g, &k5, 5) && !has_minor(g, &k33, 6)
}

#[test]
fn minor_oracle_agrees_on_landmarks() {
    assert!(!is_planar_minor_oracle(&SmallGraph::complete(5).unwrap()));
    assert!(!is_planar_minor_oracle(
        &SmallGraph::complete_bipartite(3, 3).unwrap()
    ));
    assert!(is_planar_minor_oracle(&SmallGraph::complete(4).unwrap()));
    let petersen = parse_graph6("IsP@PGXD_").unwrap();
    assert!(!is_planar_minor_oracle(&petersen));
}

#[test]
fn planarity_matches_minor_oracle_on_all_classes_up_to_order_6() {
    for n in 1..=6 {
        for g in brute_force_enumerate(n).unwrap() {
            assert_eq!(
                is_planar(&g),
                is_planar_minor_oracle(&g),
                "order {n} graph {}",
                emit_graph6(&g)
            );
        }
    }
}

#[test]
fn planarity_matches_minor_oracle_at_order_7() {
    let (classes, _) = enumerate_triangle_free(&SearchConfig::new(7)).unwrap();
    let mut graphs: Vec<SmallGraph> = classes;
    for seed in 0..60 {
        graphs.push(random_graph(seed, 7));
    }
    for g in graphs {
        assert_eq!(
            is_planar(&g),
            is_planar_minor_oracle(&g),
            "graph {}",
            emit_graph6(&g)
        );
    }
}

/// Raw existence check: scan every assignment of m colours to the vertices.
fn colourable_by_scan(g: &SmallGraph, m: usize, k: usize) -> bool {
    let n = g.order();
    let mut colours = vec![1u8; n];
    loop {
        if validate_colouring(g, k, &colours).is_ok() {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            if colours[i] as usize >= m {
                colours[i] = 1;
                i += 1;
            } else {
                colours[i] += 1;
                break;
            }
        }
    }
}

#[test]
fn solver_matches_assignment_scan_on_order_6_classes() {
    for g in brute_force_enumerate(6).unwrap() {
        for (m, k) in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)] {
            assert_eq!(
                is_mk_colourable(&g, m, k).is_some(),
                colourable_by_scan(&g, m, k),
                "graph {} m={m} k={k}",
                emit_graph6(&g)
            );
        }
    }
}

fn graph_strategy(max_order: usize) -> impl Strategy<Value = SmallGraph> {
    (0..=max_order)
        .prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut g = SmallGraph::empty(n).unwrap();
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[idx] {
                        g = g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn graph6_round_trips(g in graph_strategy(12)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_permutation_invariant(g in graph_strategy(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut StdRng::seed_from_u64(seed));
        let mut h = SmallGraph::empty(n).unwrap();
        for (u, v) in g.edges() {
            h = h.add_edge(perm[u], perm[v]).unwrap();
        }
        prop_assert_eq!(canonical_form(&g).key, canonical_form(&h).key);
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_key_encodes_an_isomorphic_graph(g in graph_strategy(8)) {
        let key = canonical_form(&g).key;
        let h = parse_graph6(&key).unwrap();
        prop_assert!(are_isomorphic(&g, &h));
    }
}
