//! Property tests against brute-force oracles.

use proptest::prelude::*;

use folkman::arrowing::arrows_after_deletion_check;
use folkman::clique::{
    clique_number, edge_completes_new_clique, has_clique, independence_number, is_plus_kt,
    maximal_kt_free_subsets,
};
use folkman::{arrows, canonical_form, ArrowVector, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&w| g.has_edge(u, w)))
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

fn omega_brute(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&m| is_clique(g, &members(m, n)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Number of `t`-cliques.
fn count_cliques(g: &Graph, t: usize) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&m| m.count_ones() as usize == t && is_clique(g, &members(m, n)))
        .count()
}

fn arrows_brute(g: &Graph, a: &[usize]) -> bool {
    // entries equal to 1 are dropped, and the empty vector arrows every
    // graph; literal colorings differ only on the 0-vertex graph
    if a.iter().all(|&x| x == 1) {
        return true;
    }
    let n = g.order();
    let s = a.len();
    (0..s.pow(n as u32)).all(|code| {
        let mut classes = vec![0u64; s];
        let mut c = code;
        for v in 0..n {
            classes[c % s] |= 1 << v;
            c /= s;
        }
        (0..s).any(|i| omega_brute(&g.induced(&VertexSet::from_bits(classes[i], n))) >= a[i])
    })
}

fn shuffle(g: &Graph, keys: &[u32]) -> Graph {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (keys[i % keys.len()], i));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.permute(&perm)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_is_an_involution(g in graph(16)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_round_trips(g in graph(64)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn induced_equals_deleting_the_rest(g in graph(14), mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask, g.order());
        prop_assert_eq!(g.induced(&s), g.delete_vertices(&s.complement()));
    }

    #[test]
    fn omega_matches_subsets(g in graph(9)) {
        prop_assert_eq!(clique_number(&g), omega_brute(&g));
    }

    #[test]
    fn alpha_is_omega_of_complement(g in graph(24)) {
        prop_assert_eq!(independence_number(&g), clique_number(&g.complement()));
    }

    #[test]
    fn has_clique_agrees(g in graph(14), t in 0usize..8) {
        prop_assert_eq!(has_clique(&g, t), clique_number(&g) >= t);
    }

    #[test]
    fn plus_kt_matches_clique_counts(g in graph(8), t in 2usize..6) {
        let before = count_cliques(&g, t);
        let oracle = g.non_edges().all(|(u, v)| count_cliques(&g.add_edge(u, v).unwrap(), t) > before);
        prop_assert_eq!(is_plus_kt(&g, t), oracle);
        for (u, v) in g.non_edges() {
            let after = count_cliques(&g.add_edge(u, v).unwrap(), t);
            prop_assert_eq!(edge_completes_new_clique(&g, u, v, t).unwrap(), after > before);
        }
    }

    #[test]
    fn free_subsets_match_brute_force(g in graph(9), t in 1usize..5) {
        let n = g.order();
        let free = |m: u64| !has_clique(&g.induced(&VertexSet::from_bits(m, n)), t);
        let mut want: Vec<u64> = (0u64..1 << n)
            .filter(|&m| free(m) && (0..n).all(|v| m >> v & 1 == 1 || !free(m | 1 << v)))
            .collect();
        want.sort_unstable();
        let mut got: Vec<u64> = maximal_kt_free_subsets(&g, t).iter().map(|s| s.bits()).collect();
        got.sort_unstable();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn adding_an_edge_is_monotone(g in graph(14), pick in any::<usize>()) {
        let non: Vec<(usize, usize)> = g.non_edges().collect();
        prop_assume!(!non.is_empty());
        let (u, v) = non[pick % non.len()];
        let h = g.add_edge(u, v).unwrap();
        prop_assert!(clique_number(&h) >= clique_number(&g));
        prop_assert!(independence_number(&h) <= independence_number(&g));
        prop_assert_eq!(h.remove_edge(u, v).unwrap(), g);
    }
}

proptest! {
    // most random graphs do not arrow, so two of these reject a lot
    #![proptest_config(ProptestConfig { max_global_rejects: 1 << 20, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn arrows_matches_colorings(g in graph(7), a in proptest::collection::vec(1usize..5, 1..4)) {
        let v = ArrowVector::new(a.clone()).unwrap();
        prop_assert_eq!(arrows(&g, &v), arrows_brute(&g, &a));
    }

    #[test]
    fn arrows_is_invariant(g in graph(10), a in proptest::collection::vec(1usize..5, 1..4),
                           keys in proptest::collection::vec(any::<u32>(), 1..16)) {
        let v = ArrowVector::new(a.clone()).unwrap();
        let mut reversed = a.clone();
        reversed.reverse();
        let expected = arrows(&g, &v);
        prop_assert_eq!(arrows(&shuffle(&g, &keys), &v), expected);
        prop_assert_eq!(arrows(&g, &ArrowVector::new(reversed).unwrap()), expected);
        // appending entries equal to 1 changes nothing
        let mut ones = a.clone();
        ones.push(1);
        prop_assert_eq!(arrows(&g, &ArrowVector::new(ones).unwrap()), expected);
    }

    #[test]
    fn arrows_survives_edge_addition(g in graph(10), a in proptest::collection::vec(2usize..5, 1..4), pick in any::<usize>()) {
        let v = ArrowVector::new(a).unwrap();
        let non: Vec<(usize, usize)> = g.non_edges().collect();
        prop_assume!(!non.is_empty() && arrows(&g, &v));
        let (x, y) = non[pick % non.len()];
        prop_assert!(arrows(&g.add_edge(x, y).unwrap(), &v));
    }

    #[test]
    fn arrowing_survives_deleting_independent_sets(g in graph(9), a in proptest::collection::vec(2usize..5, 1..4),
                                                   i in any::<usize>(), seed in any::<u64>()) {
        let v = ArrowVector::new(a).unwrap();
        prop_assume!(arrows(&g, &v));
        // greedy independent set from a random start
        let n = g.order();
        let mut set = VertexSet::empty(n);
        for k in 0..n {
            let u = (k + seed as usize) % n;
            if set.iter().all(|w| !g.has_edge(u, w)) && (seed >> (k % 64)) & 1 == 1 {
                set.insert(u);
            }
        }
        prop_assert!(arrows_after_deletion_check(&g, &v, i % v.len(), &set).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1200))]

    #[test]
    fn canonical_form_ignores_labels(g in graph(20), keys in proptest::collection::vec(any::<u32>(), 1..24)) {
        let h = shuffle(&g, &keys);
        let f = canonical_form(&g);
        prop_assert_eq!(&canonical_form(&h), &f);
        prop_assert_eq!(canonical_form(f.graph()), f.clone());
        prop_assert_eq!(f.graph().size(), g.size());
    }
}
