//! Clique and independence computations on bitset adjacency.
//!
//! The searches work on raw neighbor masks restricted to a candidate mask so
//! that callers can query subgraphs (`ω(G[S])`, `α(H - M)`) without
//! materializing them.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

/// Upper bound on the clique number of `adj[cand]` from a greedy coloring.
#[inline]
fn greedy_color_bound(adj: &[u64], cand: u64, stop_at: usize) -> usize {
    let mut rem = cand;
    let mut colors = 0;
    while rem != 0 {
        colors += 1;
        if colors >= stop_at {
            return colors;
        }
        let mut q = rem;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            rem &= !(1 << v);
            q &= !(1 << v) & !adj[v];
        }
    }
    colors
}

/// Does `adj[cand]` contain a clique on `t` vertices?
pub(crate) fn has_clique_in(adj: &[u64], cand: u64, t: usize) -> bool {
    match t {
        0 => true,
        1 => cand != 0,
        2 => Bits(cand).any(|v| adj[v] & cand != 0),
        _ => {
            if (cand.count_ones() as usize) < t {
                return false;
            }
            if greedy_color_bound(adj, cand, t) < t {
                return false;
            }
            let mut rest = cand;
            while rest.count_ones() as usize >= t {
                let v = rest.trailing_zeros() as usize;
                rest &= !(1 << v);
                if has_clique_in(adj, rest & adj[v], t - 1) {
                    return true;
                }
            }
            false
        }
    }
}

/// Clique number of `adj[cand]`, branch and bound with coloring bounds.
pub(crate) fn clique_number_in(adj: &[u64], cand: u64) -> usize {
    let mut best = 0;
    expand(adj, cand, 0, &mut best);
    best
}

fn expand(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    // color classes in order; vertices visited from the highest color down
    let mut order = [0u8; 64];
    let mut color = [0u8; 64];
    let mut len = 0;
    let mut rem = cand;
    let mut c = 0u8;
    while rem != 0 {
        c += 1;
        let mut q = rem;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            rem &= !(1 << v);
            q &= !(1 << v) & !adj[v];
            order[len] = v as u8;
            color[len] = c;
            len += 1;
        }
    }
    let mut cand = cand;
    for i in (0..len).rev() {
        if size + color[i] as usize <= *best {
            return;
        }
        let v = order[i] as usize;
        expand(adj, cand & adj[v], size + 1, best);
        cand &= !(1 << v);
    }
}

/// Complement rows restricted to the vertex range of `g`.
pub(crate) fn complement_rows(g: &Graph) -> Vec<u64> {
    let all = g.all_mask();
    g.rows().iter().enumerate().map(|(v, &r)| !r & all & !(1 << v)).collect()
}

pub(crate) fn independence_number_in(g: &Graph, mask: u64) -> usize {
    clique_number_in(&complement_rows(g), mask)
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_in(g.rows(), g.all_mask())
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_in(g, g.all_mask())
}

/// `ω(g) ≥ t`, stopping at the first `t`-clique found.
pub fn has_clique(g: &Graph, t: usize) -> bool {
    has_clique_in(g.rows(), g.all_mask(), t)
}

/// Does adding the non-edge `uv` create a `t`-clique through it? Holds iff
/// the common neighborhood of `u` and `v` contains a `(t-2)`-clique.
pub fn edge_completes_new_clique(g: &Graph, u: usize, v: usize, t: usize) -> Result<bool> {
    if u >= g.order() || v >= g.order() || u == v {
        return Err(Error::Edit { u, v, reason: "not a vertex pair of the graph" });
    }
    if g.has_edge(u, v) {
        return Err(Error::Edit { u, v, reason: "edge already present" });
    }
    Ok(has_clique_in(g.rows(), g.row(u) & g.row(v), t.saturating_sub(2)))
}

/// `(+K_t)`-graph test: every missing edge completes a new `t`-clique.
/// Vacuously true for complete graphs.
pub fn is_plus_kt(g: &Graph, t: usize) -> bool {
    let adj = g.rows();
    let need = t.saturating_sub(2);
    g.non_edges().all(|(u, v)| has_clique_in(adj, adj[u] & adj[v], need))
}

/// Maximality in `H(..; q)`: for a `K_q`-free graph this is exactly the
/// `(+K_q)` property.
pub fn is_maximal_in_family(g: &Graph, q: usize) -> Result<bool> {
    if has_clique(g, q) {
        return Err(Error::Domain(format!("graph {g} contains K_{q}")));
    }
    Ok(is_plus_kt(g, q))
}

/// All inclusion-maximal vertex subsets `S` with `ω(G[S]) < t`, sorted by
/// bitset value.
pub fn maximal_kt_free_subsets(g: &Graph, t: usize) -> Vec<VertexSet> {
    maximal_kt_free_masks(g, t)
        .into_iter()
        .map(|m| VertexSet::from_bits(m, g.order()))
        .collect()
}

pub(crate) fn maximal_kt_free_masks(g: &Graph, t: usize) -> Vec<u64> {
    assert!(t >= 1, "t must be positive");
    let mut out = Vec::new();
    if t == 1 {
        // only the empty set avoids K_1
        out.push(0);
        return out;
    }
    // vertices that cannot even start a K_t-free set do not exist for t >= 2
    extend_free(g.rows(), t, 0, g.all_mask(), 0, &mut out);
    out.sort_unstable();
    out
}

/// Bron–Kerbosch style extension of the `K_t`-free set `r`. `p` holds
/// vertices still addable and undecided, `x` those addable but excluded.
fn extend_free(adj: &[u64], t: usize, r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // an excluded vertex addable to every extension rules out maximality below
    let reach = r | p;
    if Bits(x).any(|w| !has_clique_in(adj, reach & adj[w], t - 1)) {
        return;
    }
    let mut p = p;
    let mut x = x;
    while p != 0 {
        let v = p.trailing_zeros() as usize;
        let vb = 1u64 << v;
        p &= !vb;
        let r2 = r | vb;
        // w stays addable unless v closes a (t-1)-clique inside r2 ∩ N(w)
        let keep = |w: usize| adj[w] & vb == 0 || !has_clique_in(adj, r & adj[w] & adj[v], t - 2);
        let p2 = Bits(p).filter(|&w| keep(w)).fold(0u64, |m, w| m | 1 << w);
        let x2 = Bits(x).filter(|&w| keep(w)).fold(0u64, |m, w| m | 1 << w);
        extend_free(adj, t, r2, p2, x2, out);
        x |= vb;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_omega(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .filter(|&s| Bits(s).all(|v| g.row(v) & s == s & !(1 << v)))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn clique_numbers() {
        for n in 0..8 {
            assert_eq!(clique_number(&Graph::complete(n).unwrap()), n);
            assert_eq!(independence_number(&Graph::empty(n).unwrap()), n);
        }
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(clique_number(&c5), 2);
        assert_eq!(independence_number(&c5), 2);
        assert_eq!(clique_number(&Graph::cycle(7).unwrap().complement()), 3);
    }

    #[test]
    fn has_clique_cases() {
        assert!(has_clique(&Graph::complete(5).unwrap(), 5));
        assert!(!has_clique(&Graph::complete(5).unwrap(), 6));
        assert!(!has_clique(&Graph::cycle(5).unwrap(), 3));
        assert!(has_clique(&Graph::empty(0).unwrap(), 0));
        assert!(has_clique(&Graph::cycle(6).unwrap(), 0));
    }

    #[test]
    fn new_clique_through_edge() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(edge_completes_new_clique(&c5, 0, 2, 3).unwrap());
        let e2 = Graph::empty(2).unwrap();
        assert!(edge_completes_new_clique(&e2, 0, 1, 2).unwrap());
        let p3 = Graph::path(3).unwrap();
        assert!(!edge_completes_new_clique(&p3, 0, 2, 4).unwrap());
        assert!(matches!(edge_completes_new_clique(&c5, 0, 1, 3), Err(Error::Edit { .. })));
    }

    #[test]
    fn plus_kt_cases() {
        assert!(is_plus_kt(&Graph::cycle(5).unwrap(), 3));
        assert!(is_plus_kt(&Graph::complete(6).unwrap(), 9));
        let c6 = Graph::cycle(6).unwrap();
        assert!(!is_plus_kt(&c6, 3));
        // only the three long diagonals fail
        let failing: Vec<_> = c6
            .non_edges()
            .filter(|&(u, v)| !edge_completes_new_clique(&c6, u, v, 3).unwrap())
            .collect();
        assert_eq!(failing, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn maximality() {
        let g = Graph::complete(3).unwrap().disjoint_union(&Graph::empty(1).unwrap()).unwrap();
        assert!(!is_maximal_in_family(&g, 4).unwrap());
        let c5bar = Graph::cycle(5).unwrap().complement();
        assert!(is_maximal_in_family(&c5bar, 3).unwrap());
        assert!(is_maximal_in_family(&Graph::complete(4).unwrap(), 5).unwrap());
        assert!(is_maximal_in_family(&Graph::complete(4).unwrap(), 4).is_err());
    }

    #[test]
    fn free_subsets_examples() {
        let k4 = Graph::complete(4).unwrap();
        let subs = maximal_kt_free_subsets(&k4, 3);
        assert_eq!(subs.len(), 6);
        assert!(subs.iter().all(|s| s.len() == 2));

        let e5 = Graph::empty(5).unwrap();
        assert_eq!(maximal_kt_free_subsets(&e5, 2), vec![VertexSet::full(5)]);

        let c5 = Graph::cycle(5).unwrap();
        let mis: Vec<u64> = maximal_kt_free_subsets(&c5, 2).iter().map(|s| s.bits()).collect();
        // oracle: brute force over all 32 subsets
        let indep = |s: u64| Bits(s).all(|v| c5.row(v) & s == 0);
        let mut expected: Vec<u64> = (0u64..32)
            .filter(|&s| indep(s) && (0..5).all(|w| s & (1 << w) != 0 || !indep(s | 1 << w)))
            .collect();
        expected.sort_unstable();
        assert_eq!(mis, expected);
        assert_eq!(mis.len(), 5);
        assert!(mis.iter().all(|s| s.count_ones() == 2));
    }

    #[test]
    fn omega_matches_bruteforce_on_fixed_graphs() {
        let graphs = [
            Graph::cycle(7).unwrap().complement(),
            Graph::path(6).unwrap(),
            Graph::complete(3).unwrap().join(&Graph::cycle(5).unwrap()).unwrap(),
        ];
        for g in &graphs {
            assert_eq!(clique_number(g), brute_omega(g));
            assert_eq!(independence_number(g), brute_omega(&g.complement()));
        }
    }
}
