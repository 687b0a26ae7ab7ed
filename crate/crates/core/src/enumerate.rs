//! Exhaustive generation of isomorphism classes for small orders.
//!
//! Classes on `k + 1` vertices are obtained from classes on `k` vertices by
//! appending one vertex with every possible neighborhood. With a hereditary
//! filter (closed under induced subgraphs, e.g. `K_q`-free with `α ≤ t`)
//! pruning at every level loses nothing.

use rayon::prelude::*;

use crate::arrowing::{arrows, ArrowVector};
use crate::canon::{canonical_form, CanonicalForm, GraphSet};
use crate::clique::{has_clique, independence_number, is_plus_kt};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order the exhaustive generator accepts.
pub const MAX_EXHAUSTIVE_ORDER: usize = 10;

/// All classes on `n` vertices whose every induced subgraph satisfies `keep`.
pub fn hereditary_classes<F>(n: usize, keep: F) -> Result<GraphSet>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Domain(format!(
            "exhaustive generation is limited to {MAX_EXHAUSTIVE_ORDER} vertices, asked for {n}"
        )));
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)?];
    for k in 0..n {
        let next: GraphSet = level
            .par_iter()
            .flat_map_iter(|g| {
                let keep = &keep;
                (0u64..1 << k).filter_map(move |nb| {
                    let h = g.with_vertex(&VertexSet::from_bits(nb, k)).ok()?;
                    keep(&h).then(|| canonical_form(&h))
                })
            })
            .collect::<Vec<CanonicalForm>>()
            .into_iter()
            .collect();
        level = next.sorted_graphs();
    }
    Ok(level.iter().collect())
}

pub fn all_classes(n: usize) -> Result<GraphSet> {
    hereditary_classes(n, |_| true)
}

/// Members of `H_max^t(a; q; n)` with `α ≥ r`, by filtering every
/// `K_q`-free class with `α ≤ t`.
pub fn maximal_family_exhaustive(
    a: &ArrowVector,
    q: usize,
    n: usize,
    r: usize,
    t: usize,
) -> Result<GraphSet> {
    let pool = hereditary_classes(n, |g| !has_clique(g, q) && independence_number(g) <= t)?;
    let out: Vec<CanonicalForm> = pool
        .forms()
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|f| {
            let g = f.graph();
            is_plus_kt(g, q) && independence_number(g) >= r && arrows(g, a)
        })
        .cloned()
        .collect();
    Ok(out.into_iter().collect())
}
