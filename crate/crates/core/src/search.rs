//! Generation of maximal `K_q`-free arrowing graphs.
//!
//! Notation: `H_max^t(a; q; n)` is the set of `n`-vertex graphs `G` with
//! `G →v a`, `ω(G) < q`, `α(G) ≤ t`, maximal with respect to edge addition.
//! The extension algorithms build the members with `α(G) ≥ r` from the
//! family with the first arrow entry lowered and `r` fewer vertices:
//!
//! 1. descend from the smaller maximal graphs to all `(+K_{q-1})`-graphs by
//!    removing edges ([`plus_clique_descent`]);
//! 2. for every such host `H`, list the maximal `K_{q-1}`-free vertex subsets
//!    and the `r`-multisets of them that pass the pair and independence
//!    conditions ([`valid_multisets`]);
//! 3. attach `r` independent vertices with those neighborhoods ([`extend`]),
//!    keep maximal results, drop isomorphs, keep arrowing ones.
//!
//! [`run_algorithm_2`] skips hosts with cone vertices and recovers the coned
//! outputs directly from the two input families.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrowing::{arrows, ArrowVector};
use crate::canon::{canonical_form, CanonicalForm, GraphSet};
use crate::clique::{
    complement_rows, clique_number_in, has_clique, has_clique_in, independence_number,
    is_plus_kt, maximal_kt_free_masks,
};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};

/// Identifies `H_max^t(a; q; n)` restricted to `α ≥ r`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub a: ArrowVector,
    pub q: usize,
    pub n: usize,
    pub r: usize,
    pub t: usize,
}

impl FamilySpec {
    pub fn new(a: ArrowVector, q: usize, n: usize, r: usize, t: usize) -> Result<Self> {
        let spec = FamilySpec { a: a.canonical(), q, n, r, t };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.q <= self.a.p() {
            return Err(Error::Config(format!(
                "{self}: q = {} must exceed max entry {}",
                self.q,
                self.a.p()
            )));
        }
        if self.r < 1 || self.r > self.t {
            return Err(Error::Config(format!("{self}: need 1 <= r <= t")));
        }
        if self.n < 1 {
            return Err(Error::Config(format!("{self}: n must be positive")));
        }
        Ok(())
    }

    /// The arrow vector of the input family (smallest entry lowered).
    pub fn input_vector(&self) -> Result<ArrowVector> {
        self.a.decrement_first()
    }

    /// `(a', q, n - r)`: the family consumed as `A` / `A_1`.
    pub fn input_family(&self) -> Result<(ArrowVector, usize, usize)> {
        let n = self.n.checked_sub(self.r).ok_or_else(|| {
            Error::Config(format!("{self}: r exceeds n"))
        })?;
        Ok((self.input_vector()?, self.q, n))
    }

    /// Family label in the usual `H(a_1, ..., a_s; q; n)` notation.
    pub fn family_label(&self) -> String {
        let parts: Vec<String> = self.a.entries().iter().map(|x| x.to_string()).collect();
        format!("H({}; {}; {})", parts.join(", "), self.q, self.n)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={} t={}", self.family_label(), self.r, self.t)
    }
}

impl fmt::Debug for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `a;q;n;r;t` with `a` comma separated, e.g. `2,2,7;8;19;2;3`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(Error::Config(format!("family spec {s:?} must look like a;q;n;r;t")));
        }
        let num = |i: usize, name: &str| -> Result<usize> {
            parts[i]
                .trim_start_matches(&format!("{name}="))
                .parse()
                .map_err(|_| Error::Config(format!("bad {name} in family spec {s:?}")))
        };
        let a: ArrowVector = parts[0].trim_start_matches("a=").parse()?;
        FamilySpec::new(a, num(1, "q")?, num(2, "n")?, num(3, "r")?, num(4, "t")?)
    }
}

/// Vertices adjacent to all others.
pub fn cone_vertices(g: &Graph) -> VertexSet {
    let all = g.all_mask();
    let bits = (0..g.order())
        .filter(|&v| g.row(v) | (1 << v) == all)
        .fold(0u64, |m, v| m | 1 << v);
    VertexSet::from_bits(bits, g.order())
}

pub fn cone_vertex_count(g: &Graph) -> usize {
    cone_vertices(g).len()
}

pub fn strip_cone(g: &Graph) -> Graph {
    g.delete_vertices(&cone_vertices(g))
}

/// For a single entry `a_1 ≤ n ≤ q - 1` the only maximal graph is `K_n`.
pub fn complete_base_family(a: &ArrowVector, q: usize, n: usize) -> Result<GraphSet> {
    match a.canonical().entries() {
        [a1] if *a1 <= n && n < q => Ok([Graph::complete(n)?].iter().collect()),
        _ => Err(Error::Config(format!(
            "complete base family needs a single entry a_1 <= n <= q - 1, got {a}, q = {q}, n = {n}"
        ))),
    }
}

/// Membership in `H_max^t(a; q; n)` with `α ≥ r`, checked directly.
pub fn in_maximal_family(g: &Graph, spec: &FamilySpec) -> bool {
    if g.order() != spec.n || has_clique(g, spec.q) || !is_plus_kt(g, spec.q) {
        return false;
    }
    let alpha = independence_number(g);
    (spec.r..=spec.t).contains(&alpha) && arrows(g, &spec.a)
}

fn descent_member(g: &Graph, a: &ArrowVector, q: usize, t: usize) -> bool {
    !has_clique(g, q)
        && is_plus_kt(g, q - 1)
        && independence_number(g) <= t
        && arrows(g, a)
}

/// All `(+K_{q-1})`-graphs `G` with `G →v a`, `ω(G) < q`, `α(G) ≤ t`
/// obtainable by deleting edges from members of `maximals`, up to
/// isomorphism. With `exclude_cone` only graphs without cone vertices are
/// returned.
///
/// Arrowing, `α ≤ t` and the `(+K_{q-1})` property all survive edge
/// addition, so a graph failing any of them has no qualifying spanning
/// subgraph and the branch is cut. Every qualifying subgraph of a seed is
/// reachable through qualifying intermediates.
pub fn plus_clique_descent(
    maximals: &GraphSet,
    a: &ArrowVector,
    q: usize,
    t: usize,
    exclude_cone: bool,
) -> GraphSet {
    assert!(q >= 2, "q must be at least 2");
    let mut levels: BTreeMap<usize, HashSet<CanonicalForm>> = BTreeMap::new();
    for f in maximals.forms() {
        if descent_member(f.graph(), a, q, t) {
            levels.entry(f.graph().size()).or_default().insert(f.clone());
        }
    }

    let mut out = GraphSet::new();
    while let Some((edges, current)) = levels.pop_last() {
        let current: Vec<CanonicalForm> = current.into_iter().collect();
        if edges > 0 {
            let candidates: HashSet<CanonicalForm> = current
                .par_iter()
                .fold(HashSet::new, |mut acc, f| {
                    let g = f.graph();
                    for (u, v) in g.edges() {
                        let h = g.without_edge(u, v);
                        if is_plus_kt(&h, q - 1) && independence_number(&h) <= t {
                            acc.insert(canonical_form(&h));
                        }
                    }
                    acc
                })
                .reduce(HashSet::new, |mut x, y| {
                    if x.len() < y.len() {
                        return y.into_iter().chain(x).collect();
                    }
                    x.extend(y);
                    x
                });
            let accepted: Vec<CanonicalForm> = candidates
                .into_par_iter()
                .filter(|f| arrows(f.graph(), a))
                .collect();
            levels.entry(edges - 1).or_default().extend(accepted);
        }
        for f in current {
            if !exclude_cone || cone_vertex_count(f.graph()) == 0 {
                out.insert_form(f);
            }
        }
    }
    out
}

/// An `r`-multiset of maximal `K_{q-1}`-free subsets of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMultiset {
    /// Non-decreasing indices into the host's subset family.
    pub indices: Vec<usize>,
    pub sets: Vec<VertexSet>,
}

/// Maximal `K_{q-1}`-free subsets of `h` with the multisets of size `r` that
/// satisfy:
/// (a) any two members (a repeated member paired with itself included)
///     intersect in a set containing `K_{q-2}`;
/// (b) for every nonempty sub-multiset `N'`, `α(h - ∪N') ≤ t - |N'|`.
pub fn valid_multisets(h: &Graph, q: usize, r: usize, t: usize) -> (Vec<VertexSet>, Vec<ExtensionMultiset>) {
    assert!(q >= 3, "q must be at least 3");
    let masks = maximal_kt_free_masks(h, q - 1);
    let tuples = valid_index_tuples(h, &masks, q, r, t);
    let n = h.order();
    let family: Vec<VertexSet> = masks.iter().map(|&m| VertexSet::from_bits(m, n)).collect();
    let multisets = tuples
        .into_iter()
        .map(|indices| ExtensionMultiset {
            sets: indices.iter().map(|&i| family[i]).collect(),
            indices,
        })
        .collect();
    (family, multisets)
}

fn valid_index_tuples(h: &Graph, masks: &[u64], q: usize, r: usize, t: usize) -> Vec<Vec<usize>> {
    let l = masks.len();
    let adj = h.rows();
    let all = h.all_mask();
    let comp = complement_rows(h);
    let mut alpha_memo: HashMap<u64, usize> = HashMap::new();
    let mut alpha_outside = |u: u64| -> usize {
        *alpha_memo.entry(u).or_insert_with(|| clique_number_in(&comp, all & !u))
    };

    // pair[i][j]: K_{q-2} inside M_i ∩ M_j
    let mut pair = vec![vec![false; l]; l];
    for i in 0..l {
        for j in i..l {
            let ok = has_clique_in(adj, masks[i] & masks[j], q - 2);
            pair[i][j] = ok;
            pair[j][i] = ok;
        }
    }
    let singles: Vec<bool> = masks
        .iter()
        .map(|&m| t >= 1 && alpha_outside(m) < t)
        .collect();

    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(r);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        k: usize,
        start: usize,
        r: usize,
        t: usize,
        masks: &[u64],
        pair: &[Vec<bool>],
        singles: &[bool],
        alpha_outside: &mut dyn FnMut(u64) -> usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == r {
            out.push(cur.clone());
            return;
        }
        for i in start..masks.len() {
            if !singles[i] || !cur.iter().all(|&j| pair[j][i]) {
                continue;
            }
            // sub-multisets containing the new position k
            let ok = (0u32..1 << k).all(|sub| {
                let size = sub.count_ones() as usize + 1;
                if size == 1 {
                    return true;
                }
                if size > t {
                    return false;
                }
                let union = Bits(sub as u64).fold(masks[i], |u, p| u | masks[cur[p]]);
                alpha_outside(union) + size <= t
            });
            if !ok {
                continue;
            }
            cur.push(i);
            rec(k + 1, i, r, t, masks, pair, singles, alpha_outside, cur, out);
            cur.pop();
        }
    }
    rec(0, 0, r, t, masks, &pair, &singles, &mut alpha_outside, &mut cur, &mut out);
    out
}

/// `G(N)`: `h` plus `r` new pairwise non-adjacent vertices, the `j`-th
/// adjacent to exactly the `j`-th member of `N`.
pub fn extend(h: &Graph, multiset: &ExtensionMultiset) -> Result<Graph> {
    let mut g = h.clone();
    for s in &multiset.sets {
        g = g.with_vertex(&VertexSet::from_bits(s.bits(), g.order()))?;
    }
    Ok(g)
}

fn extend_masks(h: &Graph, neighborhoods: &[u64]) -> Result<Graph> {
    let mut g = h.clone();
    for &m in neighborhoods {
        g = g.with_vertex(&VertexSet::from_bits(m, g.order()))?;
    }
    Ok(g)
}

/// Extension over a set of hosts: construct `G(N)`, keep maximal
/// `K_q`-free results, reject isomorphs, keep those arrowing `spec.a`.
pub fn extend_hosts(hosts: &GraphSet, spec: &FamilySpec) -> Result<GraphSet> {
    let hosts: Vec<&CanonicalForm> = hosts.forms().collect();
    let q = spec.q;
    let built: Result<Vec<HashSet<CanonicalForm>>> = hosts
        .par_iter()
        .map(|f| {
            let h = f.graph();
            let masks = maximal_kt_free_masks(h, q - 1);
            let mut found = HashSet::new();
            for tuple in valid_index_tuples(h, &masks, q, spec.r, spec.t) {
                let nbs: Vec<u64> = tuple.iter().map(|&i| masks[i]).collect();
                let g = extend_masks(h, &nbs)?;
                debug_assert!(!has_clique(&g, q));
                if is_plus_kt(&g, q) {
                    found.insert(canonical_form(&g));
                }
            }
            Ok(found)
        })
        .collect();
    let mut candidates: HashSet<CanonicalForm> = HashSet::new();
    for s in built? {
        candidates.extend(s);
    }
    let kept: Vec<CanonicalForm> = candidates
        .into_par_iter()
        .filter(|f| arrows(f.graph(), &spec.a))
        .collect();
    Ok(kept.into_iter().collect())
}

fn check_orders(set: &GraphSet, n: usize, what: &str, spec: &FamilySpec) -> Result<()> {
    if let Some(f) = set.forms().find(|f| f.graph().order() != n) {
        return Err(Error::Config(format!(
            "{spec}: {what} must contain {n}-vertex graphs, found {} vertices",
            f.graph().order()
        )));
    }
    Ok(())
}

/// From `A = H_max^t(a'; q; n - r)` (complete), returns every
/// member of `H_max^t(a; q; n)` with `α ≥ r`.
pub fn run_algorithm_1(spec: &FamilySpec, a_in: &GraphSet) -> Result<GraphSet> {
    spec.validate()?;
    let (a_prime, q, m) = spec.input_family()?;
    check_orders(a_in, m, "A", spec)?;
    let hosts = plus_clique_descent(a_in, &a_prime, q, spec.t, false);
    extend_hosts(&hosts, spec)
}

/// The coned part of [`run_algorithm_2`]: graphs of the form
/// `K̄_{r+1} + H` and `K_1 + H` obtained straight from the inputs.
pub fn coned_outputs(spec: &FamilySpec, a1: &GraphSet, a2: &GraphSet) -> Result<GraphSet> {
    let mut out = GraphSet::new();
    if spec.t > spec.r {
        let independent = Graph::empty(spec.r + 1)?;
        for f in a1.forms() {
            let g = f.graph();
            if cone_vertex_count(g) != 1 || !arrows(g, &spec.a) {
                continue;
            }
            let h = strip_cone(g);
            let joined = independent.join(&h)?;
            debug_assert!(in_maximal_family(&joined, spec), "{joined} (independent join) is not a member");
            out.insert(&joined);
        }
    }
    let apex = Graph::complete(1)?;
    for f in a2.forms() {
        let h = f.graph();
        if independence_number(h) < spec.r {
            continue;
        }
        let joined = apex.join(h)?;
        if arrows(&joined, &spec.a) {
            debug_assert!(in_maximal_family(&joined, spec), "{joined} (apex join) is not a member");
            out.insert(&joined);
        }
    }
    Ok(out)
}

/// The cone-vertex variant. `A_1 = H_max^t(a'; q; n - r)` and
/// `A_2 = H_max^t(a'; q - 1; n - 1)`, both complete. Same output as
/// [`run_algorithm_1`], with the descent restricted to cone-free hosts.
pub fn run_algorithm_2(spec: &FamilySpec, a1: &GraphSet, a2: &GraphSet) -> Result<GraphSet> {
    spec.validate()?;
    let (a_prime, q, m) = spec.input_family()?;
    check_orders(a1, m, "A1", spec)?;
    check_orders(a2, spec.n - 1, "A2", spec)?;
    let hosts = plus_clique_descent(a1, &a_prime, q, spec.t, true);
    let extended = extend_hosts(&hosts, spec)?;
    Ok(extended.merge(coned_outputs(spec, a1, a2)?))
}
