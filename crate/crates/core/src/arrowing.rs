//! Vertex arrowing `G →v (a_1, ..., a_s)`.
//!
//! `G` arrows `(a_1, ..., a_s)` when every `s`-coloring of `V(G)` has, for
//! some `i`, a monochromatic `a_i`-clique in color `i`. The search below looks
//! for the opposite: a partition `V_1, ..., V_s` with `ω(G[V_i]) < a_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::clique::{has_clique, has_clique_in};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The clique targets `(a_1, ..., a_s)`. Entries are positive; the canonical
/// form drops ones and sorts ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ArrowVector {
    entries: Vec<usize>,
}

impl ArrowVector {
    pub fn new(entries: impl Into<Vec<usize>>) -> Result<Self> {
        let entries = entries.into();
        if entries.contains(&0) {
            return Err(Error::Domain("arrow vector entries must be at least 1".into()));
        }
        Ok(ArrowVector { entries })
    }

    /// `(2_r, rest...)`, i.e. `r` twos followed by `rest`.
    pub fn with_twos(r: usize, rest: &[usize]) -> Result<Self> {
        let mut e = vec![2; r];
        e.extend_from_slice(rest);
        Self::new(e)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn canonical(&self) -> ArrowVector {
        let mut entries: Vec<usize> = self.entries.iter().copied().filter(|&a| a > 1).collect();
        entries.sort_unstable();
        ArrowVector { entries }
    }

    pub fn is_canonical(&self) -> bool {
        self.entries.iter().all(|&a| a >= 2) && self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    /// `m = Σ (a_i - 1) + 1`, the order of the smallest complete graph that arrows.
    pub fn m(&self) -> usize {
        self.entries.iter().map(|&a| a - 1).sum::<usize>() + 1
    }

    /// `p = max a_i`; 1 for vectors without entries above 1.
    pub fn p(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(1).max(1)
    }

    /// The vector with entry `i` lowered by one.
    pub fn decrement(&self, i: usize) -> Result<ArrowVector> {
        match self.entries.get(i) {
            Some(&a) if a >= 2 => {
                let mut entries = self.entries.clone();
                entries[i] -= 1;
                Ok(ArrowVector { entries })
            }
            Some(_) => Err(Error::Domain(format!("entry {i} of {self} is below 2"))),
            None => Err(Error::Domain(format!("{self} has no entry {i}"))),
        }
    }

    /// Canonical form with its smallest entry lowered by one. This is the
    /// input vector the extension algorithms consume: `(2,2,7) -> (2,7) -> (7)`.
    pub fn decrement_first(&self) -> Result<ArrowVector> {
        let c = self.canonical();
        if c.is_empty() {
            return Err(Error::Domain("cannot decrement an empty arrow vector".into()));
        }
        Ok(c.decrement(0)?.canonical())
    }
}

impl TryFrom<Vec<usize>> for ArrowVector {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        ArrowVector::new(v)
    }
}

impl From<ArrowVector> for Vec<usize> {
    fn from(v: ArrowVector) -> Self {
        v.entries
    }
}

impl ArrowVector {
    /// Entries without parentheses, e.g. `2, 2, 7`.
    pub fn entries_text(&self) -> String {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        parts.join(", ")
    }
}

impl fmt::Display for ArrowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries_text())
    }
}

impl fmt::Debug for ArrowVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `2 2 7`, `2,2,7` and `(2, 2, 7)`.
impl FromStr for ArrowVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Domain(format!("bad arrow vector entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ArrowVector::new(entries)
    }
}

/// `g →v v`. The empty vector arrows every graph.
pub fn arrows(g: &Graph, v: &ArrowVector) -> bool {
    if v.is_empty() {
        return true;
    }
    let c = v.canonical();
    match c.entries() {
        [] => true,
        [a] => has_clique(g, *a),
        _ => find_free_partition(g, v).is_none(),
    }
}

/// A witness that `g` does not arrow `v`: classes `V_i`, aligned with the
/// entries of `v`, covering `V(g)` with `ω(G[V_i]) < a_i`.
pub fn find_free_partition(g: &Graph, v: &ArrowVector) -> Option<Vec<VertexSet>> {
    if v.entries().iter().all(|&a| a == 1) {
        return None;
    }
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));

    // classes sharing a target are interchangeable; only the first empty one
    // of each group may receive a vertex
    let a = v.entries();
    let group_first: Vec<usize> =
        (0..a.len()).map(|i| (0..=i).find(|&j| a[j] == a[i]).unwrap()).collect();

    let mut search = PartitionSearch { adj: g.rows(), targets: a, group_first, order, classes: vec![0; a.len()] };
    if search.assign(0) {
        Some(search.classes.iter().map(|&m| VertexSet::from_bits(m, n)).collect())
    } else {
        None
    }
}

struct PartitionSearch<'a> {
    adj: &'a [u64],
    targets: &'a [usize],
    group_first: Vec<usize>,
    order: Vec<usize>,
    classes: Vec<u64>,
}

impl PartitionSearch<'_> {
    fn assign(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let u = self.order[k];
        let bit = 1u64 << u;
        let nb = self.adj[u];
        for i in 0..self.classes.len() {
            let cls = self.classes[i];
            if cls == 0 {
                let first = self.group_first[i];
                if (first..i).any(|j| self.targets[j] == self.targets[i] && self.classes[j] == 0) {
                    continue;
                }
            }
            // u may join class i unless it closes an a_i-clique there
            if has_clique_in(self.adj, cls & nb, self.targets[i] - 1) {
                continue;
            }
            self.classes[i] = cls | bit;
            if self.assign(k + 1) {
                return true;
            }
            self.classes[i] = cls;
        }
        false
    }
}

/// Evaluates `g - a →v (.., a_i - 1, ..)` directly. When `g →v v` this must
/// hold for every independent `a`.
pub fn arrows_after_deletion_check(
    g: &Graph,
    v: &ArrowVector,
    i: usize,
    a: &VertexSet,
) -> Result<bool> {
    if !g.is_independent(a) {
        return Err(Error::Domain(format!("{a:?} is not independent in {g}")));
    }
    let reduced = v.decrement(i)?;
    Ok(arrows(&g.delete_vertices(a), &reduced))
}
