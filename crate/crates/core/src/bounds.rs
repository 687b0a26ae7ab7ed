//! Numeric bounds on vertex Folkman numbers `F_v(a_1, ..., a_s; q)`.
//!
//! Values that come from the literature live in [`KnownConstants`]; they are
//! data with a provenance string, never recomputed here.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arrowing::ArrowVector;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pipeline::StepReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FolkmanConstant {
    pub a: ArrowVector,
    pub q: usize,
    pub value: usize,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyConstant {
    pub s: usize,
    pub t: usize,
    pub value: usize,
    pub citation: String,
}

/// Read-only registry of established values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownConstants {
    #[serde(default)]
    pub folkman: Vec<FolkmanConstant>,
    #[serde(default)]
    pub ramsey: Vec<RamseyConstant>,
}

pub const BUILTIN_REGISTRY: &str = include_str!("../configs/known_constants.toml");

impl KnownConstants {
    pub fn builtin() -> KnownConstants {
        Self::from_toml_str(BUILTIN_REGISTRY).expect("bundled registry parses")
    }

    pub fn from_toml_str(text: &str) -> Result<KnownConstants> {
        let mut k: KnownConstants =
            toml::from_str(text).map_err(|e| Error::Registry(e.to_string()))?;
        for c in &mut k.folkman {
            c.a = c.a.canonical();
            if c.citation.trim().is_empty() {
                return Err(Error::Registry(format!("F_v({}; {}) has no citation", c.a.entries_text(), c.q)));
            }
        }
        if let Some(c) = k.ramsey.iter().find(|c| c.citation.trim().is_empty()) {
            return Err(Error::Registry(format!("R({}, {}) has no citation", c.s, c.t)));
        }
        Ok(k)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<KnownConstants> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml_str(&text)
    }

    pub fn folkman(&self, a: &ArrowVector, q: usize) -> Option<usize> {
        let a = a.canonical();
        self.folkman.iter().find(|c| c.a == a && c.q == q).map(|c| c.value)
    }

    /// `R(s, t)`, looked up symmetrically.
    pub fn ramsey(&self, s: usize, t: usize) -> Option<usize> {
        self.ramsey
            .iter()
            .find(|c| (c.s, c.t) == (s, t) || (c.s, c.t) == (t, s))
            .map(|c| c.value)
    }
}

/// `F_v(a; q)` exists iff `q > max a_i`.
pub fn exists_folkman(v: &ArrowVector, q: usize) -> bool {
    q > v.canonical().p()
}

/// `F_v(a; m) = m + p` (for `m ≥ p + 1`) and its unique extremal graph
/// `K_{m-p-1} + C̄_{2p+1}`.
#[derive(Clone, Debug)]
pub struct ExtremalValue {
    pub value: usize,
    pub extremal: Graph,
}

pub fn value_at_q_equals_m(v: &ArrowVector) -> Result<ExtremalValue> {
    let v = v.canonical();
    let (m, p) = (v.m(), v.p());
    if m < p + 1 {
        return Err(Error::Domain(format!("F_v({}; {m}) does not exist: m = {m} <= p = {p}", v.entries_text())));
    }
    let extremal = Graph::complete(m - p - 1)?.join(&Graph::cycle(2 * p + 1)?.complement())?;
    Ok(ExtremalValue { value: m + p, extremal })
}

/// All canonical vectors with the given `m` and `p`.
pub fn same_m_p_vectors(m: usize, p: usize) -> Result<Vec<ArrowVector>> {
    if p < 2 || m < p {
        return Err(Error::Domain(format!("need m >= p >= 2, got m = {m}, p = {p}")));
    }
    // partitions of m - 1 into parts b_i - 1 in 1..=p-1, one part equal to p - 1
    let mut out = Vec::new();
    let mut parts = vec![p - 1];
    fn rec(rest: usize, max: usize, parts: &mut Vec<usize>, out: &mut Vec<ArrowVector>) {
        if rest == 0 {
            let mut e: Vec<usize> = parts.iter().map(|x| x + 1).collect();
            e.sort_unstable();
            out.push(ArrowVector::new(e).expect("entries are at least 2"));
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            parts.push(part);
            rec(rest - part, part, parts, out);
            parts.pop();
        }
    }
    rec(m - 1 - (p - 1), p - 1, &mut parts, &mut out);
    out.sort();
    Ok(out)
}

/// For `G ∈ H(a; m - 1; n)` with `n < m + 3p`, `α(G) ≤ n - m - p`.
pub fn independence_upper_bound(v: &ArrowVector, n: usize) -> Option<usize> {
    let v = v.canonical();
    let (m, p) = (v.m(), v.p());
    (n < m + 3 * p).then(|| n.saturating_sub(m + p))
}

/// `F_v(2, 2, p; p + 1) + Σ_{i=3}^{m-p} α(i, p)` where `alphas` supplies
/// lower bounds on `α(i, p)`; missing entries default to 2.
pub fn composite_lower_bound(
    known: &KnownConstants,
    v: &ArrowVector,
    alphas: &BTreeMap<usize, usize>,
) -> Result<usize> {
    let v = v.canonical();
    let (m, p) = (v.m(), v.p());
    if m < p + 2 {
        return Err(Error::Domain(format!("{v}: need m >= p + 2, got m = {m}, p = {p}")));
    }
    let base_vec = ArrowVector::new(vec![2, 2, p])?;
    let base = known.folkman(&base_vec, p + 1).ok_or_else(|| {
        Error::Registry(format!("F_v({}; {}) is not in the registry", base_vec.entries_text(), p + 1))
    })?;
    Ok(base + (3..=m - p).map(|i| alphas.get(&i).copied().unwrap_or(2)).sum::<usize>())
}

/// `F_v(2_r, p; r + p - 1) = F_v(2_{r0}, p; r0 + p - 1) + r - r0` for `r ≥ r0`.
pub fn project_twos_sequence(r0: usize, base: usize, r: usize) -> Result<usize> {
    if r < r0 {
        return Err(Error::Domain(format!("projection needs r >= r0, got r = {r}, r0 = {r0}")));
    }
    Ok(base + r - r0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `F_v(a; q) ≥ bound`.
    Proven { bound: usize },
    Withheld { reason: String },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Proven { bound } => write!(f, "proven: F_v >= {bound}"),
            Verdict::Withheld { reason } => write!(f, "withheld: {reason}"),
        }
    }
}

/// The `α` values a member of `H(a; q; n)` could have, narrowed by the
/// independence bound (for `q = m - 1`), by deleting an independent set
/// (`n - α ≥ F_v(a'; q)` for every known decremented `a'`), and by Ramsey
/// floors (`α ≥ k` once `n ≥ R(q, k)`).
pub fn required_alpha_range(
    known: &KnownConstants,
    v: &ArrowVector,
    q: usize,
    n: usize,
) -> (usize, usize) {
    let v = v.canonical();
    let mut lo = if n >= q { 2 } else { 1 };
    for k in (lo + 1)..=n {
        match known.ramsey(q, k) {
            Some(r) if r <= n => lo = k,
            _ => {}
        }
    }
    let mut hi = n;
    if q + 1 == v.m() {
        if let Some(b) = independence_upper_bound(&v, n) {
            hi = hi.min(b);
        }
    }
    for i in 0..v.len() {
        if let Ok(reduced) = v.decrement(i) {
            if let Some(f) = known.folkman(&reduced, q) {
                hi = hi.min(n.saturating_sub(f));
            }
        }
    }
    (lo, hi)
}

/// Checks that every admissible `α` slice of `H_max(a; q; n)` was searched
/// and found empty. An empty family on `n` vertices means no smaller member
/// exists either (pad with isolated vertices), so `F_v(a; q) ≥ n + 1`.
pub fn verify_lower_bound_certificate(
    known: &KnownConstants,
    v: &ArrowVector,
    q: usize,
    n: usize,
    reports: &[StepReport],
) -> Verdict {
    let v = v.canonical();
    let (lo, hi) = required_alpha_range(known, &v, q, n);
    let relevant: Vec<&StepReport> = reports
        .iter()
        .filter(|r| r.spec.a == v && r.spec.q == q && r.spec.n == n)
        .collect();
    if let Some(r) = relevant.iter().find(|r| r.maximal > 0) {
        return Verdict::Withheld {
            reason: format!("{} found {} maximal graphs", r.spec, r.maximal),
        };
    }
    let missing: Vec<usize> = (lo..=hi)
        .filter(|&alpha| !relevant.iter().any(|r| r.spec.r <= alpha && alpha <= r.spec.t))
        .collect();
    if !missing.is_empty() {
        return Verdict::Withheld {
            reason: format!("no report covers alpha in {missing:?} (required {lo}..={hi})"),
        };
    }
    Verdict::Proven { bound: n + 1 }
}
