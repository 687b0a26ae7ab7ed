//! Canonical labeling by individualization and refinement.
//!
//! Every node of the search tree is an ordered equitable partition of the
//! vertices. Leaves (discrete partitions) define relabelings; the canonical
//! graph is the one with the lexicographically least row encoding among all
//! leaves. Leaves that reproduce the first or the best graph yield
//! automorphisms, which prune sibling branches lying in the same orbit of the
//! pointwise stabilizer of the current prefix.

use crate::graph::{Bits, Graph};

const MAX_GENERATORS: usize = 64;

/// Splits every cell by neighbor counts into each splitter cell until the
/// partition is equitable. Fragments are ordered by ascending count, so the
/// result depends only on the partition structure, not on vertex names.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut scratch: Vec<(u32, u64)> = Vec::with_capacity(64);
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let w = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let c = cells[i];
                if c & (c - 1) == 0 {
                    i += 1;
                    continue;
                }
                scratch.clear();
                let mut first = None;
                let mut uniform = true;
                for v in Bits(c) {
                    let k = (adj[v] & w).count_ones();
                    match first {
                        None => first = Some(k),
                        Some(f) if f != k => uniform = false,
                        _ => {}
                    }
                    scratch.push((k, 1u64 << v));
                }
                if uniform {
                    i += 1;
                    continue;
                }
                scratch.sort_unstable_by_key(|&(k, _)| k);
                let mut frags: Vec<u64> = Vec::new();
                let mut last = u32::MAX;
                for &(k, b) in &scratch {
                    if k != last {
                        frags.push(0);
                        last = k;
                    }
                    *frags.last_mut().unwrap() |= b;
                }
                let nf = frags.len();
                cells.splice(i..=i, frags);
                if s > i {
                    s += nf - 1;
                }
                i += nf;
                changed = true;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

/// Initial partition: vertices grouped by degree, ascending.
fn degree_partition(g: &Graph) -> Vec<u64> {
    let mut by_deg = [0u64; 65];
    for v in 0..g.order() {
        by_deg[g.degree(v)] |= 1 << v;
    }
    by_deg.into_iter().filter(|&m| m != 0).collect()
}

struct Leaf {
    path: Vec<usize>,
    labeling: Vec<usize>,
    rows: Vec<u64>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

enum Flow {
    Continue,
    /// Abandon everything below the node at this depth.
    JumpTo(usize),
}

impl Search<'_> {
    fn leaf_rows(&self, cells: &[u64]) -> (Vec<usize>, Vec<u64>) {
        let mut labeling = vec![0usize; self.n];
        for (i, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut out = 0u64;
            for u in Bits(row) {
                out |= 1 << labeling[u];
            }
            rows[labeling[v]] = out;
        }
        (labeling, rows)
    }

    fn common_prefix(&self, other: &[usize]) -> usize {
        self.path.iter().zip(other).take_while(|(a, b)| a == b).count()
    }

    /// `v -> other^{-1}(this(v))`, an automorphism when both leaves give the
    /// same graph.
    fn record_automorphism(&mut self, labeling: &[usize], other: &[usize]) {
        if self.generators.len() >= MAX_GENERATORS {
            return;
        }
        let mut inv = vec![0usize; self.n];
        for (v, &l) in other.iter().enumerate() {
            inv[l] = v;
        }
        let gamma: Vec<usize> = labeling.iter().map(|&l| inv[l]).collect();
        if gamma.iter().enumerate().any(|(v, &w)| v != w) {
            self.generators.push(gamma);
        }
    }

    fn visit_leaf(&mut self, cells: &[u64]) -> Flow {
        let (labeling, rows) = self.leaf_rows(cells);
        let Some(first) = &self.first else {
            let leaf = Leaf { path: self.path.clone(), labeling, rows };
            self.best = Some(Leaf { path: leaf.path.clone(), labeling: leaf.labeling.clone(), rows: leaf.rows.clone() });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if rows == first.rows {
            let other = first.labeling.clone();
            let depth = self.common_prefix(&first.path);
            self.record_automorphism(&labeling, &other);
            return Flow::JumpTo(depth);
        }
        let best = self.best.as_ref().unwrap();
        match rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let other = best.labeling.clone();
                let depth = self.common_prefix(&best.path);
                self.record_automorphism(&labeling, &other);
                Flow::JumpTo(depth)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf { path: self.path.clone(), labeling, rows });
                Flow::Continue
            }
            std::cmp::Ordering::Greater => Flow::Continue,
        }
    }

    /// Orbit representatives under generators fixing the current path pointwise.
    fn orbits(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.generators {
            if self.path.iter().any(|&v| g[v] != v) {
                continue;
            }
            for (v, &w) in g.iter().enumerate() {
                let a = find(&mut parent, v);
                let b = find(&mut parent, w);
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn explore(&mut self, cells: Vec<u64>) -> Flow {
        let Some(target) = target_cell(&cells) else {
            return self.visit_leaf(&cells);
        };
        let depth = self.path.len();
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        let mut seen_generators = usize::MAX;
        let mut orbit = Vec::new();
        for v in Bits(cell) {
            if !explored.is_empty() {
                if seen_generators != self.generators.len() {
                    orbit = self.orbits();
                    seen_generators = self.generators.len();
                }
                if explored.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << v);
            child.push(cell & !(1u64 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.adj, &mut child);

            self.path.push(v);
            let flow = self.explore(child);
            self.path.pop();
            explored.push(v);
            if let Flow::JumpTo(d) = flow {
                if d < depth {
                    return flow;
                }
            }
        }
        Flow::Continue
    }
}

/// First smallest non-singleton cell.
fn target_cell(cells: &[u64]) -> Option<usize> {
    let mut best: Option<(u32, usize)> = None;
    for (i, &c) in cells.iter().enumerate() {
        let k = c.count_ones();
        if k > 1 && best.is_none_or(|(bk, _)| k < bk) {
            best = Some((k, i));
        }
    }
    best.map(|(_, i)| i)
}

/// Returns the canonical relabeling (`labeling[v]` is the new index of `v`)
/// together with the canonical graph.
pub(crate) fn canonical_labeling(g: &Graph) -> (Vec<usize>, Graph) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), g.clone());
    }
    let mut cells = degree_partition(g);
    refine(g.rows(), &mut cells);
    let mut search = Search {
        adj: g.rows(),
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        path: Vec::new(),
    };
    search.explore(cells);
    let best = search.best.expect("search visits at least one leaf");
    (best.labeling, Graph::from_adjacency_unchecked(best.rows))
}

/// Automorphism group generators discovered while labeling `g` (not
/// necessarily a full generating set once the cap is hit).
#[cfg(test)]
pub(crate) fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    let mut cells = degree_partition(g);
    refine(g.rows(), &mut cells);
    let mut search = Search { adj: g.rows(), n: g.order(), first: None, best: None, generators: Vec::new(), path: Vec::new() };
    if g.order() > 0 {
        search.explore(cells);
    }
    search.generators
}
