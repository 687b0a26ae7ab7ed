//! Compact immutable simple graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbor mask, so vertex-set algebra is plain
//! bit arithmetic. Every constructor and edit returns a fresh value; the
//! symmetry and no-loop invariants are checked in debug builds.

mod graph6;
mod vertex_set;

use std::fmt;

pub use graph6::{read_graph6_file, write_graph6_file};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_capacity(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_capacity(n)?;
        let all = full_mask(n);
        let adj = (0..n).map(|v| all & !(1u64 << v)).collect();
        Ok(Graph { n, adj })
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Builds a graph from an edge list. Loops are rejected, repeated edges
    /// are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_capacity(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Edit { u, v, reason: "endpoint out of range" });
            }
            if u == v {
                return Err(Error::Edit { u, v, reason: "loops are not allowed" });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from raw neighbor masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_capacity(n)?;
        let all = full_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !all != 0 {
                return Err(Error::Domain(format!("vertex {v} has neighbors outside 0..{n}")));
            }
            if row & (1 << v) != 0 {
                return Err(Error::Domain(format!("vertex {v} has a loop")));
            }
            for u in Bits(row) {
                if adj[u] & (1 << v) == 0 {
                    return Err(Error::Domain(format!("adjacency not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Constructor for callers that maintain the invariants themselves.
    #[inline]
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        let g = Graph { n: adj.len(), adj };
        g.debug_check();
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v], self.n)
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub(crate) fn all_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.all_mask();
        (0..self.n).flat_map(move |u| {
            Bits(!self.adj[u] & all & !full_mask(u + 1)).map(move |v| (u, v))
        })
    }

    /// `G1 + G2`: disjoint union plus every edge between the two parts.
    /// The vertices of `other` are shifted past those of `self`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let left = full_mask(self.n);
        let right = full_mask(n) & !left;
        let mut adj = Vec::with_capacity(n);
        adj.extend(self.adj.iter().map(|&r| r | right));
        adj.extend(other.adj.iter().map(|&r| (r << self.n) | left));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Disjoint union, `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_capacity(n)?;
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn complement(&self) -> Graph {
        let all = self.all_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & all & !(1u64 << v))
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending order of the
    /// original indices.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        self.induced_mask(s.bits() & self.all_mask())
    }

    pub(crate) fn induced_mask(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = Bits(mask).collect();
        let adj = keep
            .iter()
            .map(|&v| compress(self.adj[v] & mask, mask))
            .collect();
        Graph::from_adjacency_unchecked(adj)
    }

    /// `G - A`, with the remaining vertices compacted in ascending order.
    pub fn delete_vertices(&self, a: &VertexSet) -> Graph {
        self.induced_mask(self.all_mask() & !a.bits())
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::Edit { u, v, reason: "edge already present" });
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::Edit { u, v, reason: "edge not present" });
        }
        Ok(self.without_edge(u, v))
    }

    #[inline]
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { n: self.n, adj }
    }

    /// Appends one vertex adjacent to exactly `neighbors`.
    pub fn with_vertex(&self, neighbors: &VertexSet) -> Result<Graph> {
        let n = self.n + 1;
        check_capacity(n)?;
        let nb = neighbors.bits() & self.all_mask();
        let mut adj = Vec::with_capacity(n);
        adj.extend(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, &r)| if nb & (1 << v) != 0 { r | (1 << self.n) } else { r }),
        );
        adj.push(nb);
        Ok(Graph::from_adjacency_unchecked(adj))
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the vertex count");
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut out = 0u64;
            for u in Bits(row) {
                out |= 1 << perm[u];
            }
            adj[perm[v]] = out;
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let m = s.bits();
        Bits(m).all(|v| self.adj[v] & m == 0)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Edit { u, v, reason: "endpoint out of range" });
        }
        if u == v {
            return Err(Error::Edit { u, v, reason: "loops are not allowed" });
        }
        Ok(())
    }

    #[inline]
    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            let all = self.all_mask();
            for (v, &row) in self.adj.iter().enumerate() {
                debug_assert_eq!(row & !all, 0, "neighbor of {v} out of range");
                debug_assert_eq!(row & (1 << v), 0, "loop at {v}");
                for u in Bits(row) {
                    debug_assert!(self.adj[u] & (1 << v) != 0, "asymmetric edge ({v}, {u})");
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity { requested: n })
    } else {
        Ok(())
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits, preserving order.
#[inline]
fn compress(x: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (i, v) in Bits(mask).enumerate() {
        if x & (1 << v) != 0 {
            out |= 1 << i;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_counts_cross_edges() {
        let g = Graph::empty(3).unwrap().join(&Graph::complete(2).unwrap()).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 7);
        let k2 = Graph::complete(1).unwrap().join(&Graph::complete(1).unwrap()).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
    }

    #[test]
    fn join_with_empty_is_identity() {
        let c7bar = Graph::cycle(7).unwrap().complement();
        assert_eq!(Graph::empty(0).unwrap().join(&c7bar).unwrap(), c7bar);
    }

    #[test]
    fn join_keeps_operands_induced() {
        let a = Graph::cycle(5).unwrap();
        let b = Graph::path(4).unwrap();
        let j = a.join(&b).unwrap();
        assert_eq!(j.induced(&VertexSet::from_iter(9, 0..5)), a);
        assert_eq!(j.induced(&VertexSet::from_iter(9, 5..9)), b);
        assert_eq!(j.size(), a.size() + b.size() + 20);
    }

    #[test]
    fn join_capacity() {
        let big = Graph::empty(40).unwrap();
        assert!(matches!(big.join(&big), Err(Error::Capacity { requested: 80 })));
    }

    #[test]
    fn complement_basics() {
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.complement().size(), 14);
        assert_eq!(c7.complement().complement(), c7);
        assert_eq!(Graph::complete(6).unwrap().complement(), Graph::empty(6).unwrap());
    }

    #[test]
    fn induced_and_delete() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.induced(&VertexSet::from_iter(5, [0, 1, 2])), Graph::path(3).unwrap());
        assert_eq!(c5.induced(&c5.vertices()), c5);
        // removing vertex 0 leaves 1-2-3-4
        assert_eq!(c5.delete_vertices(&VertexSet::from_iter(5, [0])), Graph::path(4).unwrap());
        assert_eq!(c5.delete_vertices(&VertexSet::empty(5)), c5);
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.induced(&VertexSet::from_iter(5, [1, 3, 4])), Graph::complete(3).unwrap());
        assert_eq!(k5.delete_vertices(&VertexSet::from_iter(5, [2])), Graph::complete(4).unwrap());
    }

    #[test]
    fn edge_edits() {
        let e2 = Graph::empty(2).unwrap();
        let k2 = e2.add_edge(0, 1).unwrap();
        assert_eq!(k2, Graph::complete(2).unwrap());
        assert_eq!(k2.remove_edge(1, 0).unwrap(), e2);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.remove_edge(0, 1).unwrap().size(), 2);
        assert!(matches!(k3.add_edge(0, 1), Err(Error::Edit { .. })));
        assert!(matches!(e2.remove_edge(0, 1), Err(Error::Edit { .. })));
        assert!(matches!(e2.add_edge(1, 1), Err(Error::Edit { .. })));
        assert!(matches!(e2.add_edge(0, 5), Err(Error::Edit { .. })));
    }

    #[test]
    fn from_adjacency_rejects_bad_rows() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_adjacency(vec![0b100, 0]).is_err());
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn with_vertex_and_permute() {
        let p3 = Graph::path(3).unwrap();
        let g = p3.with_vertex(&VertexSet::from_iter(3, [0, 2])).unwrap();
        assert_eq!(g, Graph::cycle(4).unwrap());
        let perm = [2, 0, 1, 3];
        let h = g.permute(&perm);
        assert_eq!(h.size(), 4);
        for (u, v) in g.edges() {
            assert!(h.has_edge(perm[u], perm[v]));
        }
    }
}
