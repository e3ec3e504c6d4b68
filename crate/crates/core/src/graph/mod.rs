//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense labels `0..n`. Each adjacency row is a single `u32`
//! bitmask, so a [`Graph`] is a small `Copy` value and the hot loops of the
//! exhaustive sweeps never allocate.

mod graph6;
mod iso;
mod structure;
mod surgery;

use std::fmt;

use crate::error::{Error, Result};

pub use graph6::{parse_graph6, write_graph6};
pub use iso::{are_isomorphic, isomorphism_classes};
pub use structure::{Distance, StructuralSummary};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds the labeled graph whose edge set is selected by `mask` over
    /// `pairs` (bit `b` of `mask` selects `pairs[b]`). Used by the sweeps.
    pub(crate) fn from_pair_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&n));
        let mut adj = [0u32; MAX_ORDER];
        let mut bits = mask;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (u, v) = pairs[b];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Graph { n, adj }
    }

    /// `rows` may be shorter than `n`; missing rows are empty.
    pub(crate) fn from_rows(n: usize, rows: &[u32]) -> Self {
        let mut adj = [0u32; MAX_ORDER];
        adj[..rows.len()].copy_from_slice(rows);
        Graph { n, adj }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    /// Bitmask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !((2u32 << u).wrapping_sub(1))).map(move |v| (u, v)))
    }

    /// Vertex pairs `(u, v)`, `u < v`, that are not edges.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ((u + 1)..self.n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// `G + uv`.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = *self;
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// `G − uv`.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = *self;
        g.delete_edge(u, v)?;
        Ok(g)
    }

    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    /// Proper 2-colouring test.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        let mut stack = Vec::with_capacity(self.n);
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::param(format!(
                "permutation has length {} but graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u32;
        for &p in perm {
            self.check_vertex(p)?;
            if seen >> p & 1 == 1 {
                return Err(Error::param("relabeling is not a permutation"));
            }
            seen |= 1 << p;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1 << perm[v];
            g.adj[perm[v]] |= 1 << perm[u];
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

/// Iterator over the set bit positions of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_orders() {
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 0);
        assert_eq!(Graph::empty(1).unwrap().order(), 1);
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
        assert_eq!(Graph::empty(33), Err(Error::OrderTooLarge(33)));
        assert!(Graph::empty(32).is_ok());
    }

    #[test]
    fn edge_edits() {
        let k2 = Graph::empty(2).unwrap().with_edge(0, 1).unwrap();
        assert_eq!(k2.size(), 1);
        assert_eq!(k2.with_edge(0, 1), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(k2.with_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(k2.with_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            k2.with_edge(0, 2),
            Err(Error::VertexOutOfRange { vertex: 2, order: 2 })
        );

        let k3 = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let p3 = k3.without_edge(0, 1).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert_eq!(p3.without_edge(0, 1), Err(Error::MissingEdge(0, 1)));
        // other structure untouched
        assert_eq!(k3.size(), 3);
    }

    #[test]
    fn edges_and_non_edges_partition_pairs() {
        let g = Graph::from_edges(5, [(0, 4), (1, 2), (3, 4)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 4), (1, 2), (3, 4)]);
        assert_eq!(g.non_edges().count() + e.len(), 10);
        let full = Graph::from_edges(32, [(0, 31)]).unwrap();
        assert_eq!(full.edges().collect::<Vec<_>>(), vec![(0, 31)]);
        assert_eq!(full.vertex_mask(), u32::MAX);
    }

    #[test]
    fn bipartite_by_two_colouring() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(c4.is_bipartite());
        assert!(!c5.is_bipartite());
        assert!(Graph::empty(4).unwrap().is_bipartite());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(g.relabeled(&[0, 0, 1]).is_err());
        assert!(g.relabeled(&[0, 1]).is_err());
        let h = g.relabeled(&[2, 0, 1]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }
}
