use serde::Serialize;

use super::{bits, Graph};

/// A graph distance that may be infinite (different components).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralSummary {
    pub connected: bool,
    pub diameter: Distance,
    pub cut_vertices: Vec<usize>,
    pub eccentricities: Vec<Distance>,
}

impl Graph {
    /// Breadth-first layers from `source`, as bitmasks. `layers[0]` is `{source}`.
    pub(crate) fn bfs_layers(&self, source: usize) -> Vec<u32> {
        let mut seen = 1u32 << source;
        let mut frontier = seen;
        let mut layers = vec![frontier];
        loop {
            let mut next = 0u32;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            if next == 0 {
                return layers;
            }
            seen |= next;
            layers.push(next);
            frontier = next;
        }
    }

    /// Distances from `source`; unreachable vertices are `Infinite`.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        for (d, layer) in self.bfs_layers(source).into_iter().enumerate() {
            for v in bits(layer) {
                dist[v] = Distance::Finite(d);
            }
        }
        dist
    }

    /// Mask of the vertices reachable from `source` inside `allowed`.
    fn reach_within(&self, source: usize, allowed: u32) -> u32 {
        let mut seen = 1u32 << source;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u32;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Number of connected components of the subgraph induced by `allowed`.
    pub(crate) fn components_within(&self, allowed: u32) -> usize {
        let mut left = allowed;
        let mut count = 0;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            left &= !self.reach_within(s, allowed);
            count += 1;
        }
        count
    }

    pub fn component_count(&self) -> usize {
        self.components_within(self.vertex_mask())
    }

    /// Eccentricity of `v`: greatest distance to any vertex.
    pub fn eccentricity(&self, v: usize) -> Distance {
        let layers = self.bfs_layers(v);
        let reached = layers.iter().fold(0, |acc, l| acc | l);
        if reached == self.vertex_mask() {
            Distance::Finite(layers.len() - 1)
        } else {
            Distance::Infinite
        }
    }

    pub fn diameter(&self) -> Distance {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .max()
            .expect("graphs have at least one vertex")
    }

    /// Articulation points by the depth-first lowpoint method, sorted ascending.
    pub fn cut_vertices(&self) -> Vec<usize> {
        const UNSEEN: usize = usize::MAX;
        let n = self.n;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut time = 0;

        // Explicit stack of (vertex, parent, remaining neighbours).
        let mut stack: Vec<(usize, usize, u32)> = Vec::with_capacity(n);
        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, UNSEEN, self.adj[root]));

            while let Some(top) = stack.last_mut() {
                let (v, parent, pending) = *top;
                if pending == 0 {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                    continue;
                }
                let w = pending.trailing_zeros() as usize;
                top.2 &= pending - 1;
                if disc[w] == UNSEEN {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, self.adj[w]));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    pub fn cut_vertex_count(&self) -> usize {
        self.cut_vertices().len()
    }

    pub fn structural_summary(&self) -> StructuralSummary {
        let eccentricities: Vec<Distance> = (0..self.n).map(|v| self.eccentricity(v)).collect();
        let diameter = *eccentricities.iter().max().expect("non-empty");
        StructuralSummary {
            connected: diameter != Distance::Infinite,
            diameter,
            cut_vertices: self.cut_vertices(),
            eccentricities,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn complete_graph_summary() {
        for n in 2..8 {
            let s = complete(n).structural_summary();
            assert!(s.connected);
            assert_eq!(s.diameter, Distance::Finite(1));
            assert!(s.cut_vertices.is_empty());
        }
        let k1 = complete(1).structural_summary();
        assert_eq!(k1.diameter, Distance::Finite(0));
    }

    #[test]
    fn path_summary() {
        for n in 2..10 {
            let s = path(n).structural_summary();
            assert_eq!(s.diameter, Distance::Finite(n - 1));
            assert_eq!(s.cut_vertices.len(), n - 2);
        }
        assert_eq!(path(4).cut_vertices(), vec![1, 2]);
        let ecc: Vec<_> = path(4).structural_summary().eccentricities.into_iter().map(|d| d.finite().unwrap()).collect();
        assert_eq!(ecc, vec![3, 2, 2, 3]);
    }

    #[test]
    fn disconnected_has_infinite_diameter() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let s = g.structural_summary();
        assert!(!s.connected);
        assert_eq!(s.diameter, Distance::Infinite);
        assert_eq!(s.cut_vertices, vec![1]);
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.distances_from(0)[4], Distance::Infinite);
    }

    #[test]
    fn root_cut_vertex_and_bowtie() {
        // two triangles sharing vertex 0
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(bowtie.cut_vertices(), vec![0]);
        // star rooted at the centre
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.cut_vertices(), vec![0]);
        // star whose DFS root is a leaf
        let star = Graph::from_edges(4, [(3, 1), (3, 2), (3, 0)]).unwrap();
        assert_eq!(star.cut_vertices(), vec![3]);
    }
}
