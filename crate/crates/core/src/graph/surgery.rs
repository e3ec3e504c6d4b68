use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

impl Graph {
    /// Coalescence `G(x) ∘ H(y)`: identifies `x` of `self` with `y` of `other`.
    pub fn coalesce(&self, x: usize, other: &Graph, y: usize) -> Result<Graph> {
        self.coalesce_mapped(x, other, y).map(|(g, _)| g)
    }

    /// Like [`Graph::coalesce`], also returning where each vertex of `other`
    /// landed. Vertex `y` maps to `x`; the remaining vertices of `other` are
    /// appended after `self`'s vertices in increasing label order.
    pub fn coalesce_mapped(&self, x: usize, other: &Graph, y: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(x)?;
        other.check_vertex(y)?;
        let total = self.order() + other.order() - 1;
        if total > MAX_ORDER {
            return Err(Error::OrderTooLarge(total));
        }
        let mut map = Vec::with_capacity(other.order());
        let mut next = self.order();
        for w in 0..other.order() {
            if w == y {
                map.push(x);
            } else {
                map.push(next);
                next += 1;
            }
        }
        let mut g = Graph::from_rows(total, self.rows());
        for (a, b) in other.edges() {
            g.insert_edge(map[a], map[b])?;
        }
        Ok((g, map))
    }

    /// Hangs a path of `m` new vertices off `x`. The new vertices are
    /// `n, n+1, .., n+m−1`, with `n` adjacent to `x`.
    pub fn attach_pendent_path(&self, x: usize, m: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        let total = self.order() + m;
        if total > MAX_ORDER {
            return Err(Error::OrderTooLarge(total));
        }
        let mut g = Graph::from_rows(total, self.rows());
        let mut prev = x;
        for v in self.order()..total {
            g.insert_edge(prev, v)?;
            prev = v;
        }
        Ok(g)
    }
}
