use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which graph matrix a spectrum belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    /// `A`
    Adjacency,
    /// `L = D − A`
    Laplacian,
    /// `Q = D + A`
    SignlessLaplacian,
}

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<f64>,
    kind: Option<MatrixKind>,
}

impl SymMatrix {
    /// Checks symmetry and finiteness.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::param("matrix must be non-empty"));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::param(format!("row {i} has length {}, expected {n}", row.len())));
            }
            entries.extend_from_slice(row);
        }
        let m = SymMatrix {
            n,
            entries,
            kind: None,
        };
        for i in 0..n {
            for j in 0..n {
                let a = m.get(i, j);
                if !a.is_finite() {
                    return Err(Error::param(format!("entry ({i}, {j}) is not finite")));
                }
                if a != m.get(j, i) {
                    return Err(Error::param(format!("entries ({i}, {j}) and ({j}, {i}) differ")));
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn kind(&self) -> Option<MatrixKind> {
        self.kind
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [f64] {
        &mut self.entries
    }
}

/// `A`, `L = D − A` or `Q = D + A` of `g`.
pub fn build_matrix(g: &Graph, kind: MatrixKind) -> SymMatrix {
    let n = g.order();
    let mut entries = vec![0.0; n * n];
    let (diag, off) = match kind {
        MatrixKind::Adjacency => (false, 1.0),
        MatrixKind::Laplacian => (true, -1.0),
        MatrixKind::SignlessLaplacian => (true, 1.0),
    };
    for v in 0..n {
        if diag {
            entries[v * n + v] = g.degree(v) as f64;
        }
        for w in g.neighbors(v) {
            entries[v * n + w] = off;
        }
    }
    SymMatrix {
        n,
        entries,
        kind: Some(kind),
    }
}
