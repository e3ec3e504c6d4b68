//! Exact powers of the signless Laplacian.
//!
//! Entry `(x, y)` of `Q^k` counts the semi-edge walks of length `k` from `x`
//! to `y`, and `T_k = trace(Q^k)` is the k-th spectral moment. Entries grow
//! like `(2(n−1))^k`, so everything here is arbitrary precision.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::graph::Graph;

/// Square matrix of non-negative arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigUint>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigUint::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigUint::one();
        }
        IntMatrix { n, entries }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> BigUint {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.entries.chunks(self.n)
    }

    /// `self · Q(g)`, using `Q = D + A`: column `j` of the product is
    /// `deg(j)·P[·][j] + Σ_{l ~ j} P[·][l]`.
    pub fn mul_signless_laplacian(&self, g: &Graph) -> IntMatrix {
        let n = self.n;
        debug_assert_eq!(n, g.order());
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            for j in 0..n {
                let mut acc = &row[j] * BigUint::from(g.degree(j));
                for l in g.neighbors(j) {
                    acc += &row[l];
                }
                entries.push(acc);
            }
        }
        IntMatrix { n, entries }
    }
}

/// Exact `Q^k` for `k = 0..=k_max` and their traces `T_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentTable {
    pub k_max: usize,
    pub traces: Vec<BigUint>,
    pub power_entries: Vec<IntMatrix>,
}

impl MomentTable {
    pub fn power(&self, k: usize) -> &IntMatrix {
        &self.power_entries[k]
    }
}

pub fn moment_table(g: &Graph, k_max: usize) -> MomentTable {
    let powers = signless_laplacian_powers(g, k_max);
    MomentTable {
        k_max,
        traces: powers.iter().map(IntMatrix::trace).collect(),
        power_entries: powers,
    }
}

/// `[Q^0, Q^1, .., Q^k_max]`.
pub fn signless_laplacian_powers(g: &Graph, k_max: usize) -> Vec<IntMatrix> {
    let mut powers = Vec::with_capacity(k_max + 1);
    powers.push(IntMatrix::identity(g.order()));
    for k in 1..=k_max {
        let next = powers[k - 1].mul_signless_laplacian(g);
        powers.push(next);
    }
    powers
}

/// `num / den` as a float, also when either side exceeds the `f64` range.
pub(crate) fn ratio_to_f64(num: &BigUint, den: &BigUint) -> f64 {
    const KEEP: u64 = 1000;
    let bits = num.bits().max(den.bits());
    let shift = bits.saturating_sub(KEEP);
    let (n, d) = if shift > 0 {
        (num >> shift, den >> shift)
    } else {
        (num.clone(), den.clone())
    };
    n.to_f64().unwrap_or(f64::INFINITY) / d.to_f64().unwrap_or(f64::INFINITY)
}
