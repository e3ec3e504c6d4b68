//! Graph spectra and the Estrada-type indices.
//!
//! `EE = Σ e^{λ_i}` over the adjacency spectrum, `LEE = Σ e^{μ_i}` over the
//! Laplacian spectrum and `SLEE = Σ e^{q_i}` over the signless Laplacian
//! spectrum. SLEE is available through two independent routes: the
//! eigenvalue sum ([`estrada_indices`], [`slee`]) and the exact moment series
//! `Σ_k T_k / k!` ([`slee_series`]).

mod jacobi;
mod matrix;
mod moments;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use jacobi::{eigenvalues, Spectrum, DEFAULT_EIGEN_TOL, MAX_SWEEPS};
pub use matrix::{build_matrix, MatrixKind, SymMatrix};
pub use moments::{moment_table, signless_laplacian_powers, IntMatrix, MomentTable};

pub const DEFAULT_SERIES_TOL: f64 = 1e-10;

/// Relative gap below which two SLEE values are treated as equal.
pub const SLEE_TIE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstradaIndices {
    #[serde(rename = "EE")]
    pub ee: f64,
    #[serde(rename = "LEE")]
    pub lee: f64,
    #[serde(rename = "SLEE")]
    pub slee: f64,
}

pub fn spectrum(g: &Graph, kind: MatrixKind, tol: f64) -> Result<Spectrum> {
    eigenvalues(&build_matrix(g, kind), tol)
}

fn exp_sum(s: &Spectrum) -> f64 {
    // ascending order: small terms first
    s.values.iter().rev().map(|v| v.exp()).sum()
}

pub fn estrada_indices(g: &Graph) -> Result<EstradaIndices> {
    estrada_indices_with_tol(g, DEFAULT_EIGEN_TOL)
}

pub fn estrada_indices_with_tol(g: &Graph, tol: f64) -> Result<EstradaIndices> {
    Ok(EstradaIndices {
        ee: exp_sum(&spectrum(g, MatrixKind::Adjacency, tol)?),
        lee: exp_sum(&spectrum(g, MatrixKind::Laplacian, tol)?),
        slee: exp_sum(&spectrum(g, MatrixKind::SignlessLaplacian, tol)?),
    })
}

/// SLEE through the signless Laplacian eigenvalues only.
pub fn slee(g: &Graph) -> Result<f64> {
    Ok(exp_sum(&spectrum(g, MatrixKind::SignlessLaplacian, DEFAULT_EIGEN_TOL)?))
}

/// `true` when `a` and `b` agree within [`SLEE_TIE_TOL`] relative.
pub fn slee_tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= SLEE_TIE_TOL * a.abs().max(b.abs())
}

/// SLEE as the truncated series `Σ_{k ≤ K} T_k / k!` with exact moments.
///
/// Every eigenvalue of `Q` is at most `q̄ = 2(n−1)`, so the tail after `K` is
/// bounded by `n·q̄^{K+1}/(K+1)! · 1/(1 − q̄/(K+2))` once `K + 2 > q̄`. The sum
/// stops at the first `K` where that bound drops below `tol`.
pub fn slee_series(g: &Graph, tol: f64) -> Result<f64> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let n = g.order();
    let q_bar = 2.0 * (n as f64 - 1.0);

    let mut power = IntMatrix::identity(n);
    let mut factorial = BigUint::one();
    let mut sum = 0.0;
    // n·q̄^{K+1}/(K+1)!, updated incrementally
    let mut head = n as f64;
    let mut k = 0usize;
    loop {
        sum += moments::ratio_to_f64(&power.trace(), &factorial);
        head *= q_bar / (k as f64 + 1.0);
        let ratio = q_bar / (k as f64 + 2.0);
        if ratio < 1.0 && head / (1.0 - ratio) < tol {
            return Ok(sum);
        }
        k += 1;
        power = power.mul_signless_laplacian(g);
        factorial *= BigUint::from(k);
    }
}
