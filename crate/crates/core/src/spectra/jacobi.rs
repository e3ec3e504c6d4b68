//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.
//!
//! Each sweep visits every `(p, q)` pair above the diagonal in row order and
//! applies the plane rotation that zeroes `a[p][q]`. The iteration stops as
//! soon as every off-diagonal magnitude is below the tolerance.

use serde::Serialize;

use super::matrix::{MatrixKind, SymMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_EIGEN_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    /// Eigenvalues, largest first.
    pub values: Vec<f64>,
    pub matrix_kind: Option<MatrixKind>,
    /// Largest off-diagonal magnitude when the iteration stopped.
    pub residual: f64,
}

pub fn eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let n = m.dim();
    let mut a = m.clone();
    let a = a.entries_mut();

    let mut residual = max_off_diagonal(a, n);
    let mut sweeps = 0;
    while residual >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(a, n, p, q);
            }
        }
        sweeps += 1;
        residual = max_off_diagonal(a, n);
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        values,
        matrix_kind: m.kind(),
        residual,
    })
}

fn max_off_diagonal(a: &[f64], n: usize) -> f64 {
    let mut max = 0.0f64;
    for p in 0..n {
        for q in (p + 1)..n {
            max = max.max(a[p * n + q].abs());
        }
    }
    max
}

/// Annihilates `a[p][q]` (p < q) by a similarity rotation in the (p, q) plane.
#[inline]
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    // smaller root of t² + 2θt − 1 = 0, so the rotation angle is at most π/4
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
}
