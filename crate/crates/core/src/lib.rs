//! Signless Laplacian Estrada index (SLEE) toolkit.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: small simple graphs (n ≤ 32) stored as one bitmask per row,
//!   graph6 I/O, structural queries and graph surgery.
//! * [`spectra`]: adjacency / Laplacian / signless Laplacian matrices, a
//!   cyclic Jacobi eigensolver, the Estrada-type indices and exact spectral
//!   moments.
//! * [`walks`]: semi-edge walk enumeration, exact walk counts and the
//!   walk-count dominance comparator.
//! * [`families`]: the extremal graph families (paths, cliques, `K_n − e`,
//!   the diameter family `H(d, j)` and the cut-vertex family `G(n, r)`).
//! * [`search`]: exhaustive labeled sweeps and finite-scale verifiers for
//!   the extremal results.

pub mod error;
pub mod families;
pub mod graph;
pub mod search;
pub mod spectra;
pub mod walks;

pub use error::{Error, Result};
pub use graph::Graph;
