//! Semi-edge walks and walk-count dominance.
//!
//! A semi-edge walk of length `k` is `v_1 e_1 v_2 .. e_k v_{k+1}` where both
//! `v_i` and `v_{i+1}` are endpoints of `e_i`, not necessarily distinct: at
//! each step the walk picks an incident edge and then either stays or crosses
//! it. The number of such walks from `x` to `y` is `(Q^k)_{xy}`.
//!
//! Dominance `(G; v) ⪯ (G; u)` asks that `|SW_k(G; v)| ≤ |SW_k(G; u)|` for
//! every `k`. Here it is checked up to a finite depth and the verdict is a
//! finite-depth certificate, not a proof.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{signless_laplacian_powers, IntMatrix};

/// Enumeration is exponential; these caps fail loudly instead of truncating.
pub const ENUM_MAX_ORDER: usize = 8;
pub const ENUM_MAX_DEPTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SemiEdgeWalk {
    pub vertices: Vec<usize>,
    /// Edges as `(min, max)` endpoint pairs.
    pub edges: Vec<(usize, usize)>,
}

impl SemiEdgeWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Checks the walk against `g`: each edge exists and has both adjacent
    /// walk vertices among its endpoints.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.vertices.len() == self.edges.len() + 1
            && self.edges.iter().enumerate().all(|(i, &(a, b))| {
                let ends = [a, b];
                g.has_edge(a, b) && ends.contains(&self.vertices[i]) && ends.contains(&self.vertices[i + 1])
            })
    }
}

fn check_enum_caps(g: &Graph, k: usize) -> Result<()> {
    if g.order() > ENUM_MAX_ORDER || k > ENUM_MAX_DEPTH {
        return Err(Error::EnumerationCap {
            order: g.order(),
            depth: k,
            max_order: ENUM_MAX_ORDER,
            max_depth: ENUM_MAX_DEPTH,
        });
    }
    Ok(())
}

/// Every semi-edge walk of length `k` from `x` to `y`, by explicit recursion.
pub fn enumerate_walks(g: &Graph, x: usize, y: usize, k: usize) -> Result<Vec<SemiEdgeWalk>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    check_enum_caps(g, k)?;
    let mut out = Vec::new();
    let mut walk = SemiEdgeWalk {
        vertices: vec![x],
        edges: Vec::with_capacity(k),
    };
    extend_walk(g, y, k, &mut walk, &mut out);
    Ok(out)
}

fn extend_walk(g: &Graph, target: usize, remaining: usize, walk: &mut SemiEdgeWalk, out: &mut Vec<SemiEdgeWalk>) {
    let here = *walk.vertices.last().expect("walk has a start vertex");
    if remaining == 0 {
        if here == target {
            out.push(walk.clone());
        }
        return;
    }
    for w in g.neighbors(here) {
        walk.edges.push((here.min(w), here.max(w)));
        // stay on `here`, or cross to `w`
        for next in [here, w] {
            walk.vertices.push(next);
            extend_walk(g, target, remaining - 1, walk, out);
            walk.vertices.pop();
        }
        walk.edges.pop();
    }
}

/// `Q^k`: entry `(x, y)` is `|SW_k(G; x, y)|`.
pub fn walk_counts(g: &Graph, k: usize) -> IntMatrix {
    signless_laplacian_powers(g, k).pop().expect("k + 1 powers")
}

/// `|SW_k(G; x, [e])|`: closed walks at `x` using edge `e` at least once.
/// A walk avoids `e` exactly when it is a semi-edge walk of `G − e`.
pub fn closed_walks_through_edge(g: &Graph, x: usize, e: (usize, usize), k: usize) -> Result<BigUint> {
    g.check_vertex(x)?;
    let without = g.without_edge(e.0, e.1)?;
    let all = walk_counts(g, k).get(x, x).clone();
    let avoiding = walk_counts(&without, k).get(x, x).clone();
    Ok(all - avoiding)
}

/// Default dominance depth `2n²`.
pub fn default_depth(n: usize) -> usize {
    2 * n * n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `≤` at every checked depth and `<` at least once.
    Strict,
    /// Equal at every checked depth.
    Weak,
    /// `>` at some checked depth.
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DominanceVerdict {
    pub relation: Relation,
    /// Least depth with a strict inequality, when the relation holds.
    pub first_strict_k: Option<usize>,
    /// Least depth where the dominated side is larger.
    pub failure_k: Option<usize>,
    pub depth_checked: usize,
}

impl DominanceVerdict {
    /// Compares `lhs[k] ≤ rhs[k]` for each `k` in order.
    pub fn from_counts<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a BigUint, &'a BigUint)>,
    {
        let mut first_strict = None;
        let mut depth = 0;
        for (k, (lhs, rhs)) in pairs.into_iter().enumerate() {
            depth = k;
            if lhs > rhs {
                return DominanceVerdict {
                    relation: Relation::Fails,
                    first_strict_k: None,
                    failure_k: Some(k),
                    depth_checked: k,
                };
            }
            if lhs < rhs && first_strict.is_none() {
                first_strict = Some(k);
            }
        }
        DominanceVerdict {
            relation: if first_strict.is_some() {
                Relation::Strict
            } else {
                Relation::Weak
            },
            first_strict_k: first_strict,
            failure_k: None,
            depth_checked: depth,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation != Relation::Fails
    }

    pub fn is_strict(&self) -> bool {
        self.relation == Relation::Strict
    }

    /// `self` is at least as strong as `other` (`Strict > Weak > Fails`).
    pub fn at_least(&self, other: Relation) -> bool {
        match other {
            Relation::Fails => true,
            Relation::Weak => self.holds(),
            Relation::Strict => self.is_strict(),
        }
    }
}

/// `(G; v) ⪯ (G; u)` over precomputed powers `Q^0..Q^K`.
pub fn dominance_in(powers: &[IntMatrix], v: usize, u: usize) -> DominanceVerdict {
    DominanceVerdict::from_counts(powers.iter().map(|p| (p.get(v, v), p.get(u, u))))
}

/// `(G; x, v) ⪯ (G; x, u)` over precomputed powers `Q^0..Q^K`.
pub fn pair_dominance_in(powers: &[IntMatrix], x: usize, v: usize, u: usize) -> DominanceVerdict {
    DominanceVerdict::from_counts(powers.iter().map(|p| (p.get(x, v), p.get(x, u))))
}

/// Compares closed-walk counts at `v` and `u` for `k = 0..=k_max`.
pub fn s_dominance(g: &Graph, v: usize, u: usize, k_max: usize) -> Result<DominanceVerdict> {
    g.check_vertex(v)?;
    g.check_vertex(u)?;
    check_depth(k_max)?;
    Ok(dominance_in(&signless_laplacian_powers(g, k_max), v, u))
}

/// Compares `|SW_k(G; x, v)|` with `|SW_k(G; x, u)|` for `k = 0..=k_max`.
pub fn s_dominance_pair(g: &Graph, x: usize, v: usize, u: usize, k_max: usize) -> Result<DominanceVerdict> {
    g.check_vertex(x)?;
    g.check_vertex(v)?;
    g.check_vertex(u)?;
    check_depth(k_max)?;
    Ok(pair_dominance_in(&signless_laplacian_powers(g, k_max), x, v, u))
}

fn check_depth(k_max: usize) -> Result<()> {
    if k_max == 0 {
        return Err(Error::param("dominance depth must be at least 1"));
    }
    Ok(())
}
