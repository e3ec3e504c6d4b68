//! Named graph families: paths, cliques, `K_n − e`, the diameter family
//! `H(d, j)` and the cut-vertex family `G(n, r)`.
//!
//! ## `H(d, j)`
//!
//! Take the path `v_0 v_1 .. v_d` (vertices `0..=d`) and a clique on the
//! remaining `n − d − 1` vertices (`d+1..n`). Clique vertex `t` is joined to
//! the three consecutive path vertices `v_i, v_{i+1}, v_{i+2}` where `i` is
//! its *window start*. With `c = ⌈d/2⌉`, membership in `H(d, j)` requires
//! every window start to lie in `c − j ..= c + j − 2`. For odd `d` and
//! `j = c` the upper end of that range would reach past `v_d`; starts are
//! clamped to `d − 2`.
//!
//! ## `G(n, r)`
//!
//! `K_{n−r}` with one pendant path per clique vertex, path orders balanced
//! (differing by at most one) and summing to `r`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

/// `K_n` minus the edge `{0, 1}`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param(format!("K_n - e needs n >= 2, got n = {n}")));
    }
    complete(n)?.without_edge(0, 1)
}

/// `⌈d/2⌉`, the index of a central vertex of `v_0 .. v_d`.
pub fn center_index(d: usize) -> usize {
    d.div_ceil(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HFamilySpec {
    pub n: usize,
    pub d: usize,
    pub j: usize,
    /// Window start for each clique vertex, `n − d − 1` entries.
    pub assignment: Vec<usize>,
}

fn check_h_bounds(n: usize, d: usize, j: usize) -> Result<()> {
    if n <= 4 {
        return Err(Error::param(format!("H(d, j) needs n > 4, got n = {n}")));
    }
    if d <= 2 || d + 1 >= n {
        return Err(Error::param(format!(
            "H(d, j) needs 2 < d < n - 1, got d = {d} with n = {n}"
        )));
    }
    if n > crate::graph::MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let c = center_index(d);
    if j == 0 || j > c {
        return Err(Error::param(format!(
            "H(d, j) needs 1 <= j <= ceil(d/2) = {c}, got j = {j}"
        )));
    }
    Ok(())
}

/// Admissible window starts for `H(d, j)`.
pub fn window_starts(d: usize, j: usize) -> std::ops::RangeInclusive<usize> {
    let c = center_index(d);
    (c - j)..=(c + j - 2).min(d - 2)
}

impl HFamilySpec {
    pub fn new(n: usize, d: usize, j: usize, assignment: Vec<usize>) -> Result<Self> {
        let spec = HFamilySpec { n, d, j, assignment };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        check_h_bounds(self.n, self.d, self.j)?;
        let clique = self.n - self.d - 1;
        if self.assignment.len() != clique {
            return Err(Error::param(format!(
                "assignment needs one window start per clique vertex ({clique}), got {}",
                self.assignment.len()
            )));
        }
        let window = window_starts(self.d, self.j);
        for (t, &i) in self.assignment.iter().enumerate() {
            if !window.contains(&i) {
                return Err(Error::param(format!(
                    "window start {i} of clique vertex {t} lies outside {}..={} (ceil(d/2) - j ..= ceil(d/2) + j - 2, capped at d - 2)",
                    window.start(),
                    window.end()
                )));
            }
        }
        Ok(())
    }

    /// Whether every window start is admissible for spread `j`.
    pub fn fits_window(&self, j: usize) -> bool {
        j >= 1 && j <= center_index(self.d) && self.assignment.iter().all(|i| window_starts(self.d, j).contains(i))
    }

    /// The same graph with the path read backwards (`v_i ↦ v_{d−i}`).
    pub fn mirrored_assignment(&self) -> Vec<usize> {
        self.assignment.iter().map(|&i| self.d - 2 - i).collect()
    }

    /// Fits spread `j` as labeled or after reversing the path.
    pub fn fits_window_up_to_mirror(&self, j: usize) -> bool {
        if self.fits_window(j) {
            return true;
        }
        let mirrored = HFamilySpec {
            assignment: self.mirrored_assignment(),
            ..self.clone()
        };
        mirrored.fits_window(j)
    }
}

pub fn h_member(spec: &HFamilySpec) -> Result<Graph> {
    spec.validate()?;
    let (n, d) = (spec.n, spec.d);
    let mut g = Graph::from_edges(n, (1..=d).map(|i| (i - 1, i)))?;
    for a in (d + 1)..n {
        for b in (a + 1)..n {
            g.insert_edge(a, b)?;
        }
    }
    for (t, &i) in spec.assignment.iter().enumerate() {
        let x = d + 1 + t;
        for p in i..i + 3 {
            g.insert_edge(x, p)?;
        }
    }
    Ok(g)
}

/// All labeled assignments of `H(d, j)`, in lexicographic order.
pub fn h_family_specs(n: usize, d: usize, j: usize) -> Result<HFamilyIter> {
    check_h_bounds(n, d, j)?;
    let window = window_starts(d, j);
    let clique = n - d - 1;
    Ok(HFamilyIter {
        n,
        d,
        j,
        lo: *window.start(),
        hi: *window.end(),
        next: Some(vec![*window.start(); clique]),
    })
}

/// Members of `H(d, j)`, one per labeled assignment; isomorphic duplicates
/// are not removed.
pub fn enumerate_h_family(n: usize, d: usize, j: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(h_family_specs(n, d, j)?.map(|s| h_member(&s).expect("generated specs are valid")))
}

#[derive(Debug, Clone)]
pub struct HFamilyIter {
    n: usize,
    d: usize,
    j: usize,
    lo: usize,
    hi: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for HFamilyIter {
    type Item = HFamilySpec;

    fn next(&mut self) -> Option<HFamilySpec> {
        let current = self.next.take()?;
        // odometer, last position fastest
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            if succ[pos] < self.hi {
                succ[pos] += 1;
                for s in &mut succ[pos + 1..] {
                    *s = self.lo;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(HFamilySpec {
            n: self.n,
            d: self.d,
            j: self.j,
            assignment: current,
        })
    }
}

/// Parameters of `H(d, 1)`: every clique vertex on `v_{c−1}, v_c, v_{c+1}`.
pub fn h_extremal_spec(n: usize, d: usize) -> Result<HFamilySpec> {
    check_h_bounds(n, d, 1)?;
    HFamilySpec::new(n, d, 1, vec![center_index(d) - 1; n - d - 1])
}

pub fn h_extremal(n: usize, d: usize) -> Result<Graph> {
    h_member(&h_extremal_spec(n, d)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GFamilySpec {
    pub n: usize,
    pub r: usize,
    /// Pendant path order for each clique vertex, `n − r` entries.
    pub path_orders: Vec<usize>,
}

impl GFamilySpec {
    /// Balanced orders, longer paths on the lowest-index clique vertices.
    pub fn balanced(n: usize, r: usize) -> Result<Self> {
        if n < 2 || r > n - 2 {
            return Err(Error::param(format!(
                "G(n, r) needs 0 <= r <= n - 2, got r = {r} with n = {n}"
            )));
        }
        let k = n - r;
        let (q, rem) = (r / k, r % k);
        let path_orders = (0..k).map(|i| if i < rem { q + 1 } else { q }).collect();
        Ok(GFamilySpec { n, r, path_orders })
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.n.saturating_sub(self.r);
        if self.n < 2 || self.r > self.n - 2 {
            return Err(Error::param(format!(
                "G(n, r) needs 0 <= r <= n - 2, got r = {} with n = {}",
                self.r, self.n
            )));
        }
        if self.path_orders.len() != k {
            return Err(Error::param(format!(
                "need one pendant path order per clique vertex ({k}), got {}",
                self.path_orders.len()
            )));
        }
        if self.path_orders.iter().sum::<usize>() != self.r {
            return Err(Error::param("pendant path orders must sum to r"));
        }
        let lo = self.r / k;
        if self.path_orders.iter().any(|&m| m != lo && m != lo + 1) {
            return Err(Error::param(format!(
                "pendant path orders must be floor(r/(n-r)) = {lo} or {}",
                lo + 1
            )));
        }
        Ok(())
    }
}

pub fn g_member(spec: &GFamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = complete(spec.n - spec.r)?;
    for (x, &m) in spec.path_orders.iter().enumerate() {
        g = g.attach_pendent_path(x, m)?;
    }
    Ok(g)
}

pub fn g_extremal(n: usize, r: usize) -> Result<Graph> {
    g_member(&GFamilySpec::balanced(n, r)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, Distance};

    #[test]
    fn basic_families() {
        assert_eq!(complete(4).unwrap().size(), 6);
        assert_eq!(path(4).unwrap().cut_vertices(), vec![1, 2]);
        assert_eq!(complete_minus_edge(5).unwrap().diameter(), Distance::Finite(2));
        assert!(!complete_minus_edge(5).unwrap().has_edge(0, 1));
        assert!(complete_minus_edge(1).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn h_windows() {
        assert_eq!(window_starts(4, 2), 0..=2);
        assert_eq!(window_starts(4, 1), 1..=1);
        assert_eq!(window_starts(3, 1), 1..=1);
        assert_eq!(window_starts(5, 2), 1..=3);
        // odd d, j = ceil(d/2): clamped to d − 2
        assert_eq!(window_starts(5, 3), 0..=3);
    }

    #[test]
    fn h_family_counts() {
        assert_eq!(enumerate_h_family(7, 4, 2).unwrap().count(), 9);
        assert_eq!(enumerate_h_family(7, 4, 1).unwrap().count(), 1);
        assert_eq!(enumerate_h_family(8, 4, 2).unwrap().count(), 27);
        assert_eq!(enumerate_h_family(7, 5, 3).unwrap().count(), 4);
        let specs: Vec<_> = h_family_specs(7, 4, 2).unwrap().map(|s| s.assignment).collect();
        assert_eq!(specs.first(), Some(&vec![0, 0]));
        assert_eq!(specs.last(), Some(&vec![2, 2]));
    }

    #[test]
    fn h_member_construction() {
        let g = h_member(&HFamilySpec::new(7, 4, 1, vec![1, 1]).unwrap()).unwrap();
        assert_eq!(g.diameter(), Distance::Finite(4));
        for x in [5, 6] {
            let on_path: Vec<_> = g.neighbors(x).filter(|&w| w <= 4).collect();
            assert_eq!(on_path, vec![1, 2, 3]);
        }
        assert!(g.has_edge(5, 6));
        assert_eq!(g, h_extremal(7, 4).unwrap());
    }

    #[test]
    fn h_member_rejects_bad_specs() {
        assert!(HFamilySpec::new(7, 4, 1, vec![0, 1]).is_err());
        assert!(HFamilySpec::new(7, 4, 2, vec![0]).is_err());
        assert!(HFamilySpec::new(4, 2, 1, vec![0]).is_err());
        assert!(HFamilySpec::new(7, 6, 1, vec![]).is_err());
        assert!(HFamilySpec::new(7, 4, 3, vec![0, 0]).is_err());
        assert!(h_extremal(6, 5).is_err());
        let msg = HFamilySpec::new(7, 4, 1, vec![3, 1]).unwrap_err().to_string();
        assert!(msg.contains("window start 3"), "{msg}");
    }

    #[test]
    fn h_extremal_small_cases() {
        let g = h_extremal(6, 4).unwrap();
        assert_eq!(g.neighbors(5).collect::<Vec<_>>(), vec![1, 2, 3]);
        let g = h_extremal(5, 3).unwrap();
        assert_eq!(g.neighbors(4).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(g.diameter(), Distance::Finite(3));
        let g = h_extremal(7, 4).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 4 + 1 + 6);
    }

    #[test]
    fn mirror_membership() {
        // d = 5, c = 3: H(5, 1) start is 2; start 1 mirrors to 5 − 2 − 1 = 2
        let s = HFamilySpec::new(7, 5, 2, vec![1]).unwrap();
        assert!(!s.fits_window(1));
        assert!(s.fits_window_up_to_mirror(1));
        let g = h_member(&s).unwrap();
        assert!(are_isomorphic(&g, &h_extremal(7, 5).unwrap()));
    }

    #[test]
    fn g_family() {
        let g = g_extremal(6, 3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.degrees(), vec![3, 3, 3, 1, 1, 1]);
        assert!(are_isomorphic(&g_extremal(5, 0).unwrap(), &complete(5).unwrap()));
        assert!(are_isomorphic(&g_extremal(6, 4).unwrap(), &path(6).unwrap()));
        assert_eq!(GFamilySpec::balanced(7, 4).unwrap().path_orders, vec![2, 1, 1]);
        assert!(g_extremal(5, 4).is_err());
        assert!(g_member(&GFamilySpec { n: 6, r: 2, path_orders: vec![2, 0, 0, 0] }).is_err());
        assert!(g_member(&GFamilySpec { n: 6, r: 2, path_orders: vec![1, 1, 0] }).is_err());
    }

    #[test]
    fn g_family_cut_vertex_count() {
        for n in 2..=9 {
            for r in 0..=n - 2 {
                let g = g_extremal(n, r).unwrap();
                assert_eq!(g.order(), n);
                assert_eq!(g.cut_vertex_count(), r, "n={n} r={r}");
                assert!(g.is_connected());
            }
        }
    }
}
