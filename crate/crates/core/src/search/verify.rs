//! Desk-scale verifiers for the extremal results and their supporting lemmas.
//!
//! Each verifier returns a report describing what was checked; `holds` is the
//! single pass/fail bit. Dominance hypotheses are finite-depth certificates,
//! while every SLEE comparison is an actual numerical check.

use num_bigint::BigUint;
use serde::Serialize;

use super::{connected_representatives, sweep, ClassFilter, SearchReport, MAX_SWEEP_ORDER};
use crate::error::{Error, Result};
use crate::families::{enumerate_h_family, g_extremal, h_extremal, h_family_specs, h_member, HFamilySpec};
use crate::graph::{are_isomorphic, write_graph6, Distance, Graph};
use crate::spectra::{moment_table, signless_laplacian_powers, slee, slee_tied};
use crate::walks::{
    dominance_in, enumerate_walks, pair_dominance_in, walk_counts, DominanceVerdict, Relation, ENUM_MAX_DEPTH,
    ENUM_MAX_ORDER,
};

/// Maximum SLEE over graphs of diameter `d` is attained only by `H(d, 1)`.
pub fn verify_theorem_diameter(n: usize, d: usize, workers: usize) -> Result<SearchReport> {
    if n > MAX_SWEEP_ORDER {
        return Err(Error::param(format!("n = {n} exceeds the sweep limit {MAX_SWEEP_ORDER}")));
    }
    if n <= 4 || d <= 2 || d + 1 >= n {
        return Err(Error::param(format!(
            "the diameter theorem needs n > 4 and 2 < d < n - 1, got n = {n}, d = {d}"
        )));
    }
    let predicted = h_extremal(n, d)?;
    sweep(n, ClassFilter::DiameterEquals(d), Some(&predicted), workers)
}

/// Maximum SLEE over graphs with `r` cut vertices is attained only by `G(n, r)`.
pub fn verify_theorem_cut(n: usize, r: usize, workers: usize) -> Result<SearchReport> {
    if n > MAX_SWEEP_ORDER {
        return Err(Error::param(format!("n = {n} exceeds the sweep limit {MAX_SWEEP_ORDER}")));
    }
    if r == 0 || r + 3 > n {
        return Err(Error::param(format!(
            "the cut-vertex theorem is checked for 1 <= r <= n - 3, got n = {n}, r = {r}"
        )));
    }
    let predicted = g_extremal(n, r)?;
    sweep(n, ClassFilter::CutVerticesEquals(r), Some(&predicted), workers)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeAdditionReport {
    pub graph: String,
    pub edge: (usize, usize),
    pub slee_before: f64,
    pub slee_after: f64,
    pub gap: f64,
    pub holds: bool,
}

/// Adding a missing edge strictly increases SLEE.
pub fn verify_edge_addition(g: &Graph, u: usize, v: usize) -> Result<EdgeAdditionReport> {
    let h = g.with_edge(u, v)?;
    let before = slee(g)?;
    let after = slee(&h)?;
    Ok(EdgeAdditionReport {
        graph: write_graph6(g),
        edge: (u.min(v), u.max(v)),
        slee_before: before,
        slee_after: after,
        gap: after - before,
        holds: after > before,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeShiftReport {
    pub graph: String,
    pub v: usize,
    pub u: usize,
    pub ws: Vec<usize>,
    pub depth: usize,
    /// `(G; v)` against `(G; u)`; must be strict.
    pub vertex_verdict: DominanceVerdict,
    /// `(G; w, v)` against `(G; w, u)` for each `w`; must hold.
    pub pair_verdicts: Vec<(usize, DominanceVerdict)>,
    pub hypotheses_met: bool,
    /// SLEE of `G + {vw}` and `G + {uw}`, only when the hypotheses hold.
    pub slee_v: Option<f64>,
    pub slee_u: Option<f64>,
    pub gap: Option<f64>,
    pub holds: Option<bool>,
}

/// Moving a bundle of new edges from `v` to a walk-dominant `u` raises SLEE.
pub fn verify_edge_shift(g: &Graph, v: usize, u: usize, ws: &[usize], k_max: usize) -> Result<EdgeShiftReport> {
    g.check_vertex(v)?;
    g.check_vertex(u)?;
    if v == u {
        return Err(Error::pre("v and u must differ"));
    }
    if k_max == 0 {
        return Err(Error::param("dominance depth must be at least 1"));
    }
    for (i, &w) in ws.iter().enumerate() {
        g.check_vertex(w)?;
        if w == v || w == u || ws[..i].contains(&w) {
            return Err(Error::pre(format!("w = {w} repeats or coincides with v or u")));
        }
        for end in [v, u] {
            if g.has_edge(end, w) {
                return Err(Error::pre(format!("edge {{{end}, {w}}} is already present")));
            }
        }
    }

    let powers = signless_laplacian_powers(g, k_max);
    let vertex_verdict = dominance_in(&powers, v, u);
    let pair_verdicts: Vec<_> = ws.iter().map(|&w| (w, pair_dominance_in(&powers, w, v, u))).collect();
    let hypotheses_met = vertex_verdict.is_strict() && pair_verdicts.iter().all(|(_, p)| p.holds());

    let (slee_v, slee_u) = if hypotheses_met {
        let mut gv = *g;
        let mut gu = *g;
        for &w in ws {
            gv.insert_edge(v, w)?;
            gu.insert_edge(u, w)?;
        }
        (Some(slee(&gv)?), Some(slee(&gu)?))
    } else {
        (None, None)
    };
    let gap = slee_v.zip(slee_u).map(|(a, b)| b - a);
    Ok(EdgeShiftReport {
        graph: write_graph6(g),
        v,
        u,
        ws: ws.to_vec(),
        depth: k_max,
        vertex_verdict,
        pair_verdicts,
        hypotheses_met,
        slee_v,
        slee_u,
        gap,
        holds: gap.map(|x| x > 0.0 && !slee_tied(slee_v.unwrap(), slee_u.unwrap())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreservationFailure {
    pub graph: String,
    pub v: usize,
    pub u: usize,
    /// Anchor vertex for pair dominance; `None` for vertex dominance.
    pub x: Option<usize>,
    pub expected: Relation,
    pub observed: DominanceVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    pub graph: String,
    pub depth: usize,
    pub vertex_instances: usize,
    pub pair_instances: usize,
    pub failures: Vec<PreservationFailure>,
    pub holds: bool,
}

/// Checks that adding the edge `uv` keeps walk dominance of `u` over `v`.
///
/// For every non-edge `{a, b}` in both orientations `(v, u)`:
/// * if `(G; v) ⪯ (G; u)` to depth `k_max`, then `(G+uv; v) ⪯ (G+uv; u)`
///   with at least the same strength;
/// * if additionally `(G; x, v) ⪯ (G; x, u)` for some `x`, then
///   `(G+uv; x, v) ⪯ (G+uv; x, u)`, strict when either hypothesis is strict.
pub fn verify_dominance_preservation(g: &Graph, k_max: usize) -> Result<PreservationReport> {
    if k_max == 0 {
        return Err(Error::param("dominance depth must be at least 1"));
    }
    let before = signless_laplacian_powers(g, k_max);
    let mut report = PreservationReport {
        graph: write_graph6(g),
        depth: k_max,
        vertex_instances: 0,
        pair_instances: 0,
        failures: Vec::new(),
        holds: true,
    };
    for (a, b) in g.non_edges() {
        let after = signless_laplacian_powers(&g.with_edge(a, b)?, k_max);
        for (v, u) in [(a, b), (b, a)] {
            let hyp = dominance_in(&before, v, u);
            if !hyp.holds() {
                continue;
            }
            report.vertex_instances += 1;
            let concl = dominance_in(&after, v, u);
            if !concl.at_least(hyp.relation) {
                report.failures.push(PreservationFailure {
                    graph: write_graph6(g),
                    v,
                    u,
                    x: None,
                    expected: hyp.relation,
                    observed: concl,
                });
            }
            for x in 0..g.order() {
                let pair_hyp = pair_dominance_in(&before, x, v, u);
                if !pair_hyp.holds() {
                    continue;
                }
                report.pair_instances += 1;
                let expected = if hyp.is_strict() || pair_hyp.is_strict() {
                    Relation::Strict
                } else {
                    Relation::Weak
                };
                let concl = pair_dominance_in(&after, x, v, u);
                if !concl.at_least(expected) {
                    report.failures.push(PreservationFailure {
                        graph: write_graph6(g),
                        v,
                        u,
                        x: Some(x),
                        expected,
                        observed: concl,
                    });
                }
            }
        }
    }
    report.holds = report.failures.is_empty();
    Ok(report)
}

/// One application of the pendant-path relocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelocationInstance {
    pub h1: Graph,
    pub x: usize,
    pub y: usize,
    pub h2: Graph,
    pub u: usize,
    /// Order of the path hung at `y` (`y` itself included).
    pub s: usize,
    /// `u, x_1, .., x_{s+1}` inside `h2`.
    pub h2_path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelocationReport {
    pub before: String,
    pub after: String,
    pub order_before: usize,
    pub order_after: usize,
    pub cut_vertices_before: usize,
    pub cut_vertices_after: usize,
    pub slee_before: f64,
    pub slee_after: f64,
    pub gap: f64,
    /// No edges to move: `y` has no neighbour in `h1` besides `x`.
    pub degenerate: bool,
    pub holds: bool,
}

/// Builds `G = (H1(y) ∘ P_s(y_0))(x) ∘ H2(u)`, moves the edges from `y` to
/// its other `H1`-neighbours over to `x_1`, and compares SLEE.
pub fn verify_pendant_relocation(inst: &RelocationInstance) -> Result<RelocationReport> {
    let RelocationInstance {
        h1,
        x,
        y,
        h2,
        u,
        s,
        h2_path,
    } = inst;
    let (x, y, u, s) = (*x, *y, *u, *s);
    h1.check_vertex(x)?;
    h1.check_vertex(y)?;
    h2.check_vertex(u)?;
    if x == y || !h1.has_edge(x, y) {
        return Err(Error::pre(format!("{{{x}, {y}}} must be an edge of H1")));
    }
    if s == 0 {
        return Err(Error::pre("the path at y needs at least one vertex"));
    }
    if h2_path.len() != s + 2 || h2_path[0] != u {
        return Err(Error::pre(format!(
            "H2 needs a path of order s + 2 = {} starting at u = {u}",
            s + 2
        )));
    }
    for (i, &p) in h2_path.iter().enumerate() {
        h2.check_vertex(p)?;
        if h2_path[..i].contains(&p) {
            return Err(Error::pre(format!("path vertex {p} repeats")));
        }
        if i > 0 && !h2.has_edge(h2_path[i - 1], p) {
            return Err(Error::pre(format!(
                "H2 has no edge {{{}, {p}}} on the supplied path",
                h2_path[i - 1]
            )));
        }
    }

    let with_path = h1.attach_pendent_path(y, s - 1)?;
    let (g, map) = with_path.coalesce_mapped(x, h2, u)?;
    let x1 = map[h2_path[1]];
    let moved: Vec<usize> = h1.neighbors(y).filter(|&w| w != x).collect();
    let mut relocated = g;
    for &w in &moved {
        relocated.delete_edge(y, w)?;
        relocated.insert_edge(x1, w)?;
    }

    let before = slee(&g)?;
    let after = slee(&relocated)?;
    let degenerate = moved.is_empty();
    let holds = if degenerate {
        relocated == g
    } else {
        after > before && !slee_tied(before, after)
    };
    Ok(RelocationReport {
        before: write_graph6(&g),
        after: write_graph6(&relocated),
        order_before: g.order(),
        order_after: relocated.order(),
        cut_vertices_before: g.cut_vertex_count(),
        cut_vertices_after: relocated.cut_vertex_count(),
        slee_before: before,
        slee_after: after,
        gap: after - before,
        degenerate,
        holds,
    })
}

/// A fixed battery of 20 relocation instances in the setting of the
/// cut-vertex argument: `H1` is a block containing `x` and `y`, and `H2` is
/// a path from `u` (optionally ending in a triangle) that is long enough.
pub fn relocation_instances() -> Vec<RelocationInstance> {
    let clique = |m: usize| crate::families::complete(m).expect("small clique");
    let tail = |len: usize, triangle: bool| {
        let p = crate::families::path(len).expect("small path");
        if triangle {
            p.coalesce(len - 1, &clique(3), 0).expect("fits")
        } else {
            p
        }
    };
    let mut out = Vec::new();
    for m in 3..=5 {
        for s in 1..=3 {
            for (extra, triangle) in [(0, false), (1, true)] {
                out.push(RelocationInstance {
                    h1: clique(m),
                    x: 0,
                    y: 1,
                    h2: tail(s + 2 + extra, triangle),
                    u: 0,
                    s,
                    h2_path: (0..s + 2).collect(),
                });
            }
        }
    }
    // a 4-cycle block instead of a clique
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).expect("C4");
    for s in 1..=2 {
        out.push(RelocationInstance {
            h1: c4,
            x: 0,
            y: 1,
            h2: tail(s + 2, false),
            u: 0,
            s,
            h2_path: (0..s + 2).collect(),
        });
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HDescentMember {
    pub assignment: Vec<usize>,
    pub graph6: String,
    pub slee: f64,
    /// Also a member of `H(d, j−1)`: by window, by mirroring the path, or up
    /// to isomorphism.
    pub in_previous_class: bool,
    /// `slee < max over H(d, j−1)`; only checked when not in that class.
    pub below_previous_max: Option<bool>,
    pub tied_with_extremal: bool,
    pub isomorphic_to_extremal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HDescentReport {
    pub n: usize,
    pub d: usize,
    pub j: usize,
    pub vacuous: bool,
    pub previous_class_max: Option<f64>,
    pub extremal_slee: f64,
    pub members: Vec<HDescentMember>,
    pub holds: bool,
}

/// Members of `H(d, j)` outside `H(d, j−1)` lose to the best of `H(d, j−1)`,
/// and nothing in `H(d, j)` beats `H(d, 1)` except its isomorphic copies.
pub fn verify_h_descent(n: usize, d: usize, j: usize) -> Result<HDescentReport> {
    let extremal = h_extremal(n, d)?;
    let extremal_slee = slee(&extremal)?;
    // bound checks for (n, d, j) happen here
    let specs: Vec<HFamilySpec> = h_family_specs(n, d, j)?.collect();
    if j == 1 {
        return Ok(HDescentReport {
            n,
            d,
            j,
            vacuous: true,
            previous_class_max: None,
            extremal_slee,
            members: Vec::new(),
            holds: true,
        });
    }

    let previous: Vec<Graph> = enumerate_h_family(n, d, j - 1)?.collect();
    let previous_max = previous
        .iter()
        .map(slee)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);

    let mut members = Vec::with_capacity(specs.len());
    let mut holds = true;
    for spec in specs {
        let g = h_member(&spec)?;
        let value = slee(&g)?;
        let in_previous = spec.fits_window_up_to_mirror(j - 1) || previous.iter().any(|p| are_isomorphic(p, &g));
        let below = (!in_previous).then(|| value < previous_max && !slee_tied(value, previous_max));
        let tied = slee_tied(value, extremal_slee);
        let iso = are_isomorphic(&g, &extremal);
        let ok = below != Some(false) && (value < extremal_slee || tied) && (tied == iso);
        holds &= ok;
        members.push(HDescentMember {
            assignment: spec.assignment,
            graph6: write_graph6(&g),
            slee: value,
            in_previous_class: in_previous,
            below_previous_max: below,
            tied_with_extremal: tied,
            isomorphic_to_extremal: iso,
        });
    }
    Ok(HDescentReport {
        n,
        d,
        j,
        vacuous: false,
        previous_class_max: Some(previous_max),
        extremal_slee,
        members,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborBoundReport {
    pub graph: String,
    pub diameter: usize,
    pub diametral_path: Vec<usize>,
    pub max_neighbors_on_path: usize,
    pub holds: bool,
}

/// Lexicographically first shortest path realising the diameter: the least
/// endpoint pair `(a, b)`, then the least vertex sequence.
pub fn diametral_path(g: &Graph) -> Result<Vec<usize>> {
    let d = match g.diameter() {
        Distance::Finite(d) => d,
        Distance::Infinite => return Err(Error::Disconnected),
    };
    let n = g.order();
    let (a, b) = (0..n)
        .find_map(|a| {
            let dist = g.distances_from(a);
            (0..n).find(|&b| dist[b] == Distance::Finite(d)).map(|b| (a, b))
        })
        .expect("diameter is realised by some pair");
    let to_b = g.distances_from(b);
    let mut walk = vec![a];
    let mut here = a;
    while here != b {
        let want = to_b[here].finite().expect("connected") - 1;
        here = g
            .neighbors(here)
            .find(|&w| to_b[w] == Distance::Finite(want))
            .expect("a shortest path continues");
        walk.push(here);
    }
    Ok(walk)
}

/// Every vertex off a diametral path has at most three neighbours on it.
pub fn verify_diametral_neighbor_bound(g: &Graph) -> Result<NeighborBoundReport> {
    let path = diametral_path(g)?;
    let diameter = path.len() - 1;
    if diameter < 2 {
        return Err(Error::pre(format!("diameter must be at least 2, got {diameter}")));
    }
    let on_path = path.iter().fold(0u32, |acc, &v| acc | 1 << v);
    let max = (0..g.order())
        .filter(|&v| on_path >> v & 1 == 0)
        .map(|v| (g.neighbor_mask(v) & on_path).count_ones() as usize)
        .max()
        .unwrap_or(0);
    Ok(NeighborBoundReport {
        graph: write_graph6(g),
        diameter,
        diametral_path: path,
        max_neighbors_on_path: max,
        holds: max <= 3,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentWalkReport {
    pub max_order: usize,
    pub k_max: usize,
    pub graphs_checked: usize,
    pub trace_checks: usize,
    pub entry_checks: usize,
    /// graph6 strings of graphs with a mismatch.
    pub failures: Vec<String>,
    pub holds: bool,
}

/// Compares enumerated semi-edge walk counts with exact powers of `Q`, at
/// entry level and at trace level, on all connected graphs up to
/// isomorphism with `1..=max_order` vertices.
pub fn verify_moment_walk(max_order: usize, k_max: usize) -> Result<MomentWalkReport> {
    if max_order == 0 || max_order > ENUM_MAX_ORDER.min(MAX_SWEEP_ORDER) || k_max > ENUM_MAX_DEPTH {
        return Err(Error::param(format!(
            "moment/walk check supports 1 <= n <= {} and k <= {ENUM_MAX_DEPTH}",
            ENUM_MAX_ORDER.min(MAX_SWEEP_ORDER)
        )));
    }
    let mut report = MomentWalkReport {
        max_order,
        k_max,
        graphs_checked: 0,
        trace_checks: 0,
        entry_checks: 0,
        failures: Vec::new(),
        holds: true,
    };
    for n in 1..=max_order {
        for g in connected_representatives(n)? {
            report.graphs_checked += 1;
            if !moment_walk_agrees(&g, k_max, &mut report)? {
                report.failures.push(write_graph6(&g));
            }
        }
    }
    report.holds = report.failures.is_empty();
    Ok(report)
}

fn moment_walk_agrees(g: &Graph, k_max: usize, report: &mut MomentWalkReport) -> Result<bool> {
    let table = moment_table(g, k_max);
    let n = g.order();
    let mut ok = true;
    for k in 0..=k_max {
        let mut closed = 0usize;
        for x in 0..n {
            for y in 0..n {
                let count = enumerate_walks(g, x, y, k)?.len();
                if x == y {
                    closed += count;
                }
                report.entry_checks += 1;
                ok &= *table.power(k).get(x, y) == BigUint::from(count);
            }
        }
        report.trace_checks += 1;
        ok &= table.traces[k] == BigUint::from(closed);
        ok &= *walk_counts(g, k).get(0, 0) == *table.power(k).get(0, 0);
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path};

    #[test]
    fn diameter_theorem_small() {
        let r = verify_theorem_diameter(5, 3, 2).unwrap();
        assert_eq!(r.matched_prediction, Some(true));
        assert!(verify_theorem_diameter(6, 5, 1).is_err());
        assert!(verify_theorem_diameter(8, 4, 1).is_err());
    }

    #[test]
    fn cut_theorem_bounds() {
        assert!(verify_theorem_cut(5, 3, 1).is_err());
        assert!(verify_theorem_cut(5, 0, 1).is_err());
        assert!(verify_theorem_cut(7, 9, 1).is_err());
        assert_eq!(verify_theorem_cut(5, 2, 2).unwrap().matched_prediction, Some(true));
    }

    #[test]
    fn edge_shift_examples() {
        // P_3 a-b-c, v = a, u = b, ws = {c}: c is already adjacent to b
        let p3 = path(3).unwrap();
        assert!(matches!(verify_edge_shift(&p3, 0, 1, &[2], 12), Err(Error::Precondition(_))));

        // star with centre 0 and leaves 1, 2, 3, plus an isolated vertex 4
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = verify_edge_shift(&g, 1, 0, &[4], 50).unwrap();
        assert!(r.hypotheses_met, "{r:?}");
        assert!(r.gap.unwrap() > 0.0);
        assert_eq!(r.holds, Some(true));

        // reversed roles: hypotheses fail, no SLEE assertion
        let r = verify_edge_shift(&g, 0, 1, &[4], 50).unwrap();
        assert!(!r.hypotheses_met);
        assert_eq!(r.holds, None);
        assert_eq!(r.slee_u, None);
    }

    #[test]
    fn relocation_examples() {
        let k3 = complete(3).unwrap();
        let inst = RelocationInstance {
            h1: k3,
            x: 0,
            y: 1,
            h2: path(3).unwrap(),
            u: 0,
            s: 1,
            h2_path: vec![0, 1, 2],
        };
        let r = verify_pendant_relocation(&inst).unwrap();
        assert!(r.holds && !r.degenerate && r.gap > 0.0, "{r:?}");
        assert_eq!(r.order_before, r.order_after);
        assert_eq!(r.cut_vertices_before, r.cut_vertices_after);

        let degenerate = RelocationInstance {
            h1: complete(2).unwrap(),
            ..inst.clone()
        };
        let r = verify_pendant_relocation(&degenerate).unwrap();
        assert!(r.degenerate && r.holds);
        assert_eq!(r.gap, 0.0);

        let short = RelocationInstance {
            h2: path(2).unwrap(),
            h2_path: vec![0, 1],
            ..inst.clone()
        };
        assert!(verify_pendant_relocation(&short).is_err());
        let broken = RelocationInstance {
            h2_path: vec![0, 2, 1],
            ..inst
        };
        assert!(verify_pendant_relocation(&broken).is_err());
    }

    #[test]
    fn relocation_battery_size() {
        assert_eq!(relocation_instances().len(), 20);
    }

    #[test]
    fn h_descent_small() {
        let r = verify_h_descent(6, 4, 2).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.members.len(), 3);
        assert!(verify_h_descent(6, 4, 1).unwrap().vacuous);
        assert!(verify_h_descent(6, 4, 3).is_err());
    }

    #[test]
    fn neighbor_bound_examples() {
        let r = verify_diametral_neighbor_bound(&h_extremal(7, 4).unwrap()).unwrap();
        assert_eq!(r.max_neighbors_on_path, 3);
        assert_eq!(r.diametral_path, vec![0, 1, 2, 3, 4]);
        let r = verify_diametral_neighbor_bound(&path(5).unwrap()).unwrap();
        assert_eq!(r.max_neighbors_on_path, 0);
        assert!(verify_diametral_neighbor_bound(&complete(4).unwrap()).is_err());
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(verify_diametral_neighbor_bound(&disconnected), Err(Error::Disconnected));
    }

    #[test]
    fn moment_walk_small() {
        let r = verify_moment_walk(4, 4).unwrap();
        assert!(r.holds);
        assert_eq!(r.graphs_checked, 1 + 1 + 2 + 6);
        assert!(verify_moment_walk(4, 9).is_err());
    }

    #[test]
    fn preservation_on_a_small_graph() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let r = verify_dominance_preservation(&g, 12).unwrap();
        assert!(r.holds, "{r:?}");
        assert!(r.vertex_instances > 0 && r.pair_instances > 0);
    }
}
