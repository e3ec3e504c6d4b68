//! Exhaustive labeled sweeps and finite-scale verifiers.
//!
//! A sweep visits all `2^{n(n−1)/2}` labeled graphs on `n` vertices, keeps the
//! connected ones passing a [`ClassFilter`], and records the SLEE maximum and
//! every graph within the tie tolerance of it. The index range is split into
//! a fixed number of chunks regardless of the worker count and the chunk
//! results are merged in order, so reports do not depend on parallelism.

mod sample;
mod verify;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, isomorphism_classes, write_graph6, Distance, Graph};
use crate::spectra::{slee, slee_tied};

pub use sample::{random_connected_graph, random_graph, sample_edge_additions};
pub use verify::*;

/// Largest order a sweep accepts (2^21 labeled graphs at n = 7).
pub const MAX_SWEEP_ORDER: usize = 7;

const CHUNKS: u64 = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ClassFilter {
    DiameterEquals(usize),
    CutVerticesEquals(usize),
    AllConnected,
}

impl ClassFilter {
    fn validate(&self, n: usize) -> Result<()> {
        match *self {
            ClassFilter::DiameterEquals(d) if n >= 2 && !(1..n).contains(&d) => Err(Error::param(format!(
                "diameter {d} is impossible for a connected graph on {n} vertices (need 1 <= d <= {})",
                n - 1
            ))),
            ClassFilter::DiameterEquals(d) if n == 1 && d != 0 => {
                Err(Error::param("the only graph on 1 vertex has diameter 0"))
            }
            ClassFilter::CutVerticesEquals(r) if r + 2 > n.max(2) => Err(Error::param(format!(
                "{r} cut vertices is impossible on {n} vertices (need r <= n - 2)"
            ))),
            _ => Ok(()),
        }
    }

    /// Whether a connected graph belongs to the class.
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            ClassFilter::DiameterEquals(d) => g.diameter() == Distance::Finite(d),
            ClassFilter::CutVerticesEquals(r) => g.cut_vertex_count() == r,
            ClassFilter::AllConnected => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub filter: ClassFilter,
    pub graphs_scanned: u64,
    pub class_size: u64,
    /// `None` when the class is empty.
    pub max_slee: Option<f64>,
    /// graph6 strings of the maximizers, sorted.
    pub tie_set: Vec<String>,
    pub iso_classes: usize,
    pub matched_prediction: Option<bool>,
}

impl SearchReport {
    pub fn tie_graphs(&self) -> Vec<Graph> {
        self.tie_set
            .iter()
            .map(|s| crate::graph::parse_graph6(s).expect("tie set holds valid graph6"))
            .collect()
    }
}

#[derive(Debug, Clone, Default)]
struct Partial {
    class_size: u64,
    max: f64,
    ties: Vec<(u64, f64)>,
}

impl Partial {
    fn empty() -> Self {
        Partial {
            class_size: 0,
            max: f64::NEG_INFINITY,
            ties: Vec::new(),
        }
    }

    fn offer(&mut self, mask: u64, value: f64) {
        if value > self.max {
            self.max = value;
            let max = self.max;
            self.ties.retain(|&(_, s)| slee_tied(max, s));
        }
        if slee_tied(self.max, value) {
            self.ties.push((mask, value));
        }
    }

    /// Associative merge; the result depends only on the multiset of offers.
    fn merge(mut self, other: Partial) -> Partial {
        self.class_size += other.class_size;
        self.max = self.max.max(other.max);
        let max = self.max;
        self.ties.extend(other.ties);
        self.ties.retain(|&(_, s)| slee_tied(max, s));
        self
    }
}

/// Upper-triangle vertex pairs in lexicographic order; bit `b` of a sweep
/// index selects `pairs[b]`.
pub(crate) fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

/// Every labeled graph on `n ≤ 7` vertices, in sweep index order.
pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_order(n)?;
    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| Graph::from_pair_mask(n, &pairs, mask)))
}

/// One representative per isomorphism class of connected graphs on `n ≤ 7`
/// vertices (first labeled occurrence in sweep order).
pub fn connected_representatives(n: usize) -> Result<Vec<Graph>> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in labeled_graphs(n)?.filter(Graph::is_connected) {
        if !reps.iter().any(|r| are_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    Ok(reps)
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_SWEEP_ORDER {
        return Err(Error::param(format!(
            "exhaustive sweeps are limited to n <= {MAX_SWEEP_ORDER}, got n = {n}"
        )));
    }
    Ok(())
}

/// Number of workers to use when the caller does not say.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map(usize::from).unwrap_or(1)
}

/// Exhaustive search for the SLEE maximizers of a class of connected graphs.
///
/// With `predicted`, `matched_prediction` reports whether every maximizer is
/// isomorphic to it.
pub fn sweep(n: usize, filter: ClassFilter, predicted: Option<&Graph>, workers: usize) -> Result<SearchReport> {
    check_order(n)?;
    filter.validate(n)?;
    if workers == 0 {
        return Err(Error::param("worker count must be positive"));
    }

    let pairs = vertex_pairs(n);
    let total = 1u64 << pairs.len();
    let chunks = CHUNKS.min(total);
    let span = total.div_ceil(chunks);

    let scan = |c: u64| -> Result<Partial> {
        let mut part = Partial::empty();
        for mask in (c * span)..((c + 1) * span).min(total) {
            let g = Graph::from_pair_mask(n, &pairs, mask);
            if !g.is_connected() || !filter.accepts(&g) {
                continue;
            }
            part.class_size += 1;
            part.offer(mask, slee(&g)?);
        }
        Ok(part)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?;
    let parts: Vec<Partial> = pool.install(|| (0..chunks).into_par_iter().map(scan).collect::<Result<_>>())?;
    let merged = parts.into_iter().fold(Partial::empty(), Partial::merge);

    let mut ties: Vec<(String, Graph)> = merged
        .ties
        .iter()
        .map(|&(mask, _)| {
            let g = Graph::from_pair_mask(n, &pairs, mask);
            (write_graph6(&g), g)
        })
        .collect();
    ties.sort_by(|a, b| a.0.cmp(&b.0));
    ties.dedup_by(|a, b| a.0 == b.0);
    for (s, g) in &ties {
        assert!(
            g.is_connected() && filter.accepts(g),
            "tie set member {s} does not pass {filter:?}"
        );
    }

    let graphs: Vec<Graph> = ties.iter().map(|t| t.1).collect();
    let classes = isomorphism_classes(&graphs);
    let matched_prediction = predicted.map(|p| classes.len() == 1 && are_isomorphic(&graphs[classes[0][0]], p));

    Ok(SearchReport {
        n,
        filter,
        graphs_scanned: total,
        class_size: merged.class_size,
        max_slee: (merged.class_size > 0).then_some(merged.max),
        tie_set: ties.into_iter().map(|t| t.0).collect(),
        iso_classes: classes.len(),
        matched_prediction,
    })
}

/// Class maximum of SLEE for each diameter `1..n` (exploratory output).
pub fn diameter_class_maxima(n: usize, workers: usize) -> Result<Vec<(usize, Option<f64>)>> {
    (1..n.max(2))
        .map(|d| Ok((d, sweep(n, ClassFilter::DiameterEquals(d), None, workers)?.max_slee)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_minus_edge, g_extremal, path};

    #[test]
    fn labeled_counts() {
        assert_eq!(labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(labeled_graphs(4).unwrap().filter(Graph::is_connected).count(), 38);
        let reps: Vec<usize> = (1..=5).map(|n| connected_representatives(n).unwrap().len()).collect();
        assert_eq!(reps, vec![1, 1, 2, 6, 21]);
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn small_sweeps() {
        let r = sweep(4, ClassFilter::DiameterEquals(2), Some(&complete_minus_edge(4).unwrap()), 2).unwrap();
        assert_eq!(r.graphs_scanned, 64);
        assert_eq!(r.matched_prediction, Some(true));
        assert_eq!(r.iso_classes, 1);
        assert_eq!(r.tie_set.len(), 6);

        let r = sweep(5, ClassFilter::CutVerticesEquals(1), Some(&g_extremal(5, 1).unwrap()), 2).unwrap();
        assert_eq!(r.matched_prediction, Some(true));

        for n in [4, 5] {
            let r = sweep(n, ClassFilter::AllConnected, Some(&complete(n).unwrap()), 2).unwrap();
            assert_eq!(r.matched_prediction, Some(true));
            assert_eq!(r.tie_set.len(), 1);
        }
    }

    #[test]
    fn path_class_is_whole_tie_set() {
        let r = sweep(4, ClassFilter::DiameterEquals(3), Some(&path(4).unwrap()), 1).unwrap();
        assert_eq!(r.class_size, 12);
        assert_eq!(r.tie_set.len(), 12);
        assert_eq!(r.matched_prediction, Some(true));
    }

    #[test]
    fn filter_ranges() {
        assert!(sweep(5, ClassFilter::DiameterEquals(5), None, 1).is_err());
        assert!(sweep(5, ClassFilter::DiameterEquals(0), None, 1).is_err());
        assert!(sweep(5, ClassFilter::CutVerticesEquals(4), None, 1).is_err());
        assert!(sweep(8, ClassFilter::AllConnected, None, 1).is_err());
        assert!(sweep(4, ClassFilter::AllConnected, None, 0).is_err());
        let r = sweep(1, ClassFilter::AllConnected, None, 1).unwrap();
        assert_eq!(r.class_size, 1);
        assert_eq!(r.max_slee, Some(1.0));
    }

    #[test]
    fn merge_is_order_independent() {
        let offers = [(1u64, 5.0), (2, 7.0), (3, 7.0 + 1e-12), (4, 6.0), (5, 7.0)];
        let mut whole = Partial::empty();
        for &(m, v) in &offers {
            whole.offer(m, v);
        }
        let mut a = Partial::empty();
        let mut b = Partial::empty();
        for &(m, v) in &offers[..2] {
            a.offer(m, v);
        }
        for &(m, v) in &offers[2..] {
            b.offer(m, v);
        }
        let merged = b.merge(a);
        let mut x: Vec<u64> = whole.ties.iter().map(|t| t.0).collect();
        let mut y: Vec<u64> = merged.ties.iter().map(|t| t.0).collect();
        x.sort_unstable();
        y.sort_unstable();
        assert_eq!(x, vec![2, 3, 5]);
        assert_eq!(x, y);
    }
}
