use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// `G(n, p)` random graph.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.insert_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// `G(n, p)` conditioned on connectivity, by rejection.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Graph> {
    if n > 1 && p <= 0.0 {
        return Err(Error::param("edge probability must be positive for n > 1"));
    }
    loop {
        let g = random_graph(rng, n, p)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// `count` reproducible (graph, non-edge) pairs with orders in `2..=max_n`.
pub fn sample_edge_additions(count: usize, max_n: usize, seed: u64) -> Result<Vec<(Graph, (usize, usize))>> {
    if !(2..=MAX_ORDER).contains(&max_n) {
        return Err(Error::param(format!("max order must lie in 2..={MAX_ORDER}")));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p)?;
        let missing: Vec<_> = g.non_edges().collect();
        if missing.is_empty() {
            continue;
        }
        let e = missing[rng.gen_range(0..missing.len())];
        out.push((g, e));
    }
    Ok(out)
}
