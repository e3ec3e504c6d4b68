//! Exact isomorphism testing by degree-pruned backtracking.
//!
//! Only tie sets of extremal searches are ever compared, so the graphs are
//! tiny and a canonical form is not worth having.

use super::{bits, Graph};

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }

    // Map g's vertices in BFS-ish order of decreasing degree so that
    // adjacency constraints bite early.
    let order = search_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    extend(g, h, &order, 0, &mut map, &mut used)
}

fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u32;
    while order.len() < n {
        // prefer vertices adjacent to those already placed, then high degree
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbor_mask(v) & placed).count_ones(), g.degree(v), usize::MAX - v))
            .expect("unplaced vertex exists");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut u32) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let candidates = h.vertex_mask() & !*used;
    for w in bits(candidates) {
        if h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&pv| g.has_edge(v, pv) == h.has_edge(w, map[pv]));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}

/// Partitions `graphs` into isomorphism classes; each class lists indices in
/// ascending order and classes are ordered by their first index.
pub fn isomorphism_classes(graphs: &[Graph]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        match classes.iter_mut().find(|c| are_isomorphic(&graphs[c[0]], g)) {
            Some(c) => c.push(i),
            None => classes.push(vec![i]),
        }
    }
    classes
}
