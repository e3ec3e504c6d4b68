use nalgebra::DMatrix;
use proptest::prelude::*;

use slee_core::graph::{are_isomorphic, parse_graph6, write_graph6, Distance};
use slee_core::spectra::{
    build_matrix, estrada_indices, moment_table, slee, slee_series, spectrum, MatrixKind, DEFAULT_EIGEN_TOL,
    DEFAULT_SERIES_TOL,
};
use slee_core::walks::{s_dominance, Relation};
use slee_core::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// All-pairs distances by Floyd–Warshall.
fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
        for v in g.neighbors(u) {
            row[v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn components_without(g: &Graph, skip: usize) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    seen[skip] = true;
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

fn nalgebra_eigenvalues(g: &Graph, kind: MatrixKind) -> Vec<f64> {
    let m = build_matrix(g, kind);
    let n = m.dim();
    let dm = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    let mut v: Vec<f64> = dm.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(10)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn diameter_matches_floyd_warshall(g in graph(8)) {
        let d = floyd(&g);
        let expected = if d.iter().flatten().any(Option::is_none) {
            Distance::Infinite
        } else {
            Distance::Finite(d.iter().flatten().map(|x| x.unwrap()).max().unwrap())
        };
        prop_assert_eq!(g.diameter(), expected);
        for (u, row) in d.iter().enumerate() {
            let bfs: Vec<Option<usize>> = g.distances_from(u).into_iter().map(Distance::finite).collect();
            prop_assert_eq!(&bfs, row);
        }
    }

    #[test]
    fn cut_vertices_match_deletion(g in graph(6)) {
        let base = g.component_count();
        let brute: Vec<usize> = (0..g.order())
            .filter(|&v| g.order() > 1 && components_without(&g, v) > base - usize::from(g.degree(v) == 0))
            .collect();
        prop_assert_eq!(g.cut_vertices(), brute);
    }

    #[test]
    fn relabeling_is_isomorphic((g, perm) in graph(7).prop_flat_map(|g| (Just(g), permutation(g.order())))) {
        let h = g.relabeled(&perm).unwrap();
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert!(are_isomorphic(&h, &g));
        prop_assert!(are_isomorphic(&g, &g));
        prop_assert!((slee(&g).unwrap() - slee(&h).unwrap()).abs() <= 1e-9 * slee(&g).unwrap());
    }

    #[test]
    fn isomorphism_respects_edge_count(a in graph(6), b in graph(6)) {
        if are_isomorphic(&a, &b) {
            prop_assert_eq!(a.order(), b.order());
            prop_assert_eq!(a.size(), b.size());
            let (mut da, mut db) = (a.degrees(), b.degrees());
            da.sort_unstable();
            db.sort_unstable();
            prop_assert_eq!(da, db);
        }
    }

    #[test]
    fn jacobi_matches_nalgebra(g in graph(9)) {
        for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian] {
            let ours = spectrum(&g, kind, DEFAULT_EIGEN_TOL).unwrap().values;
            let theirs = nalgebra_eigenvalues(&g, kind);
            for (a, b) in ours.iter().zip(&theirs) {
                prop_assert!((a - b).abs() < 1e-8, "{kind:?}: {ours:?} vs {theirs:?}");
            }
        }
    }

    #[test]
    fn signless_laplacian_is_psd_and_sums_to_twice_size(g in graph(9)) {
        let q = spectrum(&g, MatrixKind::SignlessLaplacian, DEFAULT_EIGEN_TOL).unwrap().values;
        prop_assert!(q.iter().all(|&x| x > -1e-9));
        prop_assert!((q.iter().sum::<f64>() - 2.0 * g.size() as f64).abs() < 1e-8);
        prop_assert!(q.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn moments_match_eigenvalue_powers(g in graph(7)) {
        let q = spectrum(&g, MatrixKind::SignlessLaplacian, DEFAULT_EIGEN_TOL).unwrap().values;
        let table = moment_table(&g, 8);
        for k in 0..=8 {
            let from_spectrum: f64 = q.iter().map(|x| x.powi(k as i32)).sum();
            let exact: f64 = table.traces[k].to_string().parse().unwrap();
            prop_assert!((from_spectrum - exact).abs() <= 1e-8 * exact.max(1.0));
        }
    }

    #[test]
    fn bipartite_slee_equals_lee(g in graph(8).prop_filter("bipartite", Graph::is_bipartite)) {
        let idx = estrada_indices(&g).unwrap();
        prop_assert!((idx.slee - idx.lee).abs() <= 1e-9 * idx.slee);
    }

    #[test]
    fn series_agrees_with_eigen_sum(g in graph(10)) {
        let a = slee(&g).unwrap();
        let b = slee_series(&g, DEFAULT_SERIES_TOL).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * b);
    }

    #[test]
    fn edge_addition_raises_slee(g in connected(7), pick in any::<prop::sample::Index>()) {
        let missing: Vec<_> = g.non_edges().collect();
        if !missing.is_empty() {
            let (u, v) = missing[pick.index(missing.len())];
            prop_assert!(slee(&g.with_edge(u, v).unwrap()).unwrap() > slee(&g).unwrap());
        }
    }

    #[test]
    fn dominance_is_antisymmetric(g in connected(6), a in 0usize..6, b in 0usize..6) {
        let (a, b) = (a % g.order(), b % g.order());
        let ab = s_dominance(&g, a, b, 12).unwrap();
        let ba = s_dominance(&g, b, a, 12).unwrap();
        if ab.relation == Relation::Weak {
            prop_assert_eq!(ba.relation, Relation::Weak);
        }
        prop_assert!(!(ab.is_strict() && ba.holds()));
    }
}
