use serde::Serialize;
use serde_json::{json, Map, Value};

use slee_core::families::{
    complete, complete_minus_edge, g_extremal, h_extremal, h_family_specs, h_member, path,
};
use slee_core::graph::{parse_graph6, write_graph6, Distance};
use slee_core::search::{
    connected_representatives, default_workers, labeled_graphs, relocation_instances, sweep,
    verify_diametral_neighbor_bound, verify_dominance_preservation, verify_edge_addition, verify_edge_shift,
    verify_h_descent, verify_moment_walk, verify_pendant_relocation, verify_theorem_cut, verify_theorem_diameter,
    ClassFilter,
};
use slee_core::spectra::{
    estrada_indices_with_tol, moment_table, slee_series, spectrum, MatrixKind, DEFAULT_EIGEN_TOL,
    DEFAULT_SERIES_TOL,
};
use slee_core::walks::{default_depth, enumerate_walks, SemiEdgeWalk, ENUM_MAX_DEPTH, ENUM_MAX_ORDER};
use slee_core::Graph;

use crate::input::{read_graphs, read_one};
use crate::output::{emit, emit_report, Format};
use crate::{Command, Failure, FamilyKind, FilterKind, Target, VerifyParams};

pub fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Compute { io, tol, series_tol } => {
            let tol = tolerance("--tol", tol, DEFAULT_EIGEN_TOL)?;
            let series_tol = tolerance("--series-tol", series_tol, DEFAULT_SERIES_TOL)?;
            let records = read_graphs(io.input.as_deref())?
                .iter()
                .map(|g| compute_record(g, tol, series_tol))
                .collect::<Result<_, _>>()?;
            emit(records, io.format)
        }
        Command::Moments { io, kmax } => {
            let records = read_graphs(io.input.as_deref())?
                .iter()
                .map(|g| {
                    let table = moment_table(g, kmax);
                    object(json!({
                        "graph6": write_graph6(g),
                        "n": g.order(),
                        "k_max": kmax,
                        "traces": table.traces.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    }))
                })
                .collect();
            emit(records, io.format)
        }
        Command::Walks { io, kmax, x, y, list } => {
            let graphs = read_graphs(io.input.as_deref())?;
            let mut records = Vec::new();
            for g in &graphs {
                records.extend(walk_records(g, kmax, x.zip(y), list)?);
            }
            emit(records, io.format)
        }
        Command::Family {
            family,
            n,
            d,
            j,
            r,
            format,
        } => family_cmd(family, n, d, j, r, format),
        Command::Sweep {
            n,
            filter,
            value,
            workers,
            predicted,
            format,
        } => {
            let filter = match (filter, value) {
                (FilterKind::Connected, None) => ClassFilter::AllConnected,
                (FilterKind::Diameter, Some(d)) => ClassFilter::DiameterEquals(d),
                (FilterKind::Cut, Some(r)) => ClassFilter::CutVerticesEquals(r),
                (FilterKind::Connected, Some(_)) => {
                    return Err(Failure::Usage("--value is not used with --filter connected".into()))
                }
                (_, None) => return Err(Failure::Usage("--filter diameter/cut needs --value".into())),
            };
            let predicted = predicted
                .map(|p| parse_graph6(&p).map_err(|e| Failure::Usage(format!("--predicted: {e}"))))
                .transpose()?;
            let report = sweep(n, filter, predicted.as_ref(), worker_count(workers)?)?;
            let value = to_value(&report)?;
            match format {
                Format::Json => emit_report(value)?,
                other => emit(vec![object(value)], other)?,
            }
            if report.matched_prediction == Some(false) {
                return Err(Failure::Verification);
            }
            Ok(())
        }
        Command::Verify { target, params } => verify_cmd(target, params),
    }
}

fn tolerance(flag: &str, given: Option<f64>, default: f64) -> Result<f64, Failure> {
    match given {
        None => Ok(default),
        Some(t) if t > 0.0 && t.is_finite() => Ok(t),
        Some(t) => Err(Failure::Usage(format!("{flag} must be positive and finite, got {t}"))),
    }
}

fn worker_count(given: Option<usize>) -> Result<usize, Failure> {
    match given {
        None => Ok(default_workers()),
        Some(0) => Err(Failure::Usage("--workers must be at least 1".into())),
        Some(w) => Ok(w),
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

fn to_value<T: Serialize>(x: &T) -> Result<Value, Failure> {
    serde_json::to_value(x).map_err(|e| Failure::Runtime(e.to_string()))
}

fn compute_record(g: &Graph, tol: f64, series_tol: f64) -> Result<Map<String, Value>, Failure> {
    let idx = estrada_indices_with_tol(g, tol)?;
    let q = spectrum(g, MatrixKind::SignlessLaplacian, tol)?;
    Ok(object(json!({
        "graph6": write_graph6(g),
        "n": g.order(),
        "m": g.size(),
        "EE": idx.ee,
        "LEE": idx.lee,
        "SLEE": idx.slee,
        "slee_series": slee_series(g, series_tol)?,
        "q_spectrum": q.values.iter().map(|&x| if x.abs() < tol { 0.0 } else { x }).collect::<Vec<_>>(),
    })))
}

fn render_walk(w: &SemiEdgeWalk) -> String {
    let mut s = w.vertices[0].to_string();
    for (e, v) in w.edges.iter().zip(&w.vertices[1..]) {
        s.push_str(&format!(" [{} {}] {v}", e.0, e.1));
    }
    s
}

fn walk_records(
    g: &Graph,
    kmax: usize,
    ends: Option<(usize, usize)>,
    list: bool,
) -> Result<Vec<Map<String, Value>>, Failure> {
    let table = moment_table(g, kmax);
    let mut out = Vec::new();
    for k in 0..=kmax {
        let power = table.power(k);
        let mut rec = object(json!({ "graph6": write_graph6(g), "k": k }));
        match ends {
            None => {
                let counts: Vec<Vec<String>> = power.rows().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
                rec.insert("counts".into(), json!(counts));
            }
            Some((x, y)) => {
                g.check_vertex(x)?;
                g.check_vertex(y)?;
                let enumerable = g.order() <= ENUM_MAX_ORDER && k <= ENUM_MAX_DEPTH;
                let walks = if enumerable { Some(enumerate_walks(g, x, y, k)?) } else { None };
                rec.insert("x".into(), json!(x));
                rec.insert("y".into(), json!(y));
                rec.insert("count".into(), json!(power.get(x, y).to_string()));
                rec.insert("enumerated".into(), json!(walks.as_ref().map(Vec::len)));
                if list {
                    let listed = walks.as_ref().map(|ws| ws.iter().map(render_walk).collect::<Vec<_>>());
                    rec.insert("walks".into(), json!(listed));
                }
            }
        }
        out.push(rec);
    }
    Ok(out)
}

fn need(name: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn family_cmd(
    family: FamilyKind,
    n: usize,
    d: Option<usize>,
    j: Option<usize>,
    r: Option<usize>,
    format: Format,
) -> Result<(), Failure> {
    let members: Vec<(Graph, Option<Vec<usize>>)> = match family {
        FamilyKind::H => h_family_specs(n, need("d", d)?, need("j", j)?)?
            .map(|s| Ok((h_member(&s)?, Some(s.assignment))))
            .collect::<Result<_, slee_core::Error>>()?,
        FamilyKind::H1 => vec![(h_extremal(n, need("d", d)?)?, None)],
        FamilyKind::G => vec![(g_extremal(n, need("r", r)?)?, None)],
        FamilyKind::Path => vec![(path(n)?, None)],
        FamilyKind::Complete => vec![(complete(n)?, None)],
        FamilyKind::CompleteMinusEdge => vec![(complete_minus_edge(n)?, None)],
    };
    if format == Format::Graph6 {
        for (g, _) in &members {
            println!("{}", write_graph6(g));
        }
        return Ok(());
    }
    let records = members
        .into_iter()
        .map(|(g, assignment)| {
            let mut rec = object(json!({ "graph6": write_graph6(&g), "n": g.order(), "m": g.size() }));
            if let Some(a) = assignment {
                rec.insert("assignment".into(), json!(a));
            }
            rec
        })
        .collect();
    emit(records, format)
}

/// Emits `{target, holds, report}` and maps `holds = false` to exit 1.
fn finish(target: &str, holds: bool, report: Value) -> Result<(), Failure> {
    emit_report(json!({ "target": target, "holds": holds, "report": report }))?;
    if holds {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Graphs from `--input`, or every connected graph on up to `--n` vertices
/// when no input is given.
fn graphs_or_exhaustive(p: &VerifyParams, labeled: bool) -> Result<Vec<Graph>, Failure> {
    match (&p.input, p.n) {
        (None, Some(n)) => {
            let mut all = Vec::new();
            for k in 1..=n {
                if labeled {
                    all.extend(labeled_graphs(k)?.filter(Graph::is_connected));
                } else {
                    all.extend(connected_representatives(k)?);
                }
            }
            Ok(all)
        }
        (input, _) => read_graphs(input.as_deref()),
    }
}

fn verify_cmd(target: Target, p: VerifyParams) -> Result<(), Failure> {
    match target {
        Target::TheoremDiameter => {
            let r = verify_theorem_diameter(need("n", p.n)?, need("d", p.d)?, worker_count(p.workers)?)?;
            finish("theorem-diameter", r.matched_prediction == Some(true), to_value(&r)?)
        }
        Target::TheoremCut => {
            let r = verify_theorem_cut(need("n", p.n)?, need("r", p.r)?, worker_count(p.workers)?)?;
            finish("theorem-cut", r.matched_prediction == Some(true), to_value(&r)?)
        }
        Target::LemmaEdgeAdd => {
            let mut reports = Vec::new();
            for g in read_graphs(p.input.as_deref())? {
                match (p.u, p.v) {
                    (Some(u), Some(v)) => reports.push(verify_edge_addition(&g, u, v)?),
                    (None, None) => {
                        for (u, v) in g.non_edges() {
                            reports.push(verify_edge_addition(&g, u, v)?);
                        }
                    }
                    _ => return Err(Failure::Usage("give both --u and --v, or neither".into())),
                }
            }
            finish("lemma-edge-add", reports.iter().all(|r| r.holds), to_value(&reports)?)
        }
        Target::LemmaShift => {
            let g = read_one(p.input.as_deref())?;
            let k = p.kmax.unwrap_or_else(|| default_depth(g.order()));
            let r = verify_edge_shift(&g, need("v", p.v)?, need("u", p.u)?, &p.w, k)?;
            finish("lemma-shift", r.holds.unwrap_or(true), to_value(&r)?)
        }
        Target::LemmaRelocate => {
            let reports = relocation_instances()
                .iter()
                .map(verify_pendant_relocation)
                .collect::<Result<Vec<_>, _>>()?;
            let holds = reports.iter().all(|r| r.holds && r.cut_vertices_before == r.cut_vertices_after);
            finish("lemma-relocate", holds, to_value(&reports)?)
        }
        Target::DominancePreserve => {
            let k = p.kmax.unwrap_or(12);
            let reports = graphs_or_exhaustive(&p, false)?
                .iter()
                .map(|g| verify_dominance_preservation(g, k))
                .collect::<Result<Vec<_>, _>>()?;
            let failures: Vec<_> = reports.iter().flat_map(|r| r.failures.clone()).collect();
            let summary = json!({
                "graphs_checked": reports.len(),
                "depth": k,
                "vertex_instances": reports.iter().map(|r| r.vertex_instances).sum::<usize>(),
                "pair_instances": reports.iter().map(|r| r.pair_instances).sum::<usize>(),
                "failures": failures,
            });
            finish("dominance-preserve", failures.is_empty(), summary)
        }
        Target::HDescent => {
            let r = verify_h_descent(need("n", p.n)?, need("d", p.d)?, need("j", p.j)?)?;
            finish("h-descent", r.holds, to_value(&r)?)
        }
        Target::NeighborBound => {
            let mut checked = 0usize;
            let mut skipped = 0usize;
            let mut failures = Vec::new();
            for g in graphs_or_exhaustive(&p, true)? {
                if p.input.is_none() && p.n.is_some() && g.diameter() < Distance::Finite(2) {
                    skipped += 1;
                    continue;
                }
                let r = verify_diametral_neighbor_bound(&g)?;
                checked += 1;
                if !r.holds {
                    failures.push(r);
                }
            }
            let summary = json!({ "checked": checked, "skipped_diameter_below_2": skipped, "failures": failures });
            finish("neighbor-bound", failures.is_empty(), summary)
        }
        Target::MomentWalk => {
            let r = verify_moment_walk(need("n", p.n)?, p.kmax.unwrap_or(6))?;
            finish("moment-walk", r.holds, to_value(&r)?)
        }
    }
}
