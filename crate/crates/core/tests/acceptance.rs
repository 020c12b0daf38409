//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cliquesat::graph6::{from_graph6, to_graph6};
use cliquesat::saturation::{failing_non_edges, theorem_n_bound};
use cliquesat::search::EdgeAugmenter;
use cliquesat::structure::{audit, contraction_bound_holds, Verdict, DEFAULT_PACKING_CAP};
use cliquesat::{
    build_extremal, certify_saturated, compute_sat, contains_pattern, sat_formula, CliquePattern,
    Graph, SaturatedGraph, SearchOptions, VertexSet, Workers,
};
use common::{brute_contains, graph_from_mask, isomorphic, random_connected_graph, rng};

type Outcome = Result<String, String>;

fn pat(p: usize, q: usize, t: usize) -> CliquePattern {
    CliquePattern::new(p, q, t).unwrap()
}

fn c2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn grid() -> Vec<(CliquePattern, usize)> {
    let mut out = Vec::new();
    for p in 2..=4 {
        for q in p..=4 {
            for t in 2..=3 {
                let pat = pat(p, q, t);
                out.push((pat, theorem_n_bound(&pat) + 1));
            }
        }
    }
    out
}

fn workers() -> Workers {
    let cores = std::thread::available_parallelism().map_or(1, |c| c.get());
    Workers::new(cores).expect("thread pool")
}

/// Every class of graphs on `n` vertices, all edge counts.
fn all_classes(n: usize, workers: &Workers) -> Vec<Graph> {
    let mut aug = EdgeAugmenter::new(n);
    let mut out: Vec<Graph> = aug.classes().cloned().collect();
    for _ in 0..c2(n) {
        aug.advance(workers);
        out.extend(aug.classes().cloned());
    }
    out
}

fn formula_cross_check() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for p in 2..=8 {
        let single = pat(p, p, 1);
        for n in p..=60 {
            let got = sat_formula(n, &single).map_err(|e| e.to_string())?;
            let want = c2(n) - c2(n - p + 2);
            if got != want {
                return Err(format!("p={p} n={n}: {got} != {want}"));
            }
            points += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{points} points"))
}

fn construction_grid(workers: &Workers) -> Outcome {
    let mut slowest = Duration::ZERO;
    for (p, n) in grid() {
        let start = Instant::now();
        let g = build_extremal(n, &p).map_err(|e| e.to_string())?;
        if contains_pattern(&g, &p).is_some() {
            return Err(format!("{p} n={n}: construction contains the pattern"));
        }
        let verdict = cliquesat::saturation::certify_saturated_with(&g, &p, workers);
        if !verdict.saturated {
            return Err(format!(
                "{p} n={n}: not saturated, witness {:?}",
                verdict.failing_witness
            ));
        }
        let want = sat_formula(n, &p).unwrap();
        if g.edge_count() != want {
            return Err(format!(
                "{p} n={n}: {} edges, formula {want}",
                g.edge_count()
            ));
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(60) {
            return Err(format!("{p} n={n}: took {elapsed:?}"));
        }
        slowest = slowest.max(elapsed);
    }
    Ok(format!("{} points, slowest {slowest:.1?}", grid().len()))
}

fn uniqueness(
    n: usize,
    p: CliquePattern,
    want_sat: usize,
    limit: Duration,
    workers: &Workers,
) -> Result<(String, Vec<Graph>), String> {
    let opts = SearchOptions {
        workers: workers.clone(),
        ..SearchOptions::default()
    };
    let start = Instant::now();
    let report = compute_sat(n, &p, &opts).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if report.sat_value != Some(want_sat) {
        return Err(format!(
            "sat_value {:?}, expected {want_sat}",
            report.sat_value
        ));
    }
    if report.extremal_forms.len() != 1 {
        return Err(format!("{} extremal classes", report.extremal_forms.len()));
    }
    let found = report.extremal_forms[0].graph();
    let construction = build_extremal(n, &p).unwrap();
    if !isomorphic(&found, &construction) {
        return Err(format!(
            "extremal class {} is not the construction",
            report.extremal_forms[0]
        ));
    }
    if elapsed > limit {
        return Err(format!("took {elapsed:?}"));
    }
    let classes: usize = report.tallies.iter().map(|t| t.classes).sum();
    Ok((
        format!(
            "sat={want_sat}, one class {}, {classes} classes examined",
            report.extremal_forms[0]
        ),
        vec![found],
    ))
}

fn structure_audit(graphs: &[(CliquePattern, Graph)]) -> Outcome {
    let mut checks = 0;
    for (p, g) in graphs {
        let sat = SaturatedGraph::certify(g.clone(), p).map_err(|e| format!("{p}: {e}"))?;
        let report = audit(&sat, None, DEFAULT_PACKING_CAP).map_err(|e| format!("{p}: {e}"))?;
        if let Some(bad) = report.failures().next() {
            return Err(format!("{p} n={}: {bad}", g.n()));
        }
        let grid_point = g.n() == theorem_n_bound(p) + 1;
        if grid_point && p.t() == 2 && report.verdicts.iter().any(|c| c.partial) {
            return Err(format!("{p} n={}: packing enumeration hit the cap", g.n()));
        }
        checks += report
            .verdicts
            .iter()
            .filter(|c| c.verdict != Verdict::NotApplicable)
            .count();
    }
    Ok(format!(
        "{} graphs, {checks} applicable checks",
        graphs.len()
    ))
}

fn contraction_suite(workers: &Workers) -> Outcome {
    let mut cases = 0u64;
    for n in 1..=7 {
        for h in all_classes(n, workers)
            .into_iter()
            .filter(Graph::is_connected)
        {
            for mask in 1u32..1 << n {
                let x: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if !contraction_bound_holds(&h, x).map_err(|e| e.to_string())? {
                    return Err(format!("{h:?} X={x}"));
                }
                cases += 1;
            }
        }
    }
    let mut r = rng(2024);
    for _ in 0..1000 {
        let n = rand::Rng::gen_range(&mut r, 1..=10);
        let h = random_connected_graph(&mut r, n);
        let mask: u32 = rand::Rng::gen_range(&mut r, 1..1u32 << n);
        let x: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if !contraction_bound_holds(&h, x).map_err(|e| e.to_string())? {
            return Err(format!("{h:?} X={x}"));
        }
    }
    Ok(format!("{cases} exhaustive cases, 1000 random"))
}

fn detector_oracle(workers: &Workers) -> Outcome {
    let patterns = [pat(2, 2, 2), pat(2, 3, 2), pat(3, 3, 2)];
    let mut classes = 0;
    for n in 1..=8 {
        for g in all_classes(n, workers) {
            for p in &patterns {
                if contains_pattern(&g, p).is_some() != brute_contains(&g, &p.sizes()) {
                    return Err(format!("{p} disagrees on {g:?}"));
                }
            }
            classes += 1;
        }
    }
    Ok(format!("{classes} classes, 3 patterns"))
}

fn negative_controls(workers: &Workers) -> Outcome {
    let (mut deletions, mut additions) = (0, 0);
    for (p, n) in grid() {
        let h = build_extremal(n, &p).unwrap();
        for (u, v) in h.edges() {
            let g = h.remove_edge(u, v).unwrap();
            let verdict = certify_saturated(&g, &p);
            if !verdict.free || verdict.saturated {
                return Err(format!(
                    "{p} n={n}: deleting ({u},{v}) left a saturated graph"
                ));
            }
            if !failing_non_edges(&g, &p, workers).contains(&(u, v)) {
                return Err(format!(
                    "{p} n={n}: ({u},{v}) is not a failing witness after deletion"
                ));
            }
            deletions += 1;
        }
        for (u, v) in h.non_edges() {
            if contains_pattern(&h.add_edge(u, v).unwrap(), &p).is_none() {
                return Err(format!("{p} n={n}: adding ({u},{v}) stays pattern-free"));
            }
            additions += 1;
        }
    }
    Ok(format!("{deletions} deletions, {additions} additions"))
}

fn serialization() -> Outcome {
    let mut graphs = 0u64;
    for n in 1..=6 {
        for mask in 0u64..1 << c2(n) {
            let g = graph_from_mask(n, mask);
            let text = to_graph6(&g).map_err(|e| e.to_string())?;
            if from_graph6(&text).map_err(|e| e.to_string())? != g {
                return Err(format!("round trip broke on {text}"));
            }
            graphs += 1;
        }
    }
    let k3 = to_graph6(&Graph::complete(3).unwrap()).unwrap();
    let p3 = to_graph6(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
    if k3 != "Bw" || p3 != "Bg" {
        return Err(format!("K_3 -> {k3:?}, P_3 -> {p3:?}"));
    }
    Ok(format!("{graphs} labelled graphs"))
}

fn main() -> ExitCode {
    let workers = workers();
    let mut failures = 0;
    let mut report = |id: u32, what: &str, outcome: Outcome| match outcome {
        Ok(detail) => println!("[PASS] criterion {id}: {what} ({detail})"),
        Err(why) => {
            failures += 1;
            println!("[FAIL] criterion {id}: {what}: {why}");
        }
    };

    report(
        1,
        "formula cross-check against clique saturation",
        formula_cross_check(),
    );
    report(
        2,
        "construction certification grid",
        construction_grid(&workers),
    );

    let mut audited: Vec<(CliquePattern, Graph)> = grid()
        .into_iter()
        .map(|(p, n)| (p, build_extremal(n, &p).unwrap()))
        .collect();
    let mut searched =
        |n, p: CliquePattern, sat, limit| match uniqueness(n, p, sat, limit, &workers) {
            Ok((detail, found)) => {
                audited.extend(found.into_iter().map(|g| (p, g)));
                Ok(detail)
            }
            Err(e) => Err(e),
        };
    let third = searched(7, pat(2, 2, 2), 3, Duration::from_secs(10));
    let fourth = searched(13, pat(2, 3, 2), 6, Duration::from_secs(600));
    report(3, "uniqueness at n=7 for K_2 ∪ K_2", third);
    report(4, "uniqueness at n=13 for K_2 ∪ K_3", fourth);
    report(5, "structure audit", structure_audit(&audited));
    report(6, "contraction bound", contraction_suite(&workers));
    report(
        7,
        "detector against tuple search",
        detector_oracle(&workers),
    );
    report(8, "negative controls", negative_controls(&workers));
    report(9, "graph6 serialization", serialization());

    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
