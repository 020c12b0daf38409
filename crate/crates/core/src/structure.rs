//! Residue objects of a saturated graph and checks over them.
//!
//! For a saturated `G` take the least-index minimum-degree vertex `v`,
//! `S = N(v)`, and a packing `F = F_1 ∪ … ∪ F_{t-1}` of `q`-cliques avoiding
//! `S`. From these come `R_F` (vertices outside `V(F) ∪ S` with a neighbour in
//! `F`), `A_F` (edges with both ends outside `S` that are not inside a part of
//! `F`) and the components of `G[R_F ∪ V(F)]` with the edges of `F` removed.
//! Each check evaluates one structural statement literally on these objects
//! and reports a counterexample when it fails.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::parallel::Workers;
use crate::patterns::{
    cliques, enumerate_packings, find_disjoint_cliques, CliquePattern, Embedding,
};
use crate::saturation::{below_theorem_bound, build_extremal, certify_saturated_with, sat_formula};

/// Default cap on enumerated packings per vertex.
pub const DEFAULT_PACKING_CAP: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "N/A",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub verdict: Verdict,
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Set when an enumeration cap truncated the evidence.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub partial: bool,
}

impl CheckResult {
    fn pass(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            verdict: Verdict::Pass,
            counterexample: None,
            note: None,
            partial: false,
        }
    }

    fn fail(name: &str, counterexample: String) -> Self {
        CheckResult {
            verdict: Verdict::Fail,
            counterexample: Some(counterexample),
            ..CheckResult::pass(name)
        }
    }

    fn not_applicable(name: &str, reason: &str) -> Self {
        CheckResult {
            verdict: Verdict::NotApplicable,
            note: Some(reason.to_string()),
            ..CheckResult::pass(name)
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    fn from_first_failure(name: &str, failure: Option<String>) -> Self {
        match failure {
            Some(c) => CheckResult::fail(name, c),
            None => CheckResult::pass(name),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.verdict)?;
        if self.partial {
            write!(f, " (partial)")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample={c}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " note={n}")?;
        }
        Ok(())
    }
}

/// A graph certified saturated for a pattern.
#[derive(Clone, Debug)]
pub struct SaturatedGraph {
    graph: Graph,
    pattern: CliquePattern,
}

impl SaturatedGraph {
    pub fn certify(graph: Graph, pattern: &CliquePattern) -> Result<SaturatedGraph> {
        SaturatedGraph::certify_with(graph, pattern, &Workers::Sequential)
    }

    pub fn certify_with(
        graph: Graph,
        pattern: &CliquePattern,
        workers: &Workers,
    ) -> Result<SaturatedGraph> {
        if graph.n() == 0 || !certify_saturated_with(&graph, pattern, workers).saturated {
            return Err(Error::NotSaturated);
        }
        Ok(SaturatedGraph {
            graph,
            pattern: *pattern,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn pattern(&self) -> &CliquePattern {
        &self.pattern
    }

    /// Least-index vertex of minimum degree.
    pub fn pivot(&self) -> usize {
        self.graph.min_degree_vertex().expect("nonempty graph")
    }

    /// At the formula edge count with `n` above the theorem bound, i.e. the
    /// hypotheses under which the structural statements are claimed.
    pub fn in_minimum_regime(&self) -> bool {
        let n = self.graph.n();
        !below_theorem_bound(n, &self.pattern)
            && sat_formula(n, &self.pattern).is_ok_and(|m| m == self.graph.edge_count())
    }
}

/// One component of `G[R_F ∪ V(F)] − E(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: VertexSet,
    pub edges: usize,
    /// `|V(C) ∩ V(F)|`
    pub f_vertices: usize,
    /// `|V(C) ∩ R_F|`
    pub r_vertices: usize,
}

impl Component {
    pub fn is_tree(&self) -> bool {
        self.edges + 1 == self.vertices.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidueReport {
    pub n: usize,
    pub pattern: CliquePattern,
    pub edges: usize,
    pub below_theorem_bound: bool,
    pub minimum_regime: bool,
    pub v: usize,
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "F")]
    pub f: Embedding,
    #[serde(rename = "R_F")]
    pub r_f: VertexSet,
    #[serde(rename = "A_F")]
    pub a_f: Vec<(usize, usize)>,
    pub components: Vec<Component>,
    pub verdicts: Vec<CheckResult>,
    #[serde(skip)]
    graph: Graph,
}

impl ResidueReport {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.verdicts.iter().filter(|c| c.failed())
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let pat = &self.pattern;
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "pattern: {pat}");
        let _ = writeln!(out, "p: {}\nq: {}\nt: {}", pat.p(), pat.q(), pat.t());
        let _ = writeln!(out, "edges: {}", self.edges);
        let _ = writeln!(out, "below_theorem_bound: {}", self.below_theorem_bound);
        let _ = writeln!(out, "minimum_regime: {}", self.minimum_regime);
        let _ = writeln!(out, "v: {}", self.v);
        let _ = writeln!(out, "S: {}", self.s);
        let _ = writeln!(out, "F: {}", self.f);
        let _ = writeln!(out, "R_F: {}", self.r_f);
        let af: Vec<String> = self.a_f.iter().map(|(x, y)| format!("{x}-{y}")).collect();
        let _ = writeln!(out, "A_F: {}", af.join(" "));
        let _ = writeln!(out, "A_F_count: {}", self.a_f.len());
        let _ = writeln!(out, "components: {}", self.components.len());
        for (i, c) in self.components.iter().enumerate() {
            let _ = writeln!(
                out,
                "component_{i}: vertices={} edges={} f_vertices={} r_vertices={} tree={}",
                c.vertices,
                c.edges,
                c.f_vertices,
                c.r_vertices,
                c.is_tree()
            );
        }
        for check in &self.verdicts {
            let _ = writeln!(out, "check {check}");
        }
        out
    }
}

/// Residue objects of `g`, certifying saturation first.
pub fn residue(g: &Graph, pat: &CliquePattern, f: Option<Embedding>) -> Result<ResidueReport> {
    let sat = SaturatedGraph::certify(g.clone(), pat)?;
    residue_of(&sat, f)
}

/// Residue objects for a given (or the default) packing `F`.
pub fn residue_of(sat: &SaturatedGraph, f: Option<Embedding>) -> Result<ResidueReport> {
    let g = sat.graph();
    let pat = sat.pattern();
    let v = sat.pivot();
    let s = g.neighbors(v);
    let outside = g.vertices() - s;
    let sizes = pat.packing_sizes();
    let f = match f {
        Some(f) => {
            if !f.is_valid_in(g, &sizes) || !f.vertices().is_disjoint(&s) {
                return Err(Error::InvalidPacking(format!(
                    "{f} is not a packing of {} disjoint K_{} avoiding S={s}",
                    sizes.len(),
                    pat.q()
                )));
            }
            f
        }
        None => find_disjoint_cliques(g, &sizes, outside).ok_or(Error::NoPacking {
            count: sizes.len(),
            size: pat.q(),
        })?,
    };
    let vf = f.vertices();
    let r_f: VertexSet = (outside - vf)
        .iter()
        .filter(|&w| !g.neighbors(w).is_disjoint(&vf))
        .collect();
    let in_same_part =
        |x: usize, y: usize| f.parts().iter().any(|p| p.contains(x) && p.contains(y));
    let a_f: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(x, y)| outside.contains(x) && outside.contains(y) && !in_same_part(x, y))
        .collect();
    let components = residual_components(g, &f, r_f);
    Ok(ResidueReport {
        n: g.n(),
        pattern: *pat,
        edges: g.edge_count(),
        below_theorem_bound: below_theorem_bound(g.n(), pat),
        minimum_regime: sat.in_minimum_regime(),
        v,
        s,
        f,
        r_f,
        a_f,
        components,
        verdicts: Vec::new(),
        graph: g.clone(),
    })
}

/// Neighbourhoods inside `R_F ∪ V(F)` after deleting the edges inside each part.
fn residual_rows(g: &Graph, f: &Embedding, r_f: VertexSet) -> Vec<VertexSet> {
    let w = r_f | f.vertices();
    (0..g.n())
        .map(|x| {
            if !w.contains(x) {
                return VertexSet::EMPTY;
            }
            let own = f
                .parts()
                .iter()
                .find(|p| p.contains(x))
                .copied()
                .unwrap_or_default();
            (g.neighbors(x) & w) - own
        })
        .collect()
}

fn residual_components(g: &Graph, f: &Embedding, r_f: VertexSet) -> Vec<Component> {
    let rows = residual_rows(g, f, r_f);
    let vf = f.vertices();
    let mut left = r_f | vf;
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for x in frontier.iter() {
                next |= rows[x];
            }
            frontier = next - comp;
            comp |= frontier;
        }
        let edges = comp.iter().map(|x| (rows[x] & comp).len()).sum::<usize>() / 2;
        out.push(Component {
            vertices: comp,
            edges,
            f_vertices: (comp & vf).len(),
            r_vertices: (comp & r_f).len(),
        });
        left = left - comp;
    }
    out
}

/// No edge has both ends outside `V(F) ∪ S`.
pub fn check_outside_empty(report: &ResidueReport) -> CheckResult {
    let rest = report.graph.vertices() - report.s - report.f.vertices();
    let bad = report
        .graph
        .edges()
        .find(|&(x, y)| rest.contains(x) && rest.contains(y));
    CheckResult::from_first_failure("outside_empty", bad.map(|(x, y)| format!("edge {x}-{y}")))
}

/// `|A_F| = (t-1)q`.
pub fn check_af_count(report: &ResidueReport) -> CheckResult {
    let expected = (report.pattern.t() - 1) * report.pattern.q();
    let got = report.a_f.len();
    let res = CheckResult::from_first_failure(
        "af_count",
        (got != expected).then(|| format!("|A_F|={got}, expected {expected}")),
    );
    res.with_note(&format!("|A_F|={got}"))
}

/// `|E(C)| = |V(C) ∩ V(F)|` for every component.
pub fn check_eq1(report: &ResidueReport) -> CheckResult {
    let bad = report.components.iter().find(|c| c.edges != c.f_vertices);
    CheckResult::from_first_failure(
        "edge_count_per_component",
        bad.map(|c| {
            format!(
                "component {} has {} edges and {} F-vertices",
                c.vertices, c.edges, c.f_vertices
            )
        }),
    )
}

/// No component is a tree avoiding `R_F`.
pub fn check_lemma5(report: &ResidueReport) -> CheckResult {
    let bad = report
        .components
        .iter()
        .find(|c| c.is_tree() && c.r_vertices == 0);
    CheckResult::from_first_failure(
        "no_tree_component_without_residue",
        bad.map(|c| format!("tree component {} contains no R_F vertex", c.vertices)),
    )
}

const MIN_DEGREE: &str = "min_degree";
const CLOSURE: &str = "dominating_closure";
const INSIDE_PACKING: &str = "neighbourhood_inside_packing";

/// `δ(G) = p − 2`, claimed for members of the minimum family only.
pub fn check_lemma2(g: &Graph, pat: &CliquePattern) -> CheckResult {
    match SaturatedGraph::certify(g.clone(), pat) {
        Ok(sat) => min_degree_check(&sat),
        Err(_) => CheckResult::not_applicable(MIN_DEGREE, "graph is not saturated"),
    }
}

pub fn min_degree_check(sat: &SaturatedGraph) -> CheckResult {
    if !sat.in_minimum_regime() {
        return CheckResult::not_applicable(
            MIN_DEGREE,
            "needs the formula edge count and n above the theorem bound",
        );
    }
    let delta = sat.graph().min_degree().unwrap_or(0);
    let want = sat.pattern().p() - 2;
    CheckResult::from_first_failure(
        MIN_DEGREE,
        (delta != want).then(|| format!("min degree {delta}, expected {want}")),
    )
}

/// `S = N(v)` is a clique and lies inside `N(u)` for every `u ∉ N[v]`.
pub fn check_dominating_closure(g: &Graph, pat: &CliquePattern) -> CheckResult {
    match SaturatedGraph::certify(g.clone(), pat) {
        Ok(sat) => dominating_closure_check(&sat),
        Err(_) => CheckResult::not_applicable(CLOSURE, "graph is not saturated"),
    }
}

pub fn dominating_closure_check(sat: &SaturatedGraph) -> CheckResult {
    let g = sat.graph();
    let v = sat.pivot();
    let s = g.neighbors(v);
    if !g.is_clique(s) {
        return CheckResult::fail(CLOSURE, format!("S={s} is not a clique"));
    }
    let far = g.vertices() - s.with(v);
    let bad = far.iter().find(|&u| !s.is_subset(&g.neighbors(u)));
    let res = CheckResult::from_first_failure(
        CLOSURE,
        bad.map(|u| format!("u={u} misses {}", s - g.neighbors(u))),
    );
    if s.is_empty() {
        res.with_note("vacuous: S is empty")
    } else {
        res
    }
}

/// `N(u) \ S ⊆ V(F)` for every packing `F` of `(t-1)K_q` in `G − (S ∪ {u, v})`.
pub fn check_lemma3(g: &Graph, pat: &CliquePattern, u: usize, cap: usize) -> Result<CheckResult> {
    let sat = SaturatedGraph::certify(g.clone(), pat)?;
    neighbourhood_check(&sat, u, cap)
}

pub fn neighbourhood_check(sat: &SaturatedGraph, u: usize, cap: usize) -> Result<CheckResult> {
    neighbourhood_counted(sat, u, cap).map(|(res, _)| res)
}

fn neighbourhood_counted(
    sat: &SaturatedGraph,
    u: usize,
    cap: usize,
) -> Result<(CheckResult, usize)> {
    let g = sat.graph();
    let v = sat.pivot();
    let s = g.neighbors(v);
    if u >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.n(),
        });
    }
    if s.with(v).contains(u) {
        return Err(Error::VertexInClosedNeighbourhood(u));
    }
    let allowed = g.vertices() - s.with(u).with(v);
    let sizes = sat.pattern().packing_sizes();
    let mut family = enumerate_packings(g, &sizes, allowed, cap.saturating_add(1));
    let partial = family.len() > cap;
    family.truncate(cap);
    if family.is_empty() {
        let res = CheckResult::fail(
            INSIDE_PACKING,
            format!("u={u}: no packing avoids S ∪ {{u, v}}, so G+uv has no pattern through uv"),
        );
        return Ok((res, 0));
    }
    let outside_s = g.neighbors(u) - s;
    let bad = family
        .iter()
        .find(|f| !outside_s.is_subset(&f.vertices()))
        .map(|f| format!("u={u} F={f} misses {}", outside_s - f.vertices()));
    let mut res = CheckResult::from_first_failure(INSIDE_PACKING, bad);
    res.partial = partial;
    Ok((
        res.with_note(&format!("{} packings", family.len())),
        family.len(),
    ))
}

/// [`neighbourhood_check`] over every `u ∉ N[v]`.
pub fn neighbourhood_checks(sat: &SaturatedGraph, cap: usize) -> CheckResult {
    let g = sat.graph();
    let v = sat.pivot();
    let far = g.vertices() - g.neighbors(v).with(v);
    let mut partial = false;
    let mut total = 0usize;
    for u in far.iter() {
        let (r, count) = neighbourhood_counted(sat, u, cap).expect("u is outside N[v]");
        partial |= r.partial;
        if r.failed() {
            return CheckResult { partial, ..r };
        }
        total += count;
    }
    let mut res = CheckResult::pass(INSIDE_PACKING)
        .with_note(&format!("{} vertices, {total} packings", far.len()));
    res.partial = partial;
    res
}

/// `|E(H)| − |E(H[X])| ≥ |V(H) \ X|` for connected `H` and nonempty `X`.
pub fn contraction_bound_holds(h: &Graph, x: VertexSet) -> Result<bool> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let x = x & h.vertices();
    if x.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(h.edge_count() - h.edges_within(x) >= h.n() - x.len())
}

/// The per-`r` claims on `R_F` and the packing, each evaluated literally.
pub fn check_claims(report: &ResidueReport) -> Vec<CheckResult> {
    const NAMES: [&str; 6] = [
        "claim1_i_one_residue_per_component",
        "claim1_ii_no_cross_edge_under_common_residue",
        "claim1_iii_cliques_meet_two_parts",
        "claim2_two_neighbours_force_part",
        "claim3_never_one_neighbour",
        "claim4_residue_sees_one_part",
    ];
    if !report.minimum_regime {
        return NAMES
            .iter()
            .map(|n| {
                CheckResult::not_applicable(
                    n,
                    "needs the formula edge count and n above the theorem bound",
                )
            })
            .collect();
    }
    let g = &report.graph;
    let parts = report.f.parts();
    let q = report.pattern.q();
    let r_f = report.r_f;
    let mut out = Vec::with_capacity(NAMES.len());

    out.push(CheckResult::from_first_failure(
        NAMES[0],
        report
            .components
            .iter()
            .find(|c| c.r_vertices > 1)
            .map(|c| {
                format!(
                    "component {} holds R_F vertices {}",
                    c.vertices,
                    c.vertices & r_f
                )
            }),
    ));

    let mut bad = None;
    'outer: for r in r_f.iter() {
        let nr = g.neighbors(r);
        for (i, fi) in parts.iter().enumerate() {
            for (j, fj) in parts.iter().enumerate().skip(i + 1) {
                for x in (*fi & nr).iter() {
                    if let Some(y) = (*fj & nr & g.neighbors(x)).first() {
                        bad = Some(format!(
                            "r={r} x={x} (F_{}) y={y} (F_{}) with xy an edge",
                            i + 1,
                            j + 1
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    let c = CheckResult::from_first_failure(NAMES[1], bad);
    out.push(if parts.len() < 2 {
        c.with_note("vacuous: fewer than two parts")
    } else {
        c
    });

    if q < 4 {
        out.push(CheckResult::not_applicable(
            NAMES[2],
            "only stated for q >= 4",
        ));
    } else {
        let bad = cliques(g, q, report.f.vertices())
            .into_iter()
            .find(|x| parts.iter().filter(|p| !p.is_disjoint(x)).count() > 2)
            .map(|x| format!("K_q {x} meets more than two parts"));
        out.push(CheckResult::from_first_failure(NAMES[2], bad));
    }

    let mut claim2 = None;
    let mut claim3 = None;
    let mut claim4 = None;
    for r in r_f.iter() {
        let nr = g.neighbors(r);
        for (i, fi) in parts.iter().enumerate() {
            let k = (nr & *fi).len();
            if claim2.is_none() && k >= 2 && !fi.is_subset(&nr) {
                claim2 = Some(format!(
                    "r={r} sees {k} vertices of F_{} but not all",
                    i + 1
                ));
            }
            if claim3.is_none() && k == 1 {
                claim3 = Some(format!("r={r} sees exactly one vertex of F_{}", i + 1));
            }
        }
        let nf = nr & report.f.vertices();
        if claim4.is_none() && !parts.contains(&nf) {
            claim4 = Some(format!("r={r} has N_F(r)={nf}, not a single part"));
        }
    }
    out.push(CheckResult::from_first_failure(NAMES[3], claim2));
    out.push(CheckResult::from_first_failure(NAMES[4], claim3));
    out.push(CheckResult::from_first_failure(NAMES[5], claim4));
    out
}

/// `S` is a clique joined to everything, `G[V(F) ∪ R_F]` is `(t-1)K_{q+1}`
/// with no edges leaving it except to `S`, and every other vertex sees
/// exactly `S`.
pub fn check_final_configuration(report: &ResidueReport) -> CheckResult {
    const NAME: &str = "final_configuration";
    let g = &report.graph;
    let s = report.s;
    let all = g.vertices();
    let q = report.pattern.q();
    let w = report.f.vertices() | report.r_f;
    let mut bad = None;
    if let Some(x) = s.iter().find(|&x| g.neighbors(x) != all.without(x)) {
        bad = Some(format!(
            "S vertex {x} is not adjacent to every other vertex"
        ));
    }
    if bad.is_none() {
        let mut left = w;
        let mut blocks = 0;
        while let Some(x) = left.first() {
            let block = g.component_of(x, w);
            if block.len() != q + 1 || !g.is_clique(block) {
                bad = Some(format!("block {block} is not a K_{}", q + 1));
                break;
            }
            if let Some(y) = block
                .iter()
                .find(|&y| g.neighbors(y) != s | block.without(y))
            {
                bad = Some(format!(
                    "block vertex {y} has neighbours outside S and its block"
                ));
                break;
            }
            blocks += 1;
            left = left - block;
        }
        if bad.is_none() && blocks != report.pattern.t() - 1 {
            bad = Some(format!(
                "{blocks} blocks, expected {}",
                report.pattern.t() - 1
            ));
        }
    }
    if bad.is_none() {
        bad = (all - s - w)
            .iter()
            .find(|&x| g.neighbors(x) != s)
            .map(|x| format!("vertex {x} has N(x)={} instead of S", g.neighbors(x)));
    }
    let res = CheckResult::from_first_failure(NAME, bad);
    if res.passed() {
        let iso = build_extremal(g.n(), &report.pattern)
            .is_ok_and(|h| canonical_form(&h) == canonical_form(g));
        res.with_note(if iso {
            "isomorphic to the construction"
        } else {
            "not isomorphic to the construction"
        })
    } else {
        res
    }
}

/// Every check, for the default or a given packing.
pub fn audit(sat: &SaturatedGraph, f: Option<Embedding>, cap: usize) -> Result<ResidueReport> {
    let mut report = residue_of(sat, f)?;
    let mut checks = vec![
        check_outside_empty(&report),
        check_af_count(&report),
        check_eq1(&report),
        min_degree_check(sat),
        dominating_closure_check(sat),
        neighbourhood_checks(sat, cap),
        check_lemma5(&report),
    ];
    checks.extend(check_claims(&report));
    checks.push(check_final_configuration(&report));
    report.verdicts = checks;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::theorem_n_bound;

    fn pat(p: usize, q: usize, t: usize) -> CliquePattern {
        CliquePattern::new(p, q, t).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn k4_i9() -> Graph {
        build_extremal(13, &pat(2, 3, 2)).unwrap()
    }

    #[test]
    fn residue_of_k4_plus_isolated() {
        let r = residue(&k4_i9(), &pat(2, 3, 2), None).unwrap();
        assert_eq!(r.v, 4);
        assert!(r.s.is_empty());
        assert_eq!(r.f.parts(), &[set(&[0, 1, 2])]);
        assert_eq!(r.r_f, set(&[3]));
        assert_eq!(r.a_f, vec![(0, 3), (1, 3), (2, 3)]);
        assert_eq!(r.components.len(), 1);
        let c = &r.components[0];
        assert_eq!(c.vertices, set(&[0, 1, 2, 3]));
        assert_eq!((c.edges, c.f_vertices, c.r_vertices), (3, 3, 1));
        assert!(c.is_tree());
    }

    #[test]
    fn residue_of_apex_construction() {
        let g = build_extremal(16, &pat(3, 3, 2)).unwrap();
        let r = residue(&g, &pat(3, 3, 2), None).unwrap();
        assert_eq!(r.s, set(&[0]));
        assert_eq!(r.f.parts(), &[set(&[1, 2, 3])]);
        assert_eq!(r.r_f, set(&[4]));
        assert_eq!(r.a_f.len(), 3);
        assert!(check_af_count(&r).passed());
    }

    #[test]
    fn residue_of_triangle() {
        let g = build_extremal(7, &pat(2, 2, 2)).unwrap();
        let r = residue(&g, &pat(2, 2, 2), None).unwrap();
        assert_eq!(r.f.parts(), &[set(&[0, 1])]);
        assert_eq!(r.a_f.len(), 2);
        assert!(check_af_count(&r).passed());
        assert!(check_eq1(&r).passed());
    }

    #[test]
    fn residue_errors() {
        let p = pat(2, 3, 2);
        let mut g = k4_i9();
        g = g.remove_edge(0, 1).unwrap();
        assert_eq!(residue(&g, &p, None).unwrap_err(), Error::NotSaturated);
        let bad_f = Embedding::new(vec![set(&[0, 1, 4])]);
        assert!(matches!(
            residue(&k4_i9(), &p, Some(bad_f)),
            Err(Error::InvalidPacking(_))
        ));
        let other = Embedding::new(vec![set(&[1, 2, 3])]);
        let r = residue(&k4_i9(), &p, Some(other)).unwrap();
        assert_eq!(r.r_f, set(&[0]));
    }

    #[test]
    fn outside_empty_detects_planted_edge() {
        let p = pat(2, 3, 2);
        let r = residue(&k4_i9(), &p, None).unwrap();
        assert!(check_outside_empty(&r).passed());
        let mut planted = r.clone();
        planted.graph = planted.graph.add_edge(5, 6).unwrap();
        let c = check_outside_empty(&planted);
        assert!(c.failed());
        assert_eq!(c.counterexample.as_deref(), Some("edge 5-6"));
    }

    #[test]
    fn min_degree_and_closure_guards() {
        let p = pat(2, 3, 2);
        assert!(check_lemma2(&k4_i9(), &p).passed());
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p222 = pat(2, 2, 2);
        assert_eq!(check_lemma2(&p4, &p222).verdict, Verdict::NotApplicable);
        assert_eq!(
            check_dominating_closure(&p4, &p222).verdict,
            Verdict::NotApplicable
        );
        let apex = build_extremal(16, &pat(3, 3, 2)).unwrap();
        assert!(check_dominating_closure(&apex, &pat(3, 3, 2)).passed());
        let c = check_dominating_closure(&k4_i9(), &p);
        assert!(c.passed());
        assert!(c.note.unwrap().contains("vacuous"));
        // Saturated but below the bound: the degree bound is not claimed there.
        let small = build_extremal(6, &pat(2, 2, 2)).unwrap();
        assert_eq!(check_lemma2(&small, &p222).verdict, Verdict::NotApplicable);
    }

    #[test]
    fn neighbourhood_examples() {
        let p = pat(2, 3, 2);
        let g = k4_i9();
        let iso = check_lemma3(&g, &p, 5, 1000).unwrap();
        assert!(iso.passed() && !iso.partial);
        assert_eq!(iso.note.as_deref(), Some("4 packings"));
        let block = check_lemma3(&g, &p, 0, 1000).unwrap();
        assert!(block.passed());
        assert_eq!(block.note.as_deref(), Some("1 packings"));
        let capped = check_lemma3(&g, &p, 5, 2).unwrap();
        assert!(capped.partial);
        assert_eq!(
            check_lemma3(&g, &p, 4, 10),
            Err(Error::VertexInClosedNeighbourhood(4))
        );
    }

    #[test]
    fn contraction_examples() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(contraction_bound_holds(&path, set(&[0, 1])).unwrap());
        let k4 = Graph::complete(4).unwrap();
        assert!(contraction_bound_holds(&k4, set(&[2, 3])).unwrap());
        assert_eq!(
            contraction_bound_holds(&Graph::empty(2).unwrap(), set(&[0])),
            Err(Error::Disconnected)
        );
        assert_eq!(
            contraction_bound_holds(&path, VertexSet::EMPTY),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn claims_on_fixture() {
        let r = residue(&k4_i9(), &pat(2, 3, 2), None).unwrap();
        let claims = check_claims(&r);
        assert_eq!(claims.len(), 6);
        assert!(claims[1].note.as_deref().unwrap().contains("vacuous"));
        assert_eq!(claims[2].verdict, Verdict::NotApplicable);
        assert!(claims.iter().all(|c| !c.failed()), "{claims:?}");
        assert!(check_lemma5(&r).passed());
        assert!(check_final_configuration(&r).passed());
    }

    #[test]
    fn claims_detect_violations() {
        // Hand-built report: r sees one vertex of F_1, which breaks claims 3 and 4.
        let p = pat(2, 3, 2);
        let mut r = residue(&k4_i9(), &p, None).unwrap();
        r.graph = Graph::from_edges(13, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let claims = check_claims(&r);
        assert!(claims[4].failed());
        assert!(claims[5].failed());
        assert!(check_final_configuration(&r).failed());
    }

    #[test]
    fn audit_passes_everything_on_grid() {
        for (p, q, t) in [(2, 2, 2), (2, 3, 2), (3, 3, 2), (2, 4, 3), (4, 4, 2)] {
            let pat = pat(p, q, t);
            let n = theorem_n_bound(&pat) + 1;
            let sat = SaturatedGraph::certify(build_extremal(n, &pat).unwrap(), &pat).unwrap();
            let report = audit(&sat, None, DEFAULT_PACKING_CAP).unwrap();
            assert!(report.all_passed(), "{}", report.to_text());
            let text = report.to_text();
            assert!(text.contains("check final_configuration: PASS"));
        }
    }

    #[test]
    fn report_serializes() {
        let sat = SaturatedGraph::certify(k4_i9(), &pat(2, 3, 2)).unwrap();
        let report = audit(&sat, None, 100).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["R_F"], serde_json::json!([3]));
        assert_eq!(json["verdicts"][0]["name"], "outside_empty");
        assert_eq!(json["verdicts"][0]["verdict"], "pass");
        assert!(json["verdicts"][0]["counterexample"].is_null());
    }
}
