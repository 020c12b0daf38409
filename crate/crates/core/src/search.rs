//! Isomorph-free enumeration by edge count and exhaustive computation of
//! `sat(n, ·)` at small parameters.
//!
//! Classes of order-`n` graphs with `m` edges correspond one-to-one to
//! classes of graphs with `m` edges and no isolated vertices on at most
//! `min(n, 2m)` vertices. The enumerator therefore works on a fixed vertex
//! count `N = min(n, 2·limit)` and grows each class by one edge at a time,
//! keeping one canonical representative per class.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::parallel::Workers;
use crate::patterns::CliquePattern;
use crate::saturation::{
    below_theorem_bound, build_extremal, certify_saturated, sat_formula, theorem_n_bound,
};

/// Searches stop after this many edges unless explicitly allowed to go further.
pub const DEFAULT_EDGE_GUARD: usize = 12;

/// The graph6 short form bounds the orders handled here.
pub const MAX_SEARCH_ORDER: usize = 62;

/// Canonical representatives of every class with a given number of edges
/// on a fixed vertex count, advanced one edge at a time.
#[derive(Clone, Debug)]
pub struct EdgeAugmenter {
    vertices: usize,
    edges: usize,
    classes: Vec<(CanonicalForm, Graph)>,
}

impl EdgeAugmenter {
    pub fn new(vertices: usize) -> EdgeAugmenter {
        let g = Graph::edgeless(vertices);
        EdgeAugmenter {
            vertices,
            edges: 0,
            classes: vec![(canonical_form(&g), g)],
        }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> usize {
        self.edges
    }

    /// Canonical representatives, sorted by canonical form.
    pub fn classes(&self) -> impl ExactSizeIterator<Item = &Graph> {
        self.classes.iter().map(|(_, g)| g)
    }

    pub fn forms(&self) -> impl ExactSizeIterator<Item = &CanonicalForm> {
        self.classes.iter().map(|(f, _)| f)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Moves to graphs with one more edge.
    pub fn advance(&mut self, workers: &Workers) {
        let children = workers.map(&self.classes, |(_, g)| {
            g.non_edges()
                .into_iter()
                .map(|(u, v)| {
                    let mut h = g.clone();
                    h.set_edge(u, v);
                    canonical_form(&h)
                })
                .collect::<BTreeSet<_>>()
        });
        let merged: BTreeSet<CanonicalForm> = children.into_iter().flatten().collect();
        self.classes = merged
            .into_iter()
            .map(|f| {
                let g = f.graph();
                (f, g)
            })
            .collect();
        self.edges += 1;
    }
}

/// One representative per class of graphs with `m` edges, no isolated
/// vertices, and at most `n_support` vertices.
pub fn enumerate_graphs(n_support: usize, m: usize) -> Vec<Graph> {
    enumerate_graphs_with(n_support, m, &Workers::Sequential)
}

pub fn enumerate_graphs_with(n_support: usize, m: usize, workers: &Workers) -> Vec<Graph> {
    let n = n_support.min(2 * m);
    if m > n * n.saturating_sub(1) / 2 {
        return Vec::new();
    }
    let mut aug = EdgeAugmenter::new(n);
    for _ in 0..m {
        aug.advance(workers);
    }
    aug.classes()
        .map(|g| g.induced(g.support()).graph)
        .collect()
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Largest edge count to examine; defaults to the formula value.
    pub budget: Option<usize>,
    /// Edge counts above this need `allow_large`.
    pub edge_guard: usize,
    pub allow_large: bool,
    pub workers: Workers,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            edge_guard: DEFAULT_EDGE_GUARD,
            allow_large: false,
            workers: Workers::Sequential,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    /// A saturated graph was found; `sat_value` is exact.
    Found,
    /// Every edge count up to the budget was examined without success.
    Exhausted,
    /// The guard stopped the search before the budget.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeTally {
    pub edges: usize,
    pub classes: usize,
    pub saturated: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchCounters {
    pub classes_examined: usize,
    pub canonical_forms: usize,
    pub certifications: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub pattern: CliquePattern,
    pub edge_budget: usize,
    /// Largest edge count fully examined.
    pub frontier: Option<usize>,
    pub below_theorem_bound: bool,
    pub theorem_n_bound: usize,
    pub formula_value: usize,
    pub status: SearchStatus,
    pub tallies: Vec<EdgeTally>,
    pub sat_value: Option<usize>,
    pub extremal_forms: Vec<CanonicalForm>,
    pub construction_form: Option<CanonicalForm>,
    pub uniqueness: bool,
    /// Whether a found value agrees with the formula.
    pub matches_formula: Option<bool>,
    pub counters: SearchCounters,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:>6} {:>10} {:>10}", "edges", "classes", "saturated");
        for t in &self.tallies {
            let _ = writeln!(out, "{:>6} {:>10} {:>10}", t.edges, t.classes, t.saturated);
        }
        out
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let opt = |v: Option<usize>| v.map_or("none".to_string(), |x| x.to_string());
        let _ = writeln!(out, "n: {}", self.n);
        let _ = writeln!(out, "pattern: {}", self.pattern);
        let _ = writeln!(out, "edge_budget: {}", self.edge_budget);
        let _ = writeln!(out, "frontier: {}", opt(self.frontier));
        let _ = writeln!(out, "status: {}", status_name(&self.status));
        let _ = writeln!(out, "below_theorem_bound: {}", self.below_theorem_bound);
        let _ = writeln!(out, "sat: {}", opt(self.sat_value));
        let _ = writeln!(out, "formula: {}", self.formula_value);
        let _ = writeln!(out, "extremal_classes: {}", self.extremal_forms.len());
        for f in &self.extremal_forms {
            let _ = writeln!(out, "extremal: {f}");
        }
        let _ = writeln!(out, "unique: {}", self.uniqueness);
        out
    }
}

fn status_name(status: &SearchStatus) -> &'static str {
    match status {
        SearchStatus::Found => "found",
        SearchStatus::Exhausted => "exhausted",
        SearchStatus::Truncated => "truncated",
    }
}

/// Smallest edge count of a saturated order-`n` graph, by exhaustive search.
pub fn compute_sat(n: usize, pat: &CliquePattern, opts: &SearchOptions) -> Result<SearchReport> {
    let started = Instant::now();
    if n > MAX_SEARCH_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let formula_value = sat_formula(n, pat)?;
    let budget = opts.budget.unwrap_or(formula_value);
    let limit = if opts.allow_large {
        budget
    } else {
        budget.min(opts.edge_guard)
    };
    let support = n.min(2 * limit);
    let mut aug = EdgeAugmenter::new(support);
    let mut counters = SearchCounters::default();
    let mut tallies = Vec::new();
    let mut extremal: Vec<CanonicalForm> = Vec::new();
    let mut sat_value = None;
    let mut frontier = None;

    for m in 0..=limit {
        if m > 0 {
            counters.canonical_forms += aug
                .classes()
                .map(|g| support * support.saturating_sub(1) / 2 - g.edge_count())
                .sum::<usize>();
            aug.advance(&opts.workers);
        }
        if aug.is_empty() {
            break;
        }
        let classes: Vec<&Graph> = aug.classes().collect();
        let saturated = opts.workers.map(&classes, |g| {
            let padded = g.pad_to(n).expect("support fits in n");
            certify_saturated(&padded, pat)
                .saturated
                .then(|| canonical_form(&padded))
        });
        counters.classes_examined += classes.len();
        counters.certifications += classes.len();
        let found: BTreeSet<CanonicalForm> = saturated.into_iter().flatten().collect();
        tallies.push(EdgeTally {
            edges: m,
            classes: classes.len(),
            saturated: found.len(),
        });
        frontier = Some(m);
        if !found.is_empty() {
            sat_value = Some(m);
            extremal = found.into_iter().collect();
            break;
        }
    }

    let construction_form = build_extremal(n, pat).ok().map(|h| canonical_form(&h));
    let uniqueness = extremal.len() == 1 && construction_form.as_ref() == extremal.first();
    let status = match sat_value {
        Some(_) => SearchStatus::Found,
        None if limit < budget => SearchStatus::Truncated,
        None => SearchStatus::Exhausted,
    };
    Ok(SearchReport {
        n,
        pattern: *pat,
        edge_budget: budget,
        frontier,
        below_theorem_bound: below_theorem_bound(n, pat),
        theorem_n_bound: theorem_n_bound(pat),
        formula_value,
        status,
        tallies,
        sat_value,
        extremal_forms: extremal,
        construction_form,
        uniqueness,
        matches_formula: sat_value.map(|s| s == formula_value),
        counters,
        elapsed: started.elapsed(),
    })
}

/// Checks that the search finds exactly the construction at the formula value.
pub fn verify_theorem(
    n: usize,
    pat: &CliquePattern,
    opts: &SearchOptions,
    allow_below_bound: bool,
) -> Result<(bool, SearchReport)> {
    let bound = theorem_n_bound(pat);
    if n <= bound && !allow_below_bound {
        return Err(Error::BelowTheoremBound { n, bound });
    }
    let report = compute_sat(n, pat, opts)?;
    let confirmed = report.matches_formula == Some(true) && report.uniqueness;
    Ok((confirmed, report))
}
