//! Saturation certificates, the extremal construction and the closed-form
//! saturation number for `K_p ∪ (t-1)K_q`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::parallel::Workers;
use crate::patterns::{contains_pattern, CliquePattern, Embedding};

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `(p-2)(n-p+2) + (t-1)·C(q+1,2) + C(p-2,2)`.
pub fn sat_formula(n: usize, pat: &CliquePattern) -> Result<usize> {
    if n < pat.order() {
        return Err(Error::OrderBelowPattern {
            n,
            order: pat.order(),
        });
    }
    let (p, q, t) = (pat.p(), pat.q(), pat.t());
    Ok((p - 2) * (n - p + 2) + (t - 1) * choose2(q + 1) + choose2(p - 2))
}

/// `q(q+1)(t-1) + 3(p-2)`; the uniqueness result needs `n` strictly above it.
pub fn theorem_n_bound(pat: &CliquePattern) -> usize {
    let (p, q, t) = (pat.p(), pat.q(), pat.t());
    q * (q + 1) * (t - 1) + 3 * (p - 2)
}

pub fn below_theorem_bound(n: usize, pat: &CliquePattern) -> bool {
    n <= theorem_n_bound(pat)
}

/// Smallest order for which the construction's independent part is non-negative.
pub fn construction_min_order(pat: &CliquePattern) -> usize {
    (pat.p() - 2 + (pat.t() - 1) * (pat.q() + 1)).max(1)
}

/// Vertex layout of `K_{p-2} ∨ ((t-1)K_{q+1} ∪ I)`.
///
/// Vertices `0..p-2` form the dominating clique, then come the `t-1` blocks
/// of `q+1` consecutive vertices, then the independent part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalLayout {
    pub dominating: VertexSet,
    pub blocks: Vec<VertexSet>,
    pub independent: VertexSet,
}

pub fn extremal_layout(n: usize, pat: &CliquePattern) -> Result<ExtremalLayout> {
    let min = construction_min_order(pat);
    if n < min {
        return Err(Error::ConstructionTooSmall { n, min });
    }
    if n > MAX_VERTICES {
        return Err(Error::InvalidOrder(n));
    }
    let d = pat.p() - 2;
    let b = pat.q() + 1;
    let dominating = VertexSet::range(d);
    let blocks = (0..pat.t() - 1)
        .map(|i| (d + i * b..d + (i + 1) * b).collect())
        .collect();
    let independent = VertexSet::range(n) - VertexSet::range(d + (pat.t() - 1) * b);
    Ok(ExtremalLayout {
        dominating,
        blocks,
        independent,
    })
}

pub fn build_extremal(n: usize, pat: &CliquePattern) -> Result<Graph> {
    let layout = extremal_layout(n, pat)?;
    let all = VertexSet::range(n);
    let mut rows = vec![VertexSet::EMPTY; n];
    for v in layout.dominating.iter() {
        rows[v] = all.without(v);
    }
    for block in &layout.blocks {
        for v in block.iter() {
            rows[v] = layout.dominating | block.without(v);
        }
    }
    for v in layout.independent.iter() {
        rows[v] = layout.dominating;
    }
    Graph::from_rows(rows)
}

pub fn is_pattern_free(g: &Graph, pat: &CliquePattern) -> bool {
    contains_pattern(g, pat).is_none()
}

/// Whether `g + uv` contains the pattern.
pub fn completes_pattern(g: &Graph, pat: &CliquePattern, u: usize, v: usize) -> Result<bool> {
    Ok(contains_pattern(&g.add_edge(u, v)?, pat).is_some())
}

/// Why a graph is not saturated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A copy of the pattern already inside the graph.
    Embedding { embedding: Embedding },
    /// A missing edge whose addition creates no copy of the pattern.
    NonEdge { u: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationVerdict {
    pub free: bool,
    pub saturated: bool,
    pub failing_witness: Option<Witness>,
}

impl SaturationVerdict {
    pub fn non_edge_witness(&self) -> Option<(usize, usize)> {
        match self.failing_witness {
            Some(Witness::NonEdge { u, v }) => Some((u, v)),
            _ => None,
        }
    }
}

pub fn certify_saturated(g: &Graph, pat: &CliquePattern) -> SaturationVerdict {
    certify_saturated_with(g, pat, &Workers::Sequential)
}

/// Freeness first, then every non-edge in lexicographic order. The witness is
/// the least failing non-edge regardless of the worker count.
pub fn certify_saturated_with(
    g: &Graph,
    pat: &CliquePattern,
    workers: &Workers,
) -> SaturationVerdict {
    if let Some(embedding) = contains_pattern(g, pat) {
        return SaturationVerdict {
            free: false,
            saturated: false,
            failing_witness: Some(Witness::Embedding { embedding }),
        };
    }
    let non_edges = g.non_edges();
    let failing = workers.find_map_first(&non_edges, |&(u, v)| {
        let mut h = g.clone();
        h.set_edge(u, v);
        contains_pattern(&h, pat).is_none().then_some((u, v))
    });
    SaturationVerdict {
        free: true,
        saturated: failing.is_none(),
        failing_witness: failing.map(|(u, v)| Witness::NonEdge { u, v }),
    }
}

/// Every non-edge whose addition creates no copy of the pattern.
pub fn failing_non_edges(g: &Graph, pat: &CliquePattern, workers: &Workers) -> Vec<(usize, usize)> {
    let non_edges = g.non_edges();
    let keep = workers.map(&non_edges, |&(u, v)| {
        let mut h = g.clone();
        h.set_edge(u, v);
        contains_pattern(&h, pat).is_none()
    });
    non_edges
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect()
}
