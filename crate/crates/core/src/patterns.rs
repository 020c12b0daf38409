//! Forbidden patterns `K_p ∪ (t-1)K_q` and disjoint clique packing.
//!
//! Packings are searched largest clique first. Cliques grow by the least
//! eligible vertex, so the first hit is the lexicographically least under
//! that order. When consecutive parts have equal size, the later part must
//! lie entirely above the least vertex of the earlier one, which yields each
//! unordered family exactly once.

use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The pattern `K_p ∪ (t-1)K_q` with `2 <= p <= q` and `t >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CliquePattern {
    p: usize,
    q: usize,
    t: usize,
}

impl CliquePattern {
    pub fn new(p: usize, q: usize, t: usize) -> Result<CliquePattern> {
        if p < 2 || q < p || t < 1 {
            return Err(Error::InvalidPattern { p, q, t });
        }
        Ok(CliquePattern { p, q, t })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `[p, q, q, ...]` with `t - 1` copies of `q`.
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![self.p];
        sizes.extend(self.packing_sizes());
        sizes
    }

    /// The `(t-1)K_q` part alone.
    pub fn packing_sizes(&self) -> Vec<usize> {
        vec![self.q; self.t - 1]
    }

    /// Number of vertices of the pattern, `p + (t-1)q`.
    pub fn order(&self) -> usize {
        self.p + (self.t - 1) * self.q
    }
}

impl fmt::Display for CliquePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t {
            1 => write!(f, "K_{}", self.p),
            2 => write!(f, "K_{} ∪ K_{}", self.p, self.q),
            t => write!(f, "K_{} ∪ {}K_{}", self.p, t - 1, self.q),
        }
    }
}

/// Pairwise disjoint vertex sets, one per requested clique size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Embedding {
    parts: Vec<VertexSet>,
}

impl Embedding {
    pub fn new(parts: Vec<VertexSet>) -> Embedding {
        Embedding { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<VertexSet> {
        self.parts
    }

    /// Union of all parts.
    pub fn vertices(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::EMPTY, |acc, &p| acc | p)
    }

    /// Checks disjointness, part sizes and that every part is a clique of `g`.
    pub fn is_valid_in(&self, g: &Graph, sizes: &[usize]) -> bool {
        if self.parts.len() != sizes.len() {
            return false;
        }
        let mut used = VertexSet::EMPTY;
        for (part, &k) in self.parts.iter().zip(sizes) {
            if part.len() != k || !part.is_disjoint(&used) || !part.is_subset(&g.vertices()) {
                return false;
            }
            if !g.is_clique(*part) {
                return false;
            }
            used |= *part;
        }
        true
    }

    /// Parts sorted, for comparing families that ignore part order.
    pub fn normalized(&self) -> Embedding {
        let mut parts = self.parts.clone();
        parts.sort_by_key(|p| (p.len(), p.first()));
        Embedding { parts }
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Visits every `k`-clique inside `allowed` in lexicographic order.
pub fn for_each_clique<B>(
    g: &Graph,
    k: usize,
    allowed: VertexSet,
    mut visit: impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let pool = degree_filter(g, k, allowed & g.vertices());
    grow(g, k, VertexSet::EMPTY, pool, &mut visit)
}

/// All `k`-cliques inside `allowed`, in lexicographic order.
pub fn cliques(g: &Graph, k: usize, allowed: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_clique(g, k, allowed, |c| {
        out.push(c);
        ControlFlow::<()>::Continue(())
    });
    out
}

pub fn find_clique(g: &Graph, k: usize, allowed: VertexSet) -> Option<VertexSet> {
    match for_each_clique(g, k, allowed, ControlFlow::Break) {
        ControlFlow::Break(c) => Some(c),
        ControlFlow::Continue(()) => None,
    }
}

/// Pairwise disjoint cliques of the given sizes inside `allowed`.
///
/// Parts of the result line up with `sizes`.
pub fn find_disjoint_cliques(g: &Graph, sizes: &[usize], allowed: VertexSet) -> Option<Embedding> {
    let packer = Packer::new(g, sizes);
    let found = match packer.run(allowed & g.vertices(), &mut |parts: &[VertexSet]| {
        ControlFlow::Break(parts.to_vec())
    }) {
        ControlFlow::Break(parts) => Some(packer.restore_order(parts)),
        ControlFlow::Continue(()) => None,
    };
    debug_assert!(found.as_ref().is_none_or(|e| e.is_valid_in(g, sizes)));
    found
}

/// A copy of `pat` inside `g`, if any. Part 0 is the `K_p`.
pub fn contains_pattern(g: &Graph, pat: &CliquePattern) -> Option<Embedding> {
    find_disjoint_cliques(g, &pat.sizes(), g.vertices())
}

/// Up to `limit` distinct packings, where families differing only in the
/// order of equal-size parts count once.
pub fn enumerate_packings(
    g: &Graph,
    sizes: &[usize],
    allowed: VertexSet,
    limit: usize,
) -> Vec<Embedding> {
    let packer = Packer::new(g, sizes);
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let _ = packer.run(allowed & g.vertices(), &mut |parts: &[VertexSet]| {
        let emb = packer.restore_order(parts.to_vec());
        debug_assert!(emb.is_valid_in(g, sizes));
        out.push(emb);
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Vertices of `allowed` with at least `k - 1` neighbours in `allowed`.
fn degree_filter(g: &Graph, k: usize, allowed: VertexSet) -> VertexSet {
    if k <= 1 {
        return allowed;
    }
    allowed
        .iter()
        .filter(|&v| (g.neighbors(v) & allowed).len() + 1 >= k)
        .collect()
}

fn grow<B>(
    g: &Graph,
    need: usize,
    clique: VertexSet,
    cand: VertexSet,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if need == 0 {
        return visit(clique);
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if rest.len() < need {
            break;
        }
        rest.remove(v);
        let next = rest & g.neighbors(v);
        if next.len() + 1 >= need {
            grow(g, need - 1, clique.with(v), next, visit)?;
        }
    }
    ControlFlow::Continue(())
}

struct Packer<'a> {
    g: &'a Graph,
    /// Sizes in non-increasing order.
    sorted: Vec<usize>,
    /// `slot[i]` is the caller's index for sorted position `i`.
    slot: Vec<usize>,
    /// Remaining vertex demand from each sorted position on.
    demand: Vec<usize>,
}

impl<'a> Packer<'a> {
    fn new(g: &'a Graph, sizes: &[usize]) -> Self {
        debug_assert!(sizes.iter().all(|&k| k >= 1));
        let mut slot: Vec<usize> = (0..sizes.len()).collect();
        slot.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]));
        let sorted: Vec<usize> = slot.iter().map(|&i| sizes[i]).collect();
        let mut demand = vec![0; sorted.len() + 1];
        for i in (0..sorted.len()).rev() {
            demand[i] = demand[i + 1] + sorted[i];
        }
        Packer {
            g,
            sorted,
            slot,
            demand,
        }
    }

    fn restore_order(&self, parts: Vec<VertexSet>) -> Embedding {
        let mut out = vec![VertexSet::EMPTY; parts.len()];
        for (i, part) in parts.into_iter().enumerate() {
            out[self.slot[i]] = part;
        }
        Embedding::new(out)
    }

    fn run<B>(
        &self,
        allowed: VertexSet,
        visit: &mut dyn FnMut(&[VertexSet]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let mut parts = Vec::with_capacity(self.sorted.len());
        self.level(0, allowed, &mut parts, visit)
    }

    fn level<B>(
        &self,
        level: usize,
        allowed: VertexSet,
        parts: &mut Vec<VertexSet>,
        visit: &mut dyn FnMut(&[VertexSet]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if level == self.sorted.len() {
            return visit(parts);
        }
        if allowed.len() < self.demand[level] {
            return ControlFlow::Continue(());
        }
        let k = self.sorted[level];
        let mut region = allowed;
        if level > 0 && self.sorted[level - 1] == k {
            let prev_min = parts[level - 1].first().expect("nonempty part");
            region &= VertexSet::above(prev_min);
        }
        // Parts of this size still to place all fit inside `region`.
        let same = self.sorted[level..].iter().take_while(|&&s| s == k).count();
        if region.len() < same * k {
            return ControlFlow::Continue(());
        }
        let pool = degree_filter(self.g, k, region);
        grow(self.g, k, VertexSet::EMPTY, pool, &mut |c| {
            parts.push(c);
            let r = self.level(level + 1, allowed - c, parts, visit);
            parts.pop();
            r
        })
    }
}
