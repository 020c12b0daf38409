//! Canonical labelling by partition refinement and individualisation.
//!
//! The ordered partition is refined to an equitable one (cells split by the
//! number of neighbours each vertex has in every other cell), then the
//! first smallest non-singleton cell is individualised vertex by vertex.
//! Every discrete leaf gives a relabelled graph; the canonical graph is the
//! least of them. Branches are skipped when an earlier sibling lies in the
//! same orbit of the automorphisms known so far, which includes all twin
//! transpositions and every automorphism discovered from equal leaves.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// Byte string identifying the isomorphism class of a graph.
///
/// Layout: the vertex count, then the upper triangle of the canonically
/// relabelled adjacency matrix in graph6 column order, packed MSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    fn from_graph(g: &Graph) -> CanonicalForm {
        let n = g.n();
        let mut bytes = vec![n as u8];
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | g.has_edge(i, j) as u8;
                filled += 1;
                if filled == 8 {
                    bytes.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            bytes.push(acc << (8 - filled));
        }
        CanonicalForm(bytes)
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical representative itself.
    pub fn graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::edgeless(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    g.set_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalForm {
    /// graph6 of the canonical representative, or hex for orders above 62.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match graph6::to_graph6(&self.graph()) {
            Ok(s) => f.write_str(&s),
            Err(_) => {
                f.write_str("x:")?;
                self.0.iter().try_for_each(|b| write!(f, "{b:02x}"))
            }
        }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({self})")
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm::from_graph(&canonical_graph(g))
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

/// `label[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    let mut fixed = Vec::new();
    search.explore(vec![(0..n).collect()], &mut fixed);
    let (_, order) = search.best.expect("at least one leaf");
    let mut label = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        label[v] = pos;
    }
    label
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    /// Least relabelled adjacency seen so far and the vertex order producing it.
    best: Option<(Vec<VertexSet>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, cells: Cells, fixed: &mut Vec<usize>) {
        let cells = refine(self.g, cells);
        if cells.len() == self.g.n() {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if !tried.is_empty() {
                let mut orbits = self.orbits(fixed, &cell);
                if tried.iter().any(|&u| orbits.same(u, v)) {
                    continue;
                }
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cell.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            fixed.push(v);
            self.explore(next, fixed);
            fixed.pop();
        }
    }

    /// Orbits on `cell` of the known automorphisms fixing `fixed` pointwise.
    fn orbits(&self, fixed: &[usize], cell: &[usize]) -> UnionFind {
        let g = self.g;
        let mut uf = UnionFind::new(g.n());
        for (k, &a) in cell.iter().enumerate() {
            for &b in &cell[k + 1..] {
                if g.neighbors(a).without(b) == g.neighbors(b).without(a) {
                    uf.union(a, b);
                }
            }
        }
        for gamma in &self.autos {
            if fixed.iter().all(|&x| gamma[x] == x) {
                for (x, &y) in gamma.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        uf
    }

    fn leaf(&mut self, cells: &Cells) {
        let g = self.g;
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut label = vec![0; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            label[v] = pos;
        }
        let mut rows = vec![VertexSet::EMPTY; g.n()];
        for v in 0..g.n() {
            rows[label[v]] = g.neighbors(v).iter().map(|w| label[w]).collect();
        }
        match &self.best {
            Some((best_rows, best_order)) if *best_rows == rows => {
                let gamma = (0..g.n()).map(|x| best_order[label[x]]).collect();
                self.autos.push(gamma);
            }
            Some((best_rows, _)) if *best_rows < rows => {}
            _ => self.best = Some((rows, order)),
        }
    }
}

/// Refines an ordered partition until it is equitable.
///
/// Splitting depends only on neighbour counts and cell positions, so the
/// result commutes with relabelling.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| ((g.neighbors(v) & splitter).len(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
                changed |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            cells = next;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }
}
