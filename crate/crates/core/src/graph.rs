//! Simple undirected graphs on `0..n` with fixed-width bit rows.
//!
//! Every row is a [`VertexSet`] of [`WORDS`] machine words, which caps the
//! order at [`MAX_VERTICES`]. Graphs are values: the edge-editing methods
//! return a new graph and leave the receiver untouched.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Number of 64-bit words per adjacency row.
pub const WORDS: usize = 2;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64 * WORDS;

/// A subset of `0..MAX_VERTICES`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet([u64; WORDS]);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet([0; WORDS]);

    /// The range `0..n`.
    pub fn range(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut words = [0u64; WORDS];
        for (w, word) in words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        VertexSet(words)
    }

    /// All vertices strictly greater than `v`.
    pub fn above(v: usize) -> Self {
        !VertexSet::range(v + 1)
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::EMPTY;
        s.insert(v);
        s
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.0[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1u64 << (v % 64));
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        (*self & !*other).is_empty()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        (*self & *other).is_empty()
    }

    /// Least member.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.0,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

macro_rules! bit_op {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(std::array::from_fn(|i| self.0[i] $op rhs.0[i]))
            }
        }
    };
}

bit_op!(BitAnd, bitand, &);
bit_op!(BitOr, bitor, |);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        self & !rhs
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(self.0.map(|w| !w))
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        *self = *self & rhs;
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        *self = *self | rhs;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the map from its vertices back to the host.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `map[i]` is the host vertex behind vertex `i` of `graph`.
    pub map: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph::edgeless(n))
    }

    /// The graph with no vertices.
    pub fn null() -> Graph {
        Graph::edgeless(0)
    }

    pub(crate) fn edgeless(n: usize) -> Graph {
        debug_assert!(n <= MAX_VERTICES);
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn independent(n: usize) -> Result<Graph> {
        Graph::empty(n)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::range(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            g.check_pair(i, j)?;
            g.set_edge(i, j);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let all = VertexSet::range(n);
        for (i, row) in rows.iter().enumerate() {
            if row.contains(i) {
                return Err(Error::SelfLoop(i));
            }
            if let Some(j) = (*row - all).first() {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            if let Some(j) = row.iter().find(|&j| !rows[j].contains(i)) {
                return Err(Error::Parse {
                    format: "adjacency",
                    line: i,
                    message: format!("edge {i}-{j} is not symmetric"),
                });
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// The full vertex set `0..n`.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && self.adj[i].contains(j)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// Least-index vertex attaining the minimum degree.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.degree(v), v))
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| {
            (self.adj[i] & VertexSet::above(i))
                .iter()
                .map(move |j| (i, j))
        })
    }

    /// Missing pairs `(i, j)` with `i < j` in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let all = self.vertices();
        (0..self.n)
            .flat_map(|i| {
                ((all & VertexSet::above(i)) - self.adj[i])
                    .iter()
                    .map(move |j| (i, j))
            })
            .collect()
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.adj[v]))
    }

    /// Copy of the graph with edge `ij` present.
    pub fn add_edge(&self, i: usize, j: usize) -> Result<Graph> {
        self.check_pair(i, j)?;
        let mut g = self.clone();
        g.set_edge(i, j);
        Ok(g)
    }

    /// Copy of the graph with edge `ij` absent.
    pub fn remove_edge(&self, i: usize, j: usize) -> Result<Graph> {
        self.check_pair(i, j)?;
        let mut g = self.clone();
        g.adj[i].remove(j);
        g.adj[j].remove(i);
        Ok(g)
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, join: bool) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::WidthOverflow(n));
        }
        let left = VertexSet::range(self.n);
        let right = VertexSet::range(n) - left;
        let mut adj = Vec::with_capacity(n);
        for row in &self.adj {
            adj.push(if join { *row | right } else { *row });
        }
        for row in &other.adj {
            let shifted: VertexSet = row.iter().map(|j| j + self.n).collect();
            adj.push(if join { shifted | left } else { shifted });
        }
        Ok(Graph { n, adj })
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing order.
    pub fn induced(&self, s: VertexSet) -> Induced {
        let map: Vec<usize> = (s & self.vertices()).to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (k, &v) in map.iter().enumerate() {
            pos[v] = k;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| pos[w]).collect())
            .collect();
        Induced {
            graph: Graph { n: map.len(), adj },
            map,
        }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|w| perm[w]).collect();
        }
        Graph { n: self.n, adj }
    }

    /// Graph padded with isolated vertices up to order `n`.
    pub fn pad_to(&self, n: usize) -> Result<Graph> {
        if n < self.n || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let mut g = self.clone();
        g.adj.resize(n, VertexSet::EMPTY);
        g.n = n;
        Ok(g)
    }

    /// Vertices of positive degree.
    pub fn support(&self) -> VertexSet {
        (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// Connected component of `v` within the vertex set `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier.iter() {
                next |= self.adj[u];
            }
            frontier = (next & within) - seen;
            seen |= frontier;
        }
        seen
    }

    /// The order-0 graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0, self.vertices()).len() == self.n
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, i: usize, j: usize) {
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        write!(f, "])")
    }
}
