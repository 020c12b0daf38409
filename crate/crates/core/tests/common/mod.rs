//! Oracles shared by the integration and acceptance suites.
//!
//! Nothing here calls the packing search or the canonical labelling, so the
//! library can be checked against it.

#![allow(dead_code)]

use cliquesat::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Does `g` hold pairwise disjoint cliques of the given sizes? Tries ordered
/// vertex tuples, abandoning a prefix as soon as it breaks a clique or reuses
/// a vertex.
pub fn brute_contains(g: &Graph, sizes: &[usize]) -> bool {
    let total: usize = sizes.iter().sum();
    if total > g.n() {
        return false;
    }
    // block[k] is the index of the part holding tuple position k.
    let block: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let mut tuple = Vec::with_capacity(total);
    let mut used = vec![false; g.n()];
    extend_tuple(g, &block, &mut tuple, &mut used)
}

fn extend_tuple(g: &Graph, block: &[usize], tuple: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = tuple.len();
    if k == block.len() {
        return true;
    }
    for x in 0..g.n() {
        if used[x] {
            continue;
        }
        let fits = (0..k)
            .filter(|&j| block[j] == block[k])
            .all(|j| g.has_edge(tuple[j], x));
        if !fits {
            continue;
        }
        tuple.push(x);
        used[x] = true;
        if extend_tuple(g, block, tuple, used) {
            return true;
        }
        tuple.pop();
        used[x] = false;
    }
    false
}

/// Backtracking isomorphism test matching vertices in index order.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    let (ra, rb) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    fn go(
        a: &Graph,
        b: &Graph,
        da: &[usize],
        db: &[usize],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = map.len();
        if k == a.n() {
            return true;
        }
        for img in 0..b.n() {
            if used[img] || da[k] != db[img] {
                continue;
            }
            if (0..k).all(|u| a.has_edge(u, k) == b.has_edge(map[u], img)) {
                map.push(img);
                used[img] = true;
                if go(a, b, da, db, map, used) {
                    return true;
                }
                map.pop();
                used[img] = false;
            }
        }
        false
    }
    go(a, b, &ra, &rb, &mut Vec::new(), &mut vec![false; b.n()])
}

/// Graphs with `m` edges and no isolated vertices, one per class, built by
/// adding one edge (possibly to fresh vertices) to every smaller class and
/// deduplicating with [`isomorphic`].
pub fn support_classes_by_backtracking(max_edges: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::null()]];
    for _ in 0..max_edges {
        let mut next: Vec<Graph> = Vec::new();
        for g in levels.last().unwrap() {
            let n = g.n();
            let mut candidates = Vec::new();
            for (u, v) in g.non_edges() {
                candidates.push(g.add_edge(u, v).unwrap());
            }
            // One fresh vertex, joined to each existing vertex.
            if n < cliquesat::MAX_VERTICES {
                let grown = g.pad_to(n + 1).unwrap();
                for u in 0..n {
                    candidates.push(grown.add_edge(u, n).unwrap());
                }
            }
            // Two fresh vertices joined to each other.
            candidates.push(g.pad_to(n + 2).unwrap().add_edge(n, n + 1).unwrap());
            for c in candidates {
                if !next.iter().any(|h| isomorphic(h, &c)) {
                    next.push(c);
                }
            }
        }
        levels.push(next);
    }
    levels
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if n == 0 {
        Graph::null()
    } else {
        Graph::from_edges(n, &edges).unwrap()
    }
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random spanning tree plus random extra edges.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let extra = rng.gen_range(0..=n * (n - 1) / 2 - (n - 1));
    for _ in 0..extra {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            edges.push((i.min(j), i.max(j)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges).unwrap()
}
