mod common;

use std::collections::BTreeSet;

use cliquesat::search::{enumerate_graphs, EdgeAugmenter};
use cliquesat::{canonical_form, Graph, Workers};
use common::{isomorphic, support_classes_by_backtracking};

#[test]
fn class_counts_match_backtracking_oracle() {
    let oracle = support_classes_by_backtracking(6);
    let counts: Vec<usize> = oracle.iter().map(Vec::len).collect();
    // Frozen from the oracle run.
    assert_eq!(counts, vec![1, 1, 2, 5, 11, 26, 68]);
    for m in 0..=6 {
        let ours = enumerate_graphs(2 * m, m);
        assert_eq!(ours.len(), counts[m], "m={m}");
        for g in &ours {
            assert_eq!(g.edge_count(), m);
            assert_eq!(g.support(), g.vertices());
            assert_eq!(oracle[m].iter().filter(|h| isomorphic(h, g)).count(), 1);
        }
    }
}

#[test]
fn two_and_three_edge_classes() {
    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let two = enumerate_graphs(12, 2);
    for want in [&p3, &two_k2] {
        assert_eq!(two.iter().filter(|g| isomorphic(g, want)).count(), 1);
    }
    let three = enumerate_graphs(12, 3);
    let wanted = [
        Graph::complete(3).unwrap(),
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap(),
        Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap(),
    ];
    assert_eq!(three.len(), 5);
    for want in &wanted {
        assert_eq!(three.iter().filter(|g| isomorphic(g, want)).count(), 1);
    }
}

#[test]
fn all_graphs_on_seven_vertices() {
    // 1044 classes of graphs on seven vertices.
    let mut aug = EdgeAugmenter::new(7);
    let mut total = aug.len();
    let mut forms: BTreeSet<_> = aug.forms().cloned().collect();
    let workers = Workers::new(2).unwrap();
    for _ in 0..21 {
        aug.advance(&workers);
        total += aug.len();
        forms.extend(aug.forms().cloned());
    }
    assert_eq!(total, 1044);
    assert_eq!(forms.len(), 1044);
    assert_eq!(aug.len(), 1);
    assert_eq!(aug.classes().next().unwrap(), &Graph::complete(7).unwrap());
}

#[test]
fn representatives_are_canonical() {
    let mut aug = EdgeAugmenter::new(6);
    for _ in 0..7 {
        aug.advance(&Workers::Sequential);
        for (g, f) in aug.classes().zip(aug.forms()) {
            assert_eq!(&canonical_form(g), f);
            assert_eq!(&f.graph(), g);
        }
    }
}
