//! Sanity checks on the test-side reference implementations themselves.

mod common;

use common::*;
use spex_core::graph::{complete, complete_bipartite, cycle, path, Graph};

#[test]
fn dense_rho_closed_forms() {
    assert!((dense_rho(&complete(6)) - 5.0).abs() < 1e-12);
    assert!((dense_rho(&complete_bipartite(2, 18)) - 6.0).abs() < 1e-12);
    assert!((dense_rho(&cycle(7).unwrap()) - 2.0).abs() < 1e-12);
    let p = dense_rho(&path(5));
    assert!((p - 2.0 * (std::f64::consts::PI / 6.0).cos()).abs() < 1e-12);
}

#[test]
fn partition_counts() {
    // p(10, k) for k = 1..=10
    let row = [1, 5, 8, 9, 7, 5, 3, 2, 1, 1];
    for (k, &expect) in (1..=10).zip(row.iter()) {
        assert_eq!(partition_count(10, k), expect);
        assert_eq!(partitions_brute(10, k).len() as u64, expect);
    }
}

#[test]
fn cycle_dp_small_graphs() {
    assert_eq!(cycle_lengths_dp(&complete(5)).into_iter().collect::<Vec<_>>(), [3, 4, 5]);
    assert_eq!(cycle_lengths_dp(&cycle(7).unwrap()).into_iter().collect::<Vec<_>>(), [7]);
    assert_eq!(cycle_lengths_dp(&complete_bipartite(2, 8)).into_iter().collect::<Vec<_>>(), [4]);
    assert_eq!(cycle_lengths_dp(&complete_bipartite(3, 3)).into_iter().collect::<Vec<_>>(), [4, 6]);
    assert!(cycle_lengths_dp(&path(8)).is_empty());
}

#[test]
fn kuratowski_oracle() {
    assert!(!planar_kuratowski(&complete(5)));
    assert!(!planar_kuratowski(&complete_bipartite(3, 3)));
    assert!(planar_kuratowski(&complete(4)));
    assert!(planar_kuratowski(&complete_bipartite(2, 7)));
    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    assert!(!planar_kuratowski(&petersen));
    // K5 with one edge subdivided
    let mut edges: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    edges.retain(|&e| e != (0, 1));
    edges.extend([(0, 5), (5, 1)]);
    assert!(!planar_kuratowski(&Graph::from_edges(6, &edges).unwrap()));
}

#[test]
fn graph6_reference_known_strings() {
    assert_eq!(graph6_reference(&complete(2)), "A_");
    assert_eq!(graph6_reference(&complete(3)), "Bw");
    assert_eq!(graph6_reference(&path(3)), "Bg");
    assert!(graph6_reference(&path(63)).starts_with("~??~"));
}
