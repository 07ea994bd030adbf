//! Exact values on the reference gadget families: the two-route gadget
//! where betweenness is discontinuous while stable betweenness tracks the
//! quality of the alternative route, and the two-node family where degree
//! squared is continuous but unstable.

use centra_core::centrality::{
    betweenness, closeness_decentrality, degree, degree_squared, stable_betweenness, DegreeMode,
    Measure, MeasureParams,
};
use centra_core::experiments::stability_ratio;
use centra_core::graph::{graph_distance, GraphPair, WeightKind};
use centra_core::shortest_paths::{sssp_with_counts, DEFAULT_TIE_TOL};
use centra_testkit::{two_node_pair, two_route_gadget};

fn rel_eq(actual: f64, expected: f64, tol: f64) -> bool {
    (actual - expected).abs() <= tol * expected.abs().max(1.0)
}

#[test]
fn equal_routes_split_shortest_paths() {
    // Both gates cost the same: 18 ordered hub/leaf pairs each have two
    // shortest paths, one through each gate.
    let g = two_route_gadget(1.0, 1.0, WeightKind::Dissimilarity);
    let run = sssp_with_counts(&g, 2, DEFAULT_TIE_TOL).unwrap();
    assert_eq!(run.dist[3].value(), 2.0);
    assert_eq!(run.sigma[3], 2);

    let cv = betweenness(&g, DEFAULT_TIE_TOL).unwrap();
    assert_eq!(cv.values[0], 9.0);
    assert_eq!(cv.values[1], 9.0);
}

#[test]
fn slightly_costlier_gate_loses_all_paths() {
    for eps in [0.1, 0.01] {
        let h = two_route_gadget(1.0 + eps, 1.0, WeightKind::Dissimilarity);
        let cv = betweenness(&h, DEFAULT_TIE_TOL).unwrap();
        assert_eq!(cv.values[0], 0.0, "eps = {eps}");
        assert_eq!(cv.values[1], 18.0, "eps = {eps}");
    }
}

#[test]
fn gate_distance_counts_four_directed_entries() {
    let eps = 0.01;
    let g = two_route_gadget(1.0, 1.0, WeightKind::Dissimilarity);
    let h = two_route_gadget(1.0 + eps, 1.0, WeightKind::Dissimilarity);
    let pair = GraphPair::new(g, h).unwrap();
    assert!(rel_eq(graph_distance(&pair), 4.0 * eps, 1e-12));
}

#[test]
fn betweenness_ratio_grows_without_bound() {
    let params = MeasureParams::default();
    let mut previous = 0.0;
    for eps in [0.1, 0.01, 0.005] {
        let g = two_route_gadget(1.0, 1.0, WeightKind::Dissimilarity);
        let h = two_route_gadget(1.0 + eps, 1.0, WeightKind::Dissimilarity);
        let pair = GraphPair::new(g, h).unwrap();
        let ratio = stability_ratio(Measure::Betweenness, &pair, &params).unwrap();
        assert!(
            rel_eq(ratio, 9.0 / (4.0 * eps), 1e-9),
            "eps = {eps}: ratio {ratio}"
        );
        assert!(ratio > previous);
        previous = ratio;
    }
    // Halving the perturbation doubles the ratio.
    assert!(rel_eq(previous, 2.0 * 9.0 / (4.0 * 0.01), 1e-9));
}

#[test]
fn unique_gate_keeps_betweenness_but_not_stable_betweenness() {
    let eps = 0.01;
    let big = 100.0;
    let g = two_route_gadget(1.0, 1.0 + eps, WeightKind::Dissimilarity);
    let h = two_route_gadget(1.0, 1.0 + big, WeightKind::Dissimilarity);

    // Gate 0 carries all 18 shortest paths in both graphs.
    for graph in [&g, &h] {
        let run = sssp_with_counts(graph, 2, DEFAULT_TIE_TOL).unwrap();
        assert_eq!(run.sigma[3], 1);
        let cv = betweenness(graph, DEFAULT_TIE_TOL).unwrap();
        assert_eq!(cv.values[0], 18.0);
    }

    // Removing it forces the detour: the increase scales with the
    // alternative route's cost.
    let sb_g = stable_betweenness(&g).unwrap();
    let sb_h = stable_betweenness(&h).unwrap();
    assert!(rel_eq(sb_g.values[0], 36.0 * eps, 1e-9));
    assert!(rel_eq(sb_h.values[0], 36.0 * big, 1e-9));
    // The idle gate adds nothing anywhere.
    assert_eq!(sb_g.values[1], 0.0);
}

#[test]
fn gadget_closeness_and_degree_reference_values() {
    let g = two_route_gadget(1.0, 1.0, WeightKind::Dissimilarity);
    let cv = closeness_decentrality(&g).unwrap();
    // Gate 0: hubs at 1, everything else at 2.
    assert_eq!(cv.values[0], 12.0);

    let eps = 0.01;
    let sim = two_route_gadget(1.0, 1.0 + eps, WeightKind::Similarity);
    let deg = degree(&sim, DegreeMode::Undirected).unwrap();
    assert!(rel_eq(deg.values[2], 4.0 + eps, 1e-12));
}

#[test]
fn degree_squared_ratio_matches_closed_form() {
    let params = MeasureParams::default();
    for delta in [1.0, 10.0, 100.0] {
        let g = two_node_pair(1.0, WeightKind::Similarity);
        let h = two_node_pair(1.0 + delta, WeightKind::Similarity);
        let pair = GraphPair::new(g.clone(), h.clone()).unwrap();
        assert_eq!(graph_distance(&pair), 2.0 * delta);

        let dsq_g = degree_squared(&g).unwrap();
        let dsq_h = degree_squared(&h).unwrap();
        assert_eq!(dsq_g.values[0], 1.0);
        assert_eq!(dsq_h.values[0], (1.0 + delta) * (1.0 + delta));

        let ratio = stability_ratio(Measure::DegreeSquared, &pair, &params).unwrap();
        assert!(
            rel_eq(ratio, delta / 2.0 + 1.0, 1e-12),
            "delta = {delta}: ratio {ratio}"
        );
    }
}

#[test]
fn degree_squared_differences_vanish_with_the_perturbation() {
    let mut previous = f64::INFINITY;
    for delta in [0.1, 0.01, 0.001] {
        let g = two_node_pair(1.0, WeightKind::Similarity);
        let h = two_node_pair(1.0 + delta, WeightKind::Similarity);
        let diff = (degree_squared(&h).unwrap().values[0]
            - degree_squared(&g).unwrap().values[0])
            .abs();
        assert!(diff < previous);
        previous = diff;
    }
    assert!(previous < 3e-3);
}
