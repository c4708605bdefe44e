//! Spanning-forest certificate bounding the degree-weighted objective.
//!
//! Scoring each edge `e = (u, v)` by `W(e) = 1 / max(deg(u), deg(v))` and
//! taking `M` as the weight of a maximum spanning forest yields the
//! two-sided bound `M / (3 sqrt(n)) - 1/3 <= Q^0(Opt) <= 2M`. The lower
//! bound is constructive: pairing up heavy forest edges greedily builds a
//! clustering worth at least `(M - sqrt(n)) / (3 sqrt(n))`.

use crate::clustering::{Clustering, PartialClustering};
use crate::dsu::DisjointSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Certificate for the interval containing `Q^0(Opt)` under degree weights.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCertificate {
    /// Indices into the graph's edge list forming a maximum spanning
    /// forest, in the order the greedy forest construction accepted them
    /// (non-increasing edge score).
    pub forest_edges: Vec<usize>,
    /// Total forest score `M`.
    pub forest_weight: f64,
    /// `M / (3 sqrt(n)) - 1/3`.
    pub lower: f64,
    /// `2 M`.
    pub upper: f64,
}

fn edge_score_denominator(graph: &Graph, e: usize) -> usize {
    let (u, v) = graph.edges()[e];
    graph.degree(u).max(graph.degree(v))
}

/// Edge indices of a maximum spanning forest under
/// `W(e) = 1 / max(deg(u), deg(v))`, accepted in non-increasing score
/// order; ties broken by input edge index.
fn maximum_spanning_forest(graph: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..graph.edge_count()).collect();
    // Larger W(e) means smaller max-degree; stable sort keeps input order
    // on ties.
    order.sort_by_key(|&e| edge_score_denominator(graph, e));
    let mut dsu = DisjointSet::new(graph.n());
    let mut forest = Vec::new();
    for e in order {
        let (u, v) = graph.edges()[e];
        if dsu.union(u, v) {
            forest.push(e);
        }
    }
    forest
}

/// Computes the spanning-forest certificate.
pub fn mst_bound(graph: &Graph) -> Result<BoundCertificate> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let forest_edges = maximum_spanning_forest(graph);
    let forest_weight: f64 = forest_edges
        .iter()
        .map(|&e| 1.0 / edge_score_denominator(graph, e) as f64)
        .sum();
    let n = graph.n() as f64;
    Ok(BoundCertificate {
        forest_weight,
        lower: forest_weight / (3.0 * n.sqrt()) - 1.0 / 3.0,
        upper: 2.0 * forest_weight,
        forest_edges,
    })
}

/// The constructive clustering behind the certificate's lower bound: drop
/// forest edges with `W(e) <= 1 / sqrt(n)`, then repeatedly take the
/// heaviest remaining edge as a two-vertex cluster and discard everything
/// it touches. Leftover vertices become singletons.
pub fn mst_greedy_clustering(graph: &Graph) -> Result<Clustering> {
    if graph.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let forest = maximum_spanning_forest(graph);
    let n = graph.n();
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut next_cluster = 0usize;
    for &e in &forest {
        // Keep W(e) > 1/sqrt(n), i.e. max_deg < sqrt(n), compared in
        // integers as max_deg^2 < n.
        let d = edge_score_denominator(graph, e);
        if d * d >= n {
            continue;
        }
        let (u, v) = graph.edges()[e];
        if assignment[u].is_none() && assignment[v].is_none() {
            assignment[u] = Some(next_cluster);
            assignment[v] = Some(next_cluster);
            next_cluster += 1;
        }
    }
    let partial = PartialClustering::from_assignment(assignment)
        .expect("pair clusters are nonempty by construction");
    Ok(partial.extend_to_full())
}
