//! Evaluators for the ratio-based clustering objective and its relatives.
//!
//! The central quantity is the cluster quality `q_w(C) = 2|E(C)| / w(C)`;
//! the clustering objective sums `lambda + q_w(C_i)` over clusters. Under
//! degree weights this is affinely tied to normalized cut, normalized
//! associations, and normalized modularity; under unit weights it is twice
//! the sum of cluster edge densities.
//!
//! All evaluators take f64 weights; the `*_exact` variants additionally
//! require integer weights and compute in arbitrary-precision rationals so
//! identity tests never hinge on float rounding.

use num::{BigInt, BigRational, Zero};

use crate::clustering::{ClusterView, Clustering};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::WeightAssignment;

/// Internal edge count and total weight per cluster.
fn cluster_aggregates<C: ClusterView>(
    graph: &Graph,
    weights: &WeightAssignment,
    clustering: &C,
) -> (Vec<usize>, Vec<f64>) {
    let k = clustering.num_clusters();
    let mut internal = vec![0usize; k];
    let mut weight = vec![0.0f64; k];
    for v in 0..graph.n() {
        if let Some(c) = clustering.cluster_of_vertex(v) {
            weight[c] += weights.value(v);
        }
    }
    for &(u, v) in graph.edges() {
        if let (Some(cu), Some(cv)) = (
            clustering.cluster_of_vertex(u),
            clustering.cluster_of_vertex(v),
        ) {
            if cu == cv {
                internal[cu] += 1;
            }
        }
    }
    (internal, weight)
}

/// Quality `q_w(C) = 2|E(C)| / w(C)` of one vertex set.
///
/// The vertices in `cluster` must be distinct.
pub fn cluster_quality(
    graph: &Graph,
    weights: &WeightAssignment,
    cluster: &[usize],
) -> Result<f64> {
    if cluster.is_empty() {
        return Err(Error::EmptyCluster);
    }
    let mut member = vec![false; graph.n()];
    let mut total_weight = 0.0;
    for &v in cluster {
        debug_assert!(!member[v], "duplicate vertex {v} in cluster");
        member[v] = true;
        total_weight += weights.value(v);
    }
    let mut internal = 0usize;
    for &v in cluster {
        for &e in graph.incident(v) {
            let (a, b) = graph.edges()[e];
            // Count each internal edge once, at its smaller endpoint.
            if member[a] && member[b] && v == a.min(b) {
                internal += 1;
            }
        }
    }
    Ok(2.0 * internal as f64 / total_weight)
}

/// Objective `Q^lambda_w = sum_i (lambda + q_w(C_i))` over the clusters
/// present in a clustering or partial clustering.
pub fn objective<C: ClusterView>(
    graph: &Graph,
    weights: &WeightAssignment,
    clustering: &C,
    lambda: f64,
) -> f64 {
    assert_eq!(clustering.vertex_count(), graph.n());
    assert_eq!(weights.len(), graph.n());
    let (internal, weight) = cluster_aggregates(graph, weights, clustering);
    internal
        .iter()
        .zip(&weight)
        .map(|(&e, &w)| lambda + 2.0 * e as f64 / w)
        .sum()
}

/// Exact rational objective; requires integer weights.
pub fn objective_exact<C: ClusterView>(
    graph: &Graph,
    weights: &WeightAssignment,
    clustering: &C,
    lambda: &BigRational,
) -> Result<BigRational> {
    assert_eq!(clustering.vertex_count(), graph.n());
    if !weights.is_integral() {
        return Err(Error::NonIntegralWeights);
    }
    let k = clustering.num_clusters();
    let mut internal = vec![0u64; k];
    let mut weight = vec![0u128; k];
    for v in 0..graph.n() {
        if let Some(c) = clustering.cluster_of_vertex(v) {
            weight[c] += weights.integer_value(v)? as u128;
        }
    }
    for &(u, v) in graph.edges() {
        if let (Some(cu), Some(cv)) = (
            clustering.cluster_of_vertex(u),
            clustering.cluster_of_vertex(v),
        ) {
            if cu == cv {
                internal[cu] += 1;
            }
        }
    }
    let mut total = BigRational::zero();
    for (e, w) in internal.iter().zip(&weight) {
        total += lambda + BigRational::new(BigInt::from(2 * e), BigInt::from(*w));
    }
    Ok(total)
}

/// Normalized cut: `sum_i |E_out(C_i)| / vol(C_i)`.
pub fn ncut(graph: &Graph, clustering: &Clustering) -> Result<f64> {
    assert_eq!(clustering.len(), graph.n());
    if let Some(v) = graph.has_isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let k = clustering.k();
    let mut cut = vec![0usize; k];
    let mut volume = vec![0usize; k];
    for v in 0..graph.n() {
        volume[clustering.cluster_of(v)] += graph.degree(v);
    }
    for &(u, v) in graph.edges() {
        let (cu, cv) = (clustering.cluster_of(u), clustering.cluster_of(v));
        if cu != cv {
            cut[cu] += 1;
            cut[cv] += 1;
        }
    }
    Ok(cut
        .iter()
        .zip(&volume)
        .map(|(&c, &vol)| c as f64 / vol as f64)
        .sum())
}

/// Normalized associations: the objective at lambda = 0 under degree weights.
pub fn nassoc(graph: &Graph, clustering: &Clustering) -> Result<f64> {
    let weights = WeightAssignment::degree(graph)?;
    Ok(objective(graph, &weights, clustering, 0.0))
}

/// Modularity `sum_i (|E(C_i)| - vol^2(C_i)/m) / m` with `m = |E|`.
pub fn modularity(graph: &Graph, clustering: &Clustering) -> Result<f64> {
    assert_eq!(clustering.len(), graph.n());
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let k = clustering.k();
    let mut internal = vec![0usize; k];
    let mut volume = vec![0usize; k];
    for v in 0..graph.n() {
        volume[clustering.cluster_of(v)] += graph.degree(v);
    }
    for &(u, v) in graph.edges() {
        if clustering.cluster_of(u) == clustering.cluster_of(v) {
            internal[clustering.cluster_of(u)] += 1;
        }
    }
    let m = m as f64;
    Ok(internal
        .iter()
        .zip(&volume)
        .map(|(&e, &vol)| (e as f64 - (vol as f64) * (vol as f64) / m) / m)
        .sum())
}

/// Normalized modularity via its closed form `(Q^0_deg / 2 - 1) / m`.
pub fn normalized_modularity(graph: &Graph, clustering: &Clustering) -> Result<f64> {
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::EmptyGraph);
    }
    let q0 = nassoc(graph, clustering)?;
    Ok((q0 / 2.0 - 1.0) / m as f64)
}

/// Sum of cluster edge densities `sum_i |E(C_i)| / |C_i|`; equals the
/// unit-weight objective at lambda = 0 divided by two.
pub fn density_sum(graph: &Graph, clustering: &Clustering) -> f64 {
    assert_eq!(clustering.len(), graph.n());
    let k = clustering.k();
    let mut internal = vec![0usize; k];
    let mut size = vec![0usize; k];
    for v in 0..graph.n() {
        size[clustering.cluster_of(v)] += 1;
    }
    for &(u, v) in graph.edges() {
        if clustering.cluster_of(u) == clustering.cluster_of(v) {
            internal[clustering.cluster_of(u)] += 1;
        }
    }
    internal
        .iter()
        .zip(&size)
        .map(|(&e, &s)| e as f64 / s as f64)
        .sum()
}

/// Exact rational density sum.
pub fn density_sum_exact(graph: &Graph, clustering: &Clustering) -> BigRational {
    assert_eq!(clustering.len(), graph.n());
    let k = clustering.k();
    let mut internal = vec![0usize; k];
    let mut size = vec![0usize; k];
    for v in 0..graph.n() {
        size[clustering.cluster_of(v)] += 1;
    }
    for &(u, v) in graph.edges() {
        if clustering.cluster_of(u) == clustering.cluster_of(v) {
            internal[clustering.cluster_of(u)] += 1;
        }
    }
    internal
        .iter()
        .zip(&size)
        .map(|(&e, &s)| BigRational::new(BigInt::from(e), BigInt::from(s)))
        .sum()
}
