//! End-to-end approximation pipeline and a greedy agglomerative baseline.
//!
//! The pipeline for `lambda = 0` chains the randomized bipartization, the
//! greedy CVWAP solver, and the lift of the resulting assignment back to a
//! partial clustering of the input graph, which is then completed with
//! singletons. For `lambda` in `(0, 1]` the result competes against the
//! all-singletons clustering and the better of the two is returned, which
//! dominates the case split behind the `alpha/(1+alpha)` guarantee.

use std::collections::BTreeMap;

use rand::Rng;

use crate::bipartize::bipartize;
use crate::clustering::{Clustering, PartialClustering};
use crate::cvwap::{greedy_cvwap, Assignment, CvwapInstance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::objective::objective;
use crate::weights::WeightAssignment;

/// All intermediate artifacts of one pipeline run, for inspection and for
/// tests that audit the restricted partial clustering directly.
#[derive(Debug, Clone)]
pub struct Q0Run {
    pub instance: CvwapInstance,
    pub assignment: Assignment,
    pub partial: PartialClustering,
    pub clustering: Clustering,
}

/// One pipeline run at `lambda = 0`, keeping every intermediate stage.
pub fn solve_q0_detailed(graph: &Graph, weights: &WeightAssignment, seed: u64) -> Q0Run {
    let bipartite = bipartize(graph, weights, seed);
    let instance = CvwapInstance::from_bipartite(&bipartite);
    let assignment = greedy_cvwap(&instance);
    let partial = assignment.to_partial_clustering(&instance);
    let clustering = partial.extend_to_full();
    Q0Run {
        instance,
        assignment,
        partial,
        clustering,
    }
}

/// Randomized constant-factor approximation of the objective at
/// `lambda = 0`.
pub fn solve_q0(graph: &Graph, weights: &WeightAssignment, seed: u64) -> Clustering {
    solve_q0_detailed(graph, weights, seed).clustering
}

/// Approximation for `lambda` in `[0, 1]`: the better of the `lambda = 0`
/// pipeline result and the all-singletons clustering. At `lambda = 0` the
/// pipeline result is returned as-is.
pub fn solve_qlambda(
    graph: &Graph,
    weights: &WeightAssignment,
    lambda: f64,
    seed: u64,
) -> Result<Clustering> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let candidate = solve_q0(graph, weights, seed);
    if lambda == 0.0 || graph.n() == 0 {
        return Ok(candidate);
    }
    let singletons = Clustering::singletons(graph.n());
    if objective(graph, weights, &singletons, lambda)
        > objective(graph, weights, &candidate, lambda)
    {
        Ok(singletons)
    } else {
        Ok(candidate)
    }
}

/// Runs [`solve_qlambda`] with `trials` seeds and keeps the best result by
/// objective value; earlier trials win ties. Trial 0 uses `seed` itself, so
/// `trials = 1` reproduces a single [`solve_qlambda`] call, and further
/// trial seeds are drawn from a generator seeded with `seed`.
pub fn solve_best_of(
    graph: &Graph,
    weights: &WeightAssignment,
    lambda: f64,
    trials: usize,
    seed: u64,
) -> Result<Clustering> {
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    let mut master = crate::bipartize::rng_from_seed(seed);
    let mut best: Option<(Clustering, f64)> = None;
    for trial in 0..trials {
        let trial_seed = if trial == 0 {
            seed
        } else {
            master.random::<u64>()
        };
        let clustering = solve_qlambda(graph, weights, lambda, trial_seed)?;
        let value = objective(graph, weights, &clustering, lambda);
        let better = match &best {
            None => true,
            Some((_, best_value)) => value > *best_value,
        };
        if better {
            best = Some((clustering, value));
        }
    }
    Ok(best.expect("trials >= 1").0)
}

/// Greedy agglomerative baseline: start from singletons and repeatedly
/// merge the edge-connected cluster pair whose merge increases the
/// objective the most, stopping when no merge improves it. Ties prefer the
/// lexicographically smallest cluster-id pair.
pub fn greedy_agglomerative(graph: &Graph, weights: &WeightAssignment, lambda: f64) -> Clustering {
    let n = graph.n();
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut alive = vec![true; n];
    let mut internal = vec![0usize; n];
    let mut weight: Vec<f64> = (0..n).map(|v| weights.value(v)).collect();
    let mut adjacency: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for &(u, v) in graph.edges() {
        *adjacency[u].entry(v).or_default() += 1;
        *adjacency[v].entry(u).or_default() += 1;
    }

    loop {
        let mut best: Option<(f64, usize, usize)> = None;
        for a in 0..n {
            if !alive[a] {
                continue;
            }
            let quality_a = 2.0 * internal[a] as f64 / weight[a];
            for (&b, &cross) in adjacency[a].range(a + 1..) {
                let quality_b = 2.0 * internal[b] as f64 / weight[b];
                let merged =
                    2.0 * (internal[a] + internal[b] + cross) as f64 / (weight[a] + weight[b]);
                let delta = merged - quality_a - quality_b - lambda;
                if best.is_none_or(|(best_delta, _, _)| delta > best_delta) {
                    best = Some((delta, a, b));
                }
            }
        }
        let Some((delta, a, b)) = best else { break };
        if delta <= 0.0 {
            break;
        }

        let cross = adjacency[a].remove(&b).expect("pair came from adjacency");
        adjacency[b].remove(&a);
        internal[a] += internal[b] + cross;
        weight[a] += weight[b];
        let absorbed = std::mem::take(&mut members[b]);
        members[a].extend(absorbed);
        let neighbors = std::mem::take(&mut adjacency[b]);
        for (x, c) in neighbors {
            *adjacency[a].entry(x).or_default() += c;
            adjacency[x].remove(&b);
            *adjacency[x].entry(a).or_default() += c;
        }
        alive[b] = false;
    }

    let mut labels = vec![0usize; n];
    for (cluster, group) in members.iter().enumerate() {
        for &v in group {
            labels[v] = cluster;
        }
    }
    Clustering::from_labels(&labels)
}
