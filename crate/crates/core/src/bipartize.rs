//! Randomized reduction from a weighted graph to a bipartite instance.
//!
//! Each vertex is colored by an independent fair coin, one of the two
//! colors is chosen uniformly to be the `S` side, and an edge survives iff
//! its endpoints land on opposite sides with the `S` endpoint at least as
//! heavy as the `T` endpoint. Each edge survives with probability at least
//! 1/4 (exactly 1/2 when its endpoint weights tie), which preserves a
//! quarter of the optimal objective value in expectation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::WeightAssignment;

/// Side label of a vertex in the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    S,
    T,
}

/// Output of [`bipartize`]: side labels plus the surviving oriented edges.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteInstance<'a> {
    graph: &'a Graph,
    weights: &'a WeightAssignment,
    side: Vec<Side>,
    kept_edges: Vec<(usize, usize)>,
    kept_indices: Vec<usize>,
}

impl<'a> BipartiteInstance<'a> {
    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn weights(&self) -> &'a WeightAssignment {
        self.weights
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    /// Surviving edges oriented as `(s, t)` with `s` on the `S` side.
    pub fn kept_edges(&self) -> &[(usize, usize)] {
        &self.kept_edges
    }

    /// Indices into the origin graph's edge list, parallel to `kept_edges`.
    pub fn kept_indices(&self) -> &[usize] {
        &self.kept_indices
    }
}

/// Reproducible RNG used everywhere a seed enters the crate.
pub(crate) fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Randomized bipartization. One coin per vertex in vertex-id order, then
/// one coin choosing which color becomes `S`; same seed, same output.
pub fn bipartize<'a>(
    graph: &'a Graph,
    weights: &'a WeightAssignment,
    seed: u64,
) -> BipartiteInstance<'a> {
    assert_eq!(weights.len(), graph.n());
    let mut rng = rng_from_seed(seed);
    let colors: Vec<bool> = (0..graph.n()).map(|_| rng.random_bool(0.5)).collect();
    let s_color = rng.random_bool(0.5);
    let side: Vec<Side> = colors
        .iter()
        .map(|&c| if c == s_color { Side::S } else { Side::T })
        .collect();

    let mut kept_edges = Vec::new();
    let mut kept_indices = Vec::new();
    for (idx, &(u, v)) in graph.edges().iter().enumerate() {
        if side[u] == side[v] {
            continue;
        }
        let (s, t) = if side[u] == Side::S { (u, v) } else { (v, u) };
        if weights.value(s) >= weights.value(t) {
            kept_edges.push((s, t));
            kept_indices.push(idx);
        }
    }
    BipartiteInstance {
        graph,
        weights,
        side,
        kept_edges,
        kept_indices,
    }
}

/// Empirical per-edge keep frequency over `trials` independent seeds.
pub fn keep_probability_audit(
    graph: &Graph,
    weights: &WeightAssignment,
    trials: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    let mut master = rng_from_seed(seed);
    let mut counts = vec![0usize; graph.edge_count()];
    for _ in 0..trials {
        let trial_seed = master.random::<u64>();
        let instance = bipartize(graph, weights, trial_seed);
        for &idx in instance.kept_indices() {
            counts[idx] += 1;
        }
    }
    Ok(counts
        .into_iter()
        .map(|c| c as f64 / trials as f64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn same_seed_same_instance() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let w = WeightAssignment::degree(&g).unwrap();
        for seed in 0..50 {
            let a = bipartize(&g, &w, seed);
            let b = bipartize(&g, &w, seed);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn kept_edges_are_oriented_and_original() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let w = WeightAssignment::explicit(vec![4.0, 1.0, 3.0, 2.0]).unwrap();
        for seed in 0..200 {
            let inst = bipartize(&g, &w, seed);
            assert_eq!(inst.kept_edges().len(), inst.kept_indices().len());
            for (&(s, t), &idx) in inst.kept_edges().iter().zip(inst.kept_indices()) {
                assert_eq!(inst.side(s), Side::S);
                assert_eq!(inst.side(t), Side::T);
                assert!(w.value(s) >= w.value(t));
                let (u, v) = g.edges()[idx];
                assert!((s, t) == (u, v) || (s, t) == (v, u));
            }
        }
    }

    #[test]
    fn equal_weight_edge_kept_half_the_time() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        let w = WeightAssignment::degree(&g).unwrap();
        let freq = keep_probability_audit(&g, &w, 10_000, 7).unwrap();
        assert!((freq[0] - 0.5).abs() < 0.02, "freq = {}", freq[0]);
    }

    #[test]
    fn distinct_weight_edge_kept_quarter_of_the_time() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        let w = WeightAssignment::explicit(vec![3.0, 1.0]).unwrap();
        let freq = keep_probability_audit(&g, &w, 10_000, 11).unwrap();
        assert!((freq[0] - 0.25).abs() < 0.02, "freq = {}", freq[0]);
    }

    #[test]
    fn triangle_expected_kept_count() {
        let g = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let w = WeightAssignment::degree(&g).unwrap();
        let trials = 10_000;
        let freq = keep_probability_audit(&g, &w, trials, 3).unwrap();
        let expected_count: f64 = freq.iter().sum();
        assert!(
            (expected_count - 1.5).abs() < 0.05,
            "mean kept count = {expected_count}"
        );
    }

    #[test]
    fn every_edge_clears_the_quarter_bound() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3), (0, 2)]).unwrap();
        let w = WeightAssignment::explicit(vec![5.0, 1.0, 4.0, 2.0, 3.0]).unwrap();
        let trials = 4000;
        let freq = keep_probability_audit(&g, &w, trials, 19).unwrap();
        // Bernoulli sampling margin at p = 1/4.
        let margin = 3.0 * (0.25 * 0.75 / trials as f64).sqrt();
        for (e, &f) in freq.iter().enumerate() {
            assert!(f >= 0.25 - margin, "edge {e} kept with frequency {f}");
        }
    }

    #[test]
    fn audit_rejects_zero_trials() {
        let g = Graph::build(2, &[(0, 1)]).unwrap();
        let w = WeightAssignment::unit(&g);
        assert_eq!(
            keep_probability_audit(&g, &w, 0, 0).unwrap_err(),
            Error::InvalidTrials
        );
    }

    proptest! {
        /// Side labels partition the vertex set and every kept edge is an
        /// edge of the origin graph satisfying the weight orientation.
        #[test]
        fn structural_postconditions(seed in 0u64..1000, ws in proptest::collection::vec(1u8..6, 5)) {
            let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (1, 4)]).unwrap();
            let values: Vec<f64> = ws.iter().map(|&x| x as f64).collect();
            let w = WeightAssignment::explicit(values).unwrap();
            let inst = bipartize(&g, &w, seed);
            prop_assert_eq!(inst.sides().len(), g.n());
            let mut kept = std::collections::HashSet::new();
            for (&(s, t), &idx) in inst.kept_edges().iter().zip(inst.kept_indices()) {
                prop_assert!(w.value(s) >= w.value(t));
                prop_assert!(idx < g.edge_count());
                prop_assert!(kept.insert(idx));
            }
        }
    }
}
