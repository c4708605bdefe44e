//! Exact brute-force optimizers used as ground truth in tests.
//!
//! Set partitions are enumerated through restricted growth strings, so each
//! partition appears exactly once. The optimizers are deliberately
//! unpruned: at the capped sizes correctness is worth more than speed.

use num::{BigInt, BigRational, Zero};

use crate::clustering::{Clustering, PartialClustering};
use crate::cvwap::{Assignment, CvwapInstance};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::objective::objective_exact;
use crate::weights::WeightAssignment;

/// Cap on the vertex count for exhaustive enumeration; Bell(12) is about
/// 4.2 million.
pub const ORACLE_MAX_N: usize = 12;

/// Streams every set partition of `0..n` exactly once.
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: ORACLE_MAX_N,
        });
    }
    Ok(Partitions {
        assignment: vec![0; n],
        prefix_max: vec![0; n],
        started: false,
        done: false,
    })
}

/// Iterator over set partitions encoded as restricted growth strings:
/// `a[0] = 0` and `a[i] <= 1 + max(a[0..i])`.
#[derive(Debug)]
pub struct Partitions {
    assignment: Vec<usize>,
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl Partitions {
    /// Advances to the next partition and exposes it without allocating.
    fn next_ref(&mut self) -> Option<(&[usize], usize)> {
        let n = self.assignment.len();
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else {
            let mut advanced = false;
            for i in (1..n).rev() {
                if self.assignment[i] <= self.prefix_max[i - 1] {
                    self.assignment[i] += 1;
                    self.prefix_max[i] = self.prefix_max[i - 1].max(self.assignment[i]);
                    for j in i + 1..n {
                        self.assignment[j] = 0;
                        self.prefix_max[j] = self.prefix_max[i];
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.done = true;
                return None;
            }
        }
        let k = if n == 0 {
            0
        } else {
            self.prefix_max[n - 1] + 1
        };
        Some((&self.assignment, k))
    }
}

impl Iterator for Partitions {
    type Item = Clustering;

    fn next(&mut self) -> Option<Clustering> {
        let (assignment, _) = self.next_ref()?;
        Some(
            Clustering::from_assignment(assignment.to_vec())
                .expect("restricted growth strings are canonical"),
        )
    }
}

/// Maximizes the float objective over all partitions; ties resolve to the
/// first partition in enumeration order.
pub fn exact_opt(
    graph: &Graph,
    weights: &WeightAssignment,
    lambda: f64,
) -> Result<(Clustering, f64)> {
    let n = graph.n();
    let mut partitions = enumerate_partitions(n)?;
    let mut best_assignment: Option<Vec<usize>> = None;
    let mut best_value = f64::NEG_INFINITY;
    let mut internal = vec![0usize; n.max(1)];
    let mut weight = vec![0.0f64; n.max(1)];
    while let Some((assignment, k)) = partitions.next_ref() {
        internal[..k].fill(0);
        weight[..k].fill(0.0);
        for (v, &c) in assignment.iter().enumerate() {
            weight[c] += weights.value(v);
        }
        for &(u, v) in graph.edges() {
            if assignment[u] == assignment[v] {
                internal[assignment[u]] += 1;
            }
        }
        let mut value = 0.0;
        for c in 0..k {
            value += lambda + 2.0 * internal[c] as f64 / weight[c];
        }
        if value > best_value || best_assignment.is_none() {
            best_value = value;
            best_assignment = Some(assignment.to_vec());
        }
    }
    let assignment = best_assignment.expect("at least one partition exists");
    let clustering =
        Clustering::from_assignment(assignment).expect("enumeration yields valid partitions");
    Ok((clustering, best_value))
}

/// Result of [`exact_opt_rational`].
#[derive(Debug, Clone)]
pub struct ExactOptimum {
    pub clustering: Clustering,
    pub value: BigRational,
    /// Number of partitions attaining the maximum; 1 means the optimum is
    /// unique.
    pub optima_count: usize,
}

/// Maximizes the objective in exact rational arithmetic (integer weights
/// only), reporting how many partitions attain the maximum.
pub fn exact_opt_rational(
    graph: &Graph,
    weights: &WeightAssignment,
    lambda: &BigRational,
) -> Result<ExactOptimum> {
    if !weights.is_integral() {
        return Err(Error::NonIntegralWeights);
    }
    let n = graph.n();
    let mut partitions = enumerate_partitions(n)?;
    let mut best: Option<(Vec<usize>, BigRational, usize)> = None;
    let mut internal = vec![0u64; n.max(1)];
    let mut weight = vec![0u128; n.max(1)];
    while let Some((assignment, k)) = partitions.next_ref() {
        internal[..k].fill(0);
        weight[..k].fill(0);
        for (v, &c) in assignment.iter().enumerate() {
            weight[c] += weights.integer_value(v)? as u128;
        }
        for &(u, v) in graph.edges() {
            if assignment[u] == assignment[v] {
                internal[assignment[u]] += 1;
            }
        }
        let mut value = BigRational::zero();
        for c in 0..k {
            value +=
                lambda + BigRational::new(BigInt::from(2 * internal[c]), BigInt::from(weight[c]));
        }
        match &mut best {
            None => best = Some((assignment.to_vec(), value, 1)),
            Some((best_assignment, best_value, count)) => {
                if value > *best_value {
                    *best_assignment = assignment.to_vec();
                    *best_value = value;
                    *count = 1;
                } else if value == *best_value {
                    *count += 1;
                }
            }
        }
    }
    let (assignment, value, optima_count) = best.expect("at least one partition exists");
    Ok(ExactOptimum {
        clustering: Clustering::from_assignment(assignment)
            .expect("enumeration yields valid partitions"),
        value,
        optima_count,
    })
}

/// Maximizes `Q^0_w` over restricted partial clusterings of a bipartite
/// instance: each cluster holds exactly one `S`-vertex and `T`-weight at
/// most twice the `S`-weight. Exhaustive over per-`t` owner choices with
/// capacity pruning; float screening plus exact rational confirmation picks
/// the argmax when weights are integers.
pub fn exact_restricted_opt(instance: &CvwapInstance) -> Result<(PartialClustering, f64)> {
    let total = instance.s_len() + instance.t_len();
    if total > ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n: total,
            max: ORACLE_MAX_N,
        });
    }
    let s_len = instance.s_len();
    let t_len = instance.t_len();
    let mut is_edge = vec![false; s_len * t_len];
    for &(s, t) in instance.edges() {
        is_edge[s * t_len + t] = true;
    }

    struct Search<'a> {
        instance: &'a CvwapInstance,
        is_edge: &'a [bool],
        owner: Vec<Option<usize>>,
        load: Vec<f64>,
        edges_in: Vec<usize>,
        value: f64,
        best: Option<(Vec<Option<usize>>, f64, Option<BigRational>)>,
    }

    impl Search<'_> {
        fn cluster_term(&self, s: usize) -> f64 {
            2.0 * self.edges_in[s] as f64 / (self.instance.s_weight(s) + self.load[s])
        }

        fn exact_value(&self, owner: &[Option<usize>]) -> BigRational {
            let t_len = self.instance.t_len();
            let mut edges_in = vec![0u64; self.instance.s_len()];
            let mut load = vec![0u64; self.instance.s_len()];
            for (t, o) in owner.iter().enumerate() {
                if let Some(s) = o {
                    load[*s] += self.instance.t_weight(t) as u64;
                    if self.is_edge[*s * t_len + t] {
                        edges_in[*s] += 1;
                    }
                }
            }
            let mut total = BigRational::zero();
            for s in 0..self.instance.s_len() {
                total += BigRational::new(
                    BigInt::from(2 * edges_in[s]),
                    BigInt::from(self.instance.s_weight(s) as u64 + load[s]),
                );
            }
            total
        }

        fn offer(&mut self) {
            let band = 1e-9 * (1.0 + self.value.abs());
            if let Some((_, best_float, _)) = &self.best {
                if self.value <= *best_float - band {
                    return;
                }
            }
            let candidate_exact = self
                .instance
                .is_integral()
                .then(|| self.exact_value(&self.owner));
            let improved = match (&self.best, &candidate_exact) {
                (None, _) => true,
                (Some((_, _, Some(best_exact))), Some(candidate)) => candidate > best_exact,
                (Some((_, best_float, None)), None) => self.value > *best_float,
                _ => unreachable!("integrality is fixed per instance"),
            };
            if improved {
                self.best = Some((self.owner.clone(), self.value, candidate_exact));
            }
        }

        fn recurse(&mut self, t: usize) {
            if t == self.instance.t_len() {
                self.offer();
                return;
            }
            // Leaving t out comes first in enumeration order, which makes
            // ties resolve away from useless memberships.
            self.recurse(t + 1);
            let wt = self.instance.t_weight(t);
            for s in 0..self.instance.s_len() {
                if self.load[s] + wt <= 2.0 * self.instance.s_weight(s) {
                    let old_term = self.cluster_term(s);
                    self.owner[t] = Some(s);
                    self.load[s] += wt;
                    if self.is_edge[s * self.instance.t_len() + t] {
                        self.edges_in[s] += 1;
                    }
                    self.value += self.cluster_term(s) - old_term;
                    self.recurse(t + 1);
                    self.value -= self.cluster_term(s) - old_term;
                    if self.is_edge[s * self.instance.t_len() + t] {
                        self.edges_in[s] -= 1;
                    }
                    self.load[s] -= wt;
                    self.owner[t] = None;
                }
            }
        }
    }

    let mut search = Search {
        instance,
        is_edge: &is_edge,
        owner: vec![None; t_len],
        load: vec![0.0; s_len],
        edges_in: vec![0; s_len],
        value: 0.0,
        best: None,
    };
    search.recurse(0);
    let (owner, float_value, _) = search.best.expect("the all-unassigned leaf always exists");
    let assignment = Assignment::from_owner(owner);
    debug_assert!(assignment.validate(instance).is_ok());
    Ok((assignment.to_partial_clustering(instance), float_value))
}

/// Evaluates `Q^0_w` of a partial clustering of the instance's bipartite
/// graph in exact rational arithmetic.
pub fn restricted_value_exact(
    instance: &CvwapInstance,
    partial: &PartialClustering,
) -> Result<BigRational> {
    let (graph, weights) = instance.to_graph();
    objective_exact(&graph, &weights, partial, &BigRational::zero())
}
