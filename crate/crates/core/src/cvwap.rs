//! The capacitated vertex-weighted assignment problem (CVWAP).
//!
//! Input: a bipartite graph with sides `S` and `T` where every edge `(s, t)`
//! satisfies `w(s) >= w(t)`. A feasible solution assigns each `T`-vertex to
//! at most one adjacent `S`-vertex so that every `S`-vertex's assigned
//! `T`-weight stays within twice its own weight. The objective is
//! `v = sum_s 2 * |assigned(s)| / (3 * w(s))`.
//!
//! [`greedy_cvwap`] processes edges by non-decreasing `w(s) + w(t)` (the
//! cheapest edges carry the largest objective contribution) and is a
//! 1/2-approximation; [`exact_cvwap`] is the exhaustive reference solver
//! for small instances.

use std::collections::HashSet;

use num::{BigInt, BigRational, Zero};

use crate::bipartize::{BipartiteInstance, Side};
use crate::clustering::PartialClustering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weights::WeightAssignment;

/// Exhaustive-solver cap on `|T|`.
pub const EXACT_CVWAP_MAX_T: usize = 12;

/// A CVWAP instance. Vertices carry external ids (`s_id`/`t_id`) so that
/// solutions can be lifted back into the graph the instance came from;
/// synthetic instances use the dense ids `0..|S|+|T|`.
#[derive(Debug, Clone)]
pub struct CvwapInstance {
    s_ids: Vec<usize>,
    t_ids: Vec<usize>,
    s_weights: Vec<f64>,
    t_weights: Vec<f64>,
    /// Weight per external id, covering `0..universe`.
    universe_weights: Vec<f64>,
    /// (s-index, t-index) pairs.
    edges: Vec<(usize, usize)>,
    universe: usize,
    integral: bool,
}

impl CvwapInstance {
    /// Builds a synthetic instance over ids `0..|S|` for `S` and
    /// `|S|..|S|+|T|` for `T`.
    pub fn new(
        s_weights: Vec<f64>,
        t_weights: Vec<f64>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        for (i, &w) in s_weights.iter().chain(t_weights.iter()).enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidInstance(format!(
                    "weight {w} at combined index {i} is not strictly positive"
                )));
            }
        }
        let mut seen = HashSet::new();
        for &(s, t) in &edges {
            if s >= s_weights.len() || t >= t_weights.len() {
                return Err(Error::InvalidInstance(format!(
                    "edge ({s}, {t}) references a missing vertex"
                )));
            }
            if s_weights[s] < t_weights[t] {
                return Err(Error::InvalidInstance(format!(
                    "edge ({s}, {t}) has w(s) = {} < w(t) = {}",
                    s_weights[s], t_weights[t]
                )));
            }
            if !seen.insert((s, t)) {
                return Err(Error::InvalidInstance(format!("duplicate edge ({s}, {t})")));
            }
        }
        let s_len = s_weights.len();
        let universe = s_len + t_weights.len();
        let mut universe_weights = s_weights.clone();
        universe_weights.extend_from_slice(&t_weights);
        let integral = universe_weights
            .iter()
            .all(|w| w.fract() == 0.0 && *w <= u64::MAX as f64);
        Ok(Self {
            s_ids: (0..s_len).collect(),
            t_ids: (s_len..universe).collect(),
            s_weights,
            t_weights,
            universe_weights,
            edges,
            universe,
            integral,
        })
    }

    /// Converts a bipartization result; external ids are the origin graph's
    /// vertex ids.
    pub fn from_bipartite(instance: &BipartiteInstance<'_>) -> Self {
        let graph = instance.graph();
        let weights = instance.weights();
        let mut s_ids = Vec::new();
        let mut t_ids = Vec::new();
        let mut index_of = vec![0usize; graph.n()];
        for (v, slot) in index_of.iter_mut().enumerate() {
            match instance.side(v) {
                Side::S => {
                    *slot = s_ids.len();
                    s_ids.push(v);
                }
                Side::T => {
                    *slot = t_ids.len();
                    t_ids.push(v);
                }
            }
        }
        let edges = instance
            .kept_edges()
            .iter()
            .map(|&(s, t)| (index_of[s], index_of[t]))
            .collect();
        let s_weights: Vec<f64> = s_ids.iter().map(|&v| weights.value(v)).collect();
        let t_weights: Vec<f64> = t_ids.iter().map(|&v| weights.value(v)).collect();
        Self {
            s_ids,
            t_ids,
            s_weights,
            t_weights,
            universe_weights: weights.values().to_vec(),
            edges,
            universe: graph.n(),
            integral: weights.is_integral(),
        }
    }

    pub fn s_len(&self) -> usize {
        self.s_ids.len()
    }

    pub fn t_len(&self) -> usize {
        self.t_ids.len()
    }

    pub fn s_weight(&self, s: usize) -> f64 {
        self.s_weights[s]
    }

    pub fn t_weight(&self, t: usize) -> f64 {
        self.t_weights[t]
    }

    pub fn s_id(&self, s: usize) -> usize {
        self.s_ids[s]
    }

    pub fn t_id(&self, t: usize) -> usize {
        self.t_ids[t]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Size of the external id space.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    /// Materializes the instance as a plain graph over the external ids,
    /// with its weight assignment. Useful for scoring solutions with the
    /// generic objective evaluators.
    pub fn to_graph(&self) -> (Graph, WeightAssignment) {
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(s, t)| (self.s_ids[s], self.t_ids[t]))
            .collect();
        let graph = Graph::build(self.universe, &edges)
            .expect("instance edges are validated at construction");
        let weights = WeightAssignment::explicit(self.universe_weights.clone())
            .expect("instance weights are validated at construction");
        (graph, weights)
    }
}

/// A CVWAP solution: for each `T`-vertex, the `S`-vertex owning it, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    owner: Vec<Option<usize>>,
}

impl Assignment {
    pub fn empty(t_len: usize) -> Self {
        Self {
            owner: vec![None; t_len],
        }
    }

    /// Wraps a raw owner vector; feasibility is the caller's business and
    /// can be checked with [`Assignment::validate`].
    pub fn from_owner(owner: Vec<Option<usize>>) -> Self {
        Self { owner }
    }

    pub fn owner(&self, t: usize) -> Option<usize> {
        self.owner[t]
    }

    pub fn owners(&self) -> &[Option<usize>] {
        &self.owner
    }

    pub fn assigned_count(&self) -> usize {
        self.owner.iter().filter(|o| o.is_some()).count()
    }

    /// Checks the two feasibility invariants: assignments follow instance
    /// edges, and each cluster's `T`-weight stays within `2 w(s)`.
    pub fn validate(&self, instance: &CvwapInstance) -> Result<()> {
        assert_eq!(self.owner.len(), instance.t_len());
        let edge_set: HashSet<(usize, usize)> = instance.edges().iter().copied().collect();
        let mut load = vec![0.0f64; instance.s_len()];
        for (t, &owner) in self.owner.iter().enumerate() {
            if let Some(s) = owner {
                if !edge_set.contains(&(s, t)) {
                    return Err(Error::InvalidInstance(format!(
                        "assignment uses ({s}, {t}) which is not an instance edge"
                    )));
                }
                load[s] += instance.t_weight(t);
            }
        }
        for (s, &l) in load.iter().enumerate() {
            if l > 2.0 * instance.s_weight(s) {
                return Err(Error::InvalidInstance(format!(
                    "cluster of s = {s} carries T-weight {l} > 2 * {}",
                    instance.s_weight(s)
                )));
            }
        }
        Ok(())
    }

    /// Lifts the solution to a partial clustering over the external id
    /// space: one cluster per `S`-vertex (kept even when empty) joined by
    /// its assigned `T`-vertices; unassigned `T`-vertices stay unassigned.
    /// Cluster id `i` is the cluster of `S`-index `i`.
    pub fn to_partial_clustering(&self, instance: &CvwapInstance) -> PartialClustering {
        let mut assignment: Vec<Option<usize>> = vec![None; instance.universe()];
        for s in 0..instance.s_len() {
            assignment[instance.s_id(s)] = Some(s);
        }
        for (t, &owner) in self.owner.iter().enumerate() {
            if let Some(s) = owner {
                assignment[instance.t_id(t)] = Some(s);
            }
        }
        PartialClustering::from_assignment(assignment).expect("every cluster contains its S-vertex")
    }
}

/// Objective `v = sum_s 2 * |assigned(s)| / (3 * w(s))`.
pub fn cvwap_value(instance: &CvwapInstance, assignment: &Assignment) -> f64 {
    let mut counts = vec![0usize; instance.s_len()];
    for owner in assignment.owners().iter().flatten() {
        counts[*owner] += 1;
    }
    counts
        .iter()
        .enumerate()
        .map(|(s, &c)| 2.0 * c as f64 / (3.0 * instance.s_weight(s)))
        .sum()
}

/// Exact rational objective; requires integer weights.
pub fn cvwap_value_exact(instance: &CvwapInstance, assignment: &Assignment) -> Result<BigRational> {
    if !instance.is_integral() {
        return Err(Error::NonIntegralWeights);
    }
    let mut counts = vec![0u64; instance.s_len()];
    for owner in assignment.owners().iter().flatten() {
        counts[*owner] += 1;
    }
    let mut total = BigRational::zero();
    for (s, &c) in counts.iter().enumerate() {
        total += BigRational::new(
            BigInt::from(2 * c),
            BigInt::from(3 * instance.s_weight(s) as u64),
        );
    }
    Ok(total)
}

/// Stable LSD radix sort of `(key, payload)` pairs by key.
fn radix_sort(items: &mut Vec<(u64, u32)>) {
    let max_key = items.iter().map(|&(k, _)| k).max().unwrap_or(0);
    let mut buf: Vec<(u64, u32)> = vec![(0, 0); items.len()];
    let mut shift = 0u32;
    while shift < 64 && (max_key >> shift) > 0 {
        let mut counts = vec![0usize; 1 << 16];
        for &(k, _) in items.iter() {
            counts[((k >> shift) & 0xFFFF) as usize] += 1;
        }
        let mut pos = 0usize;
        for c in counts.iter_mut() {
            let next = pos + *c;
            *c = pos;
            pos = next;
        }
        for &(k, p) in items.iter() {
            let digit = ((k >> shift) & 0xFFFF) as usize;
            buf[counts[digit]] = (k, p);
            counts[digit] += 1;
        }
        std::mem::swap(items, &mut buf);
        shift += 16;
    }
}

/// Edge indices sorted by non-decreasing `w(s) + w(t)`, ties kept in input
/// order. Integer weights take the radix path, so the sort is linear in the
/// edge count.
fn sorted_edge_order(instance: &CvwapInstance) -> Vec<usize> {
    if instance.is_integral() {
        let mut keyed: Vec<(u64, u32)> = instance
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                (
                    instance.s_weight(s) as u64 + instance.t_weight(t) as u64,
                    i as u32,
                )
            })
            .collect();
        radix_sort(&mut keyed);
        keyed.into_iter().map(|(_, i)| i as usize).collect()
    } else {
        let mut order: Vec<usize> = (0..instance.edges().len()).collect();
        order.sort_by(|&a, &b| {
            let (sa, ta) = instance.edges()[a];
            let (sb, tb) = instance.edges()[b];
            let ka = instance.s_weight(sa) + instance.t_weight(ta);
            let kb = instance.s_weight(sb) + instance.t_weight(tb);
            ka.partial_cmp(&kb).expect("weights are finite")
        });
        order
    }
}

/// Greedy 1/2-approximation: scan edges by non-decreasing `w(s) + w(t)` and
/// accept `(s, t)` iff `t` is unowned and `s` still has capacity for `w(t)`.
pub fn greedy_cvwap(instance: &CvwapInstance) -> Assignment {
    let mut assignment = Assignment::empty(instance.t_len());
    let mut load = vec![0.0f64; instance.s_len()];
    for idx in sorted_edge_order(instance) {
        let (s, t) = instance.edges()[idx];
        if assignment.owner[t].is_some() {
            continue;
        }
        if load[s] + instance.t_weight(t) <= 2.0 * instance.s_weight(s) {
            assignment.owner[t] = Some(s);
            load[s] += instance.t_weight(t);
        }
    }
    assignment
}

/// Exhaustive CVWAP solver: tries every per-`t` owner choice (including
/// none) with capacity pruning and returns a maximum-value assignment,
/// the first one in enumeration order on ties.
///
/// Float screening with a tolerance band decides which leaves are worth an
/// exact rational comparison, so the argmax never hinges on float rounding
/// when weights are integers.
pub fn exact_cvwap(instance: &CvwapInstance) -> Result<Assignment> {
    if instance.t_len() > EXACT_CVWAP_MAX_T {
        return Err(Error::InstanceTooLarge {
            t_len: instance.t_len(),
            max: EXACT_CVWAP_MAX_T,
        });
    }
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); instance.t_len()];
    for &(s, t) in instance.edges() {
        adjacent[t].push(s);
    }
    for owners in adjacent.iter_mut() {
        owners.sort_unstable();
    }

    struct Search<'a> {
        instance: &'a CvwapInstance,
        adjacent: &'a [Vec<usize>],
        owner: Vec<Option<usize>>,
        load: Vec<f64>,
        value: f64,
        best: Option<(Assignment, f64, Option<BigRational>)>,
    }

    impl Search<'_> {
        fn exact_value(&self, owner: &[Option<usize>]) -> BigRational {
            let mut counts = vec![0u64; self.instance.s_len()];
            for o in owner.iter().flatten() {
                counts[*o] += 1;
            }
            let mut total = BigRational::zero();
            for (s, &c) in counts.iter().enumerate() {
                total += BigRational::new(
                    BigInt::from(2 * c),
                    BigInt::from(3 * self.instance.s_weight(s) as u64),
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
                self.best = Some((
                    Assignment {
                        owner: self.owner.clone(),
                    },
                    self.value,
                    candidate_exact,
                ));
            }
        }

        fn recurse(&mut self, t: usize) {
            if t == self.instance.t_len() {
                self.offer();
                return;
            }
            // Leaving t unassigned comes first in enumeration order.
            self.recurse(t + 1);
            for i in 0..self.adjacent[t].len() {
                let s = self.adjacent[t][i];
                let wt = self.instance.t_weight(t);
                if self.load[s] + wt <= 2.0 * self.instance.s_weight(s) {
                    self.owner[t] = Some(s);
                    self.load[s] += wt;
                    let unit = 2.0 / (3.0 * self.instance.s_weight(s));
                    self.value += unit;
                    self.recurse(t + 1);
                    self.value -= unit;
                    self.load[s] -= wt;
                    self.owner[t] = None;
                }
            }
        }
    }

    let mut search = Search {
        instance,
        adjacent: &adjacent,
        owner: vec![None; instance.t_len()],
        load: vec![0.0; instance.s_len()],
        value: 0.0,
        best: None,
    };
    search.recurse(0);
    Ok(search
        .best
        .map(|(assignment, _, _)| assignment)
        .unwrap_or_else(|| Assignment::empty(instance.t_len())))
}
