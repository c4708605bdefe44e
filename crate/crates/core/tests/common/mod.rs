//! Shared generators and statistics helpers for the integration suites.

use num::{BigInt, BigRational};
use qclust::cvwap::CvwapInstance;
use qclust::{Clustering, Graph, WeightAssignment};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random attachment tree plus extra edges with
/// probability `extra_p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra_p: f64) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        edges.push((u, v));
    }
    let tree: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.random_bool(extra_p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// Random graph with no isolated vertex and at least one edge: random
/// edges, then every isolated vertex is attached to a random neighbor.
pub fn random_graph_no_isolated(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    assert!(n >= 2);
    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
                degree[u] += 1;
                degree[v] += 1;
            }
        }
    }
    for v in 0..n {
        if degree[v] == 0 {
            let mut u = rng.random_range(0..n - 1);
            if u >= v {
                u += 1;
            }
            let pair = (u.min(v), u.max(v));
            if !edges.contains(&pair) {
                edges.push(pair);
                degree[pair.0] += 1;
                degree[pair.1] += 1;
            }
        }
    }
    // A lone reattachment can still collide; retry from scratch in that
    // unlikely case.
    if degree.contains(&0) || edges.is_empty() {
        return random_graph_no_isolated(rng, n, p);
    }
    Graph::build(n, &edges).unwrap()
}

pub fn random_clustering(rng: &mut ChaCha8Rng, n: usize) -> Clustering {
    let labels: Vec<usize> = (0..n).map(|_| rng.random_range(0..n)).collect();
    Clustering::from_labels(&labels)
}

pub fn random_integer_weights(
    rng: &mut ChaCha8Rng,
    n: usize,
    lo: u64,
    hi: u64,
) -> WeightAssignment {
    let values: Vec<f64> = (0..n).map(|_| rng.random_range(lo..=hi) as f64).collect();
    WeightAssignment::explicit(values).unwrap()
}

/// Random CVWAP instance with integer weights in `1..=8`; edges only
/// between compatible pairs.
pub fn random_cvwap_instance(
    rng: &mut ChaCha8Rng,
    s_len: usize,
    t_len: usize,
    edge_p: f64,
) -> CvwapInstance {
    let s_weights: Vec<f64> = (0..s_len)
        .map(|_| rng.random_range(1..=8u64) as f64)
        .collect();
    let t_weights: Vec<f64> = (0..t_len)
        .map(|_| rng.random_range(1..=8u64) as f64)
        .collect();
    let mut edges = Vec::new();
    for (s, &ws) in s_weights.iter().enumerate() {
        for (t, &wt) in t_weights.iter().enumerate() {
            if ws >= wt && rng.random_bool(edge_p) {
                edges.push((s, t));
            }
        }
    }
    CvwapInstance::new(s_weights, t_weights, edges).unwrap()
}

/// Mean and standard error of the mean.
pub fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

pub fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    use num::ToPrimitive;
    x.to_f64().unwrap()
}

/// The 20 graphs + degree weights shared by the end-to-end expectation and
/// value-sandwich criteria.
pub fn pipeline_test_graphs() -> Vec<(Graph, WeightAssignment)> {
    let mut rng = rng(0x9e37_79b9);
    (0..20)
        .map(|_| {
            let n = rng.random_range(3..=8);
            let g = random_connected_graph(&mut rng, n, 0.35);
            let w = WeightAssignment::degree(&g).unwrap();
            (g, w)
        })
        .collect()
}

/// The 500 bipartite instances shared by the structural-bound and
/// value-sandwich criteria.
pub fn restricted_test_instances() -> Vec<CvwapInstance> {
    let mut rng = rng(0x51_f355);
    (0..500)
        .map(|_| {
            let s_len = rng.random_range(1..=7);
            let t_len = rng.random_range(0..=8 - s_len);
            random_cvwap_instance(&mut rng, s_len, t_len, 0.6)
        })
        .collect()
}
