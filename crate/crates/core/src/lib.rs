//! Graph clustering by ratio-based cluster quality.
//!
//! A cluster's quality is twice its internal edge count divided by its
//! total vertex weight; the clustering objective sums `lambda + quality`
//! over all clusters, so `lambda` regularizes the cluster count. Under
//! degree weights the objective is affinely related to normalized cut,
//! normalized associations, and normalized modularity; under unit weights
//! it is twice the sum of cluster edge densities.
//!
//! The crate provides:
//! - evaluators for all of these measures, in f64 and in exact rational
//!   arithmetic ([`objective`]);
//! - a randomized linear-time constant-factor approximation pipeline:
//!   bipartize the graph ([`bipartize`]), solve the resulting capacitated
//!   assignment problem greedily ([`cvwap`]), lift and complete the
//!   solution ([`pipeline`]);
//! - a greedy agglomerative baseline ([`pipeline::greedy_agglomerative`]);
//! - spanning-forest certificates bounding the optimum ([`bounds`]);
//! - brute-force optimizers over all set partitions for ground truth at
//!   small scale ([`oracle`]).

pub mod bipartize;
pub mod bounds;
pub mod clustering;
pub mod cvwap;
pub mod dsu;
pub mod error;
pub mod graph;
pub mod objective;
pub mod oracle;
pub mod pipeline;
pub mod weights;

pub use clustering::{ClusterView, Clustering, PartialClustering};
pub use error::{Error, Result};
pub use graph::Graph;
pub use weights::{WeightAssignment, WeightMode};
