//! Clusterings and partial clusterings of a vertex set.

use crate::error::{Error, Result};

/// A partition of `0..n` into `k` disjoint nonempty clusters with ids `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    assignment: Vec<usize>,
    k: usize,
}

impl Clustering {
    /// Every vertex in its own cluster.
    pub fn singletons(n: usize) -> Self {
        Self {
            assignment: (0..n).collect(),
            k: n,
        }
    }

    /// All vertices in one cluster; `n` must be positive.
    pub fn single_cluster(n: usize) -> Self {
        assert!(n > 0, "a cluster must be nonempty");
        Self {
            assignment: vec![0; n],
            k: 1,
        }
    }

    /// Validates that cluster ids are exactly `0..k` with no empty cluster.
    pub fn from_assignment(assignment: Vec<usize>) -> Result<Self> {
        let k = assignment.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut seen = vec![false; k];
        for &c in &assignment {
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidClustering(format!(
                "cluster id {missing} is empty"
            )));
        }
        Ok(Self { assignment, k })
    }

    /// Compacts arbitrary labels to dense cluster ids in first-appearance order.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = Vec::new();
        let mut assignment = Vec::with_capacity(labels.len());
        let mut k = 0;
        for &label in labels {
            if label >= remap.len() {
                remap.resize(label + 1, None);
            }
            let id = *remap[label].get_or_insert_with(|| {
                let id = k;
                k += 1;
                id
            });
            assignment.push(id);
        }
        Self { assignment, k }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Member lists per cluster, each sorted by vertex id.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// A partition of a subset of `0..n`: unassigned vertices are allowed,
/// assigned cluster ids are exactly `0..k` with no empty cluster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialClustering {
    assignment: Vec<Option<usize>>,
    k: usize,
}

impl PartialClustering {
    /// No vertex assigned.
    pub fn empty(n: usize) -> Self {
        Self {
            assignment: vec![None; n],
            k: 0,
        }
    }

    pub fn from_assignment(assignment: Vec<Option<usize>>) -> Result<Self> {
        let k = assignment
            .iter()
            .filter_map(|c| c.map(|c| c + 1))
            .max()
            .unwrap_or(0);
        let mut seen = vec![false; k];
        for c in assignment.iter().flatten() {
            seen[*c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidClustering(format!(
                "cluster id {missing} is empty"
            )));
        }
        Ok(Self { assignment, k })
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cluster_of(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }

    /// Completes the partial clustering by putting every unassigned vertex
    /// into its own singleton cluster. Singletons have quality zero, so the
    /// objective at lambda = 0 is unchanged and at lambda >= 0 cannot drop.
    pub fn extend_to_full(&self) -> Clustering {
        let mut next = self.k;
        let assignment = self
            .assignment
            .iter()
            .map(|c| {
                c.unwrap_or_else(|| {
                    let id = next;
                    next += 1;
                    id
                })
            })
            .collect();
        Clustering {
            assignment,
            k: next,
        }
    }
}

/// Uniform read access to full and partial clusterings, so evaluators can
/// score both.
pub trait ClusterView {
    fn vertex_count(&self) -> usize;
    fn num_clusters(&self) -> usize;
    fn cluster_of_vertex(&self, v: usize) -> Option<usize>;
}

impl ClusterView for Clustering {
    fn vertex_count(&self) -> usize {
        self.len()
    }
    fn num_clusters(&self) -> usize {
        self.k
    }
    fn cluster_of_vertex(&self, v: usize) -> Option<usize> {
        Some(self.assignment[v])
    }
}

impl ClusterView for PartialClustering {
    fn vertex_count(&self) -> usize {
        self.len()
    }
    fn num_clusters(&self) -> usize {
        self.k
    }
    fn cluster_of_vertex(&self, v: usize) -> Option<usize> {
        self.assignment[v]
    }
}
