//! Undirected simple graph with dense vertex ids.

use crate::error::{Error, Result};

/// An undirected simple graph over vertices `0..n`.
///
/// Stores the edge list plus a CSR-style incidence index: for vertex `v`,
/// `incident(v)` yields the indices (into [`Graph::edges`]) of all edges
/// touching `v`. Self-loops and duplicate unordered pairs are rejected at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    incident: Vec<usize>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list over vertices `0..n`.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        for &(u, v) in edge_list {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
        }
        // Duplicate detection via a sorted copy of the normalized pairs;
        // avoids hashing overhead on million-edge inputs.
        let mut normalized: Vec<(usize, usize)> = edge_list
            .iter()
            .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }

        let edges: Vec<(usize, usize)> = edge_list.to_vec();
        let mut degrees = vec![0usize; n];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + degrees[v];
        }
        let mut cursor = offsets.clone();
        let mut incident = vec![0usize; 2 * edges.len()];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            incident[cursor[u]] = idx;
            cursor[u] += 1;
            incident[cursor[v]] = idx;
            cursor[v] += 1;
        }
        Ok(Self {
            n,
            edges,
            offsets,
            incident,
            degrees,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Indices into [`Graph::edges`] of the edges incident to `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Endpoint of edge `e` other than `v`.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn has_isolated_vertex(&self) -> Option<usize> {
        self.degrees.iter().position(|&d| d == 0)
    }
}
