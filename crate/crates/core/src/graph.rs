//! Undirected multigraphs and the cut primitives built on them.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::weight::{ExtWeight, Weights};

pub type Vertex = usize;
pub type EdgeId = usize;
pub type VertexSet = BTreeSet<Vertex>;
pub type EdgeSet = BTreeSet<EdgeId>;

/// An undirected multigraph on vertices `0..n`.
///
/// Parallel edges are distinct instances with their own ids; self-loops are
/// rejected. Each vertex carries a label used only for display and I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// `n` vertices labelled `0`..`n-1`, no edges.
    pub fn new(n: usize) -> Self {
        Self::with_labels((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph {
            labels,
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Vertex {
        self.labels.push(label.into());
        self.incidence.push(Vec::new());
        self.labels.len() - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.labels.len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Edge ids incident to `v`, in insertion order.
    pub fn incident(&self, v: Vertex) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().next_back() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// Membership mask for `set`; fails on unknown vertices.
    pub fn mask(&self, set: &VertexSet) -> Result<Vec<bool>> {
        self.check_set(set)?;
        let mut mask = vec![false; self.vertex_count()];
        for &v in set {
            mask[v] = true;
        }
        Ok(mask)
    }

    pub fn complement(&self, set: &VertexSet) -> VertexSet {
        self.vertices().filter(|v| !set.contains(v)).collect()
    }

    /// Edges with exactly one endpoint in `set`.
    pub fn delta(&self, set: &VertexSet) -> Result<Vec<EdgeId>> {
        let mask = self.mask(set)?;
        Ok(self.delta_mask(&mask))
    }

    pub(crate) fn delta_mask(&self, mask: &[bool]) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| mask[u] != mask[v])
            .map(|(e, _)| e)
            .collect()
    }

    /// Edges with both endpoints in `set`.
    pub fn interior_edges(&self, set: &VertexSet) -> Result<Vec<EdgeId>> {
        let mask = self.mask(set)?;
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| mask[u] && mask[v])
            .map(|(e, _)| e)
            .collect())
    }

    /// Total weight of `delta(set)`.
    pub fn cut_weight(&self, weights: &Weights, set: &VertexSet) -> Result<ExtWeight> {
        weights.check_len(self.edge_count())?;
        let mask = self.mask(set)?;
        Ok(self.delta_mask(&mask).iter().map(|&e| &weights[e]).sum())
    }

    /// Formats a vertex set by labels, e.g. `{a,b}`.
    pub fn format_set(&self, set: &VertexSet) -> String {
        let inner: Vec<&str> = set.iter().map(|&v| self.label(v)).collect();
        format!("{{{}}}", inner.join(","))
    }
}
