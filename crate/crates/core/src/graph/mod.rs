//! Finite simple undirected graphs with dense `0..n` vertex indices.

mod bipartite;
mod decomposition;
mod io;
mod transform;

use std::collections::{HashSet, VecDeque};

use crate::{Error, Result};

pub use bipartite::{is_bipartite, Bipartiteness};
pub use decomposition::{validate_tree_decomposition, TdViolation, TreeDecomposition};
pub use io::{parse_graph, GraphFile};
pub use transform::{
    add_isolated, chain_identify, false_twin_blowup, subdivide_all_edges, Blowup, Chain,
    Subdivision,
};

/// Vertex or edge subset for the oracle enumerations.
pub type Mask = u128;

/// Largest vertex (or edge) count representable in a [`Mask`].
pub const MASK_BITS: usize = Mask::BITS as usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Normalised `(u, v)` with `u < v`, in insertion order. Edge indices are
    /// positions in this list.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        let mut seen = HashSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Graph(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::Graph(format!("self-loop at {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::Graph(format!("duplicate edge ({u}, {v})")));
            }
            g.push_edge(key.0, key.1);
        }
        Ok(g)
    }

    /// Caller guarantees the edge list is simple and in range.
    pub(crate) fn from_edges_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        g.edges.reserve(edges.len());
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            g.push_edge(u.min(v), u.max(v));
        }
        g
    }

    fn push_edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Graph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].contains(&b)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Neighbourhood bitmasks, or `None` when `n` exceeds [`MASK_BITS`].
    pub fn adjacency_masks(&self) -> Option<Vec<Mask>> {
        if self.n > MASK_BITS {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nb| nb.iter().fold(0, |m, &u| m | (1 << u)))
                .collect(),
        )
    }

    /// Subgraph induced by `keep` (in the given order). Returns the graph and
    /// the old→new index map.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.n];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        let mut g = Graph::from_edges_unchecked(keep.len(), edges);
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, map)
    }

    /// Connected component containing `v`, in BFS order.
    pub fn component_of(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = vec![v];
        let mut queue = VecDeque::from([v]);
        seen[v] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Exactly one connected component (so the null graph is not connected).
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0).len() == self.n
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edges_unchecked(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges_unchecked(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges_unchecked(n, edges)
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges_unchecked(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + off, v + off)))
            .collect();
        Graph::from_edges_unchecked(self.n + other.n, edges)
    }
}

/// The two distinguished vertices of a min-cut instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TerminalPair {
    pub s: usize,
    pub t: usize,
}

impl TerminalPair {
    pub fn new(s: usize, t: usize, g: &Graph) -> Result<Self> {
        if s == t {
            return Err(Error::Graph(format!("terminals coincide at {s}")));
        }
        if s >= g.n() || t >= g.n() {
            return Err(Error::Graph(format!(
                "terminal ({s}, {t}) out of range for n = {}",
                g.n()
            )));
        }
        Ok(TerminalPair { s, t })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_simple() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::path(4).disjoint_union(&Graph::complete(3));
        assert_eq!(g.n(), 7);
        assert_eq!(g.m(), 6);
        assert_eq!(g.component_of(4).len(), 3);
        assert!(!g.is_connected());
        let (h, map) = g.induced_subgraph(&[4, 5, 6]);
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map[0], None);
        assert!(!Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
    }

    #[test]
    fn terminals_must_differ() {
        let g = Graph::path(3);
        assert!(TerminalPair::new(1, 1, &g).is_err());
        assert!(TerminalPair::new(0, 3, &g).is_err());
        assert!(TerminalPair::new(0, 2, &g).is_ok());
    }
}
