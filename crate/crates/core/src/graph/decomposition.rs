use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Tree of bags. Node `i` carries `bags[i]`; `edges` are tree edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (zero for all-empty bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn add_node(&mut self, bag: Vec<usize>) -> usize {
        self.bags.push(bag);
        self.bags.len() - 1
    }

    pub fn validate(&self, g: &Graph) -> Result<usize, TdViolation> {
        validate_tree_decomposition(g, self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NotATree(String),
    VertexOutOfRange { node: usize, vertex: usize },
    EdgeNotCovered(usize, usize),
    VertexMissing(usize),
    VertexTraceDisconnected(usize),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NotATree(why) => write!(f, "not a tree: {why}"),
            TdViolation::VertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} mentions vertex {vertex} outside the graph")
            }
            TdViolation::EdgeNotCovered(u, v) => write!(f, "edge ({u}, {v}) is in no bag"),
            TdViolation::VertexMissing(v) => write!(f, "vertex {v} is in no bag"),
            TdViolation::VertexTraceDisconnected(v) => {
                write!(f, "bags containing vertex {v} do not form a subtree")
            }
        }
    }
}

impl std::error::Error for TdViolation {}

/// Checks the tree shape, edge coverage and connectivity of every vertex
/// trace. Returns the width on success and the first violation otherwise.
pub fn validate_tree_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<usize, TdViolation> {
    let nodes = td.bags.len();
    if nodes == 0 {
        return Err(TdViolation::NotATree("no nodes".into()));
    }
    if td.edges.len() != nodes - 1 {
        return Err(TdViolation::NotATree(format!(
            "{} edges on {nodes} nodes",
            td.edges.len()
        )));
    }
    let mut tree_adj = vec![Vec::new(); nodes];
    for &(a, b) in &td.edges {
        if a >= nodes || b >= nodes || a == b {
            return Err(TdViolation::NotATree(format!("bad tree edge ({a}, {b})")));
        }
        tree_adj[a].push(b);
        tree_adj[b].push(a);
    }
    if reach(&tree_adj, 0, |_| true) != nodes {
        return Err(TdViolation::NotATree("disconnected".into()));
    }

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut in_bag: Vec<Vec<bool>> = Vec::with_capacity(nodes);
    for (node, bag) in td.bags.iter().enumerate() {
        let mut mark = vec![false; g.n()];
        for &v in bag {
            if v >= g.n() {
                return Err(TdViolation::VertexOutOfRange { node, vertex: v });
            }
            if !mark[v] {
                mark[v] = true;
                holders[v].push(node);
            }
        }
        in_bag.push(mark);
    }

    for &(u, v) in g.edges() {
        if !holders[u].iter().any(|&node| in_bag[node][v]) {
            return Err(TdViolation::EdgeNotCovered(u, v));
        }
    }
    for v in 0..g.n() {
        let Some(&start) = holders[v].first() else {
            return Err(TdViolation::VertexMissing(v));
        };
        if reach(&tree_adj, start, |node| in_bag[node][v]) != holders[v].len() {
            return Err(TdViolation::VertexTraceDisconnected(v));
        }
    }
    Ok(td.width())
}

fn reach(adj: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> usize {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 1;
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if !seen[b] && allowed(b) {
                seen[b] = true;
                count += 1;
                queue.push_back(b);
            }
        }
    }
    count
}
