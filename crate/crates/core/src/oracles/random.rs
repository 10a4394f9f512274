use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::{Error, Result};

/// Erdős–Rényi `G(n, p)`, reproducible for a fixed seed.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("edge probability {p} is not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges_unchecked(n, edges))
}

/// The labelled graph on `n` vertices whose edge set is given by the bits of
/// `code` over pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if code >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges_unchecked(n, edges)
}

/// Every labelled graph on `n ≤ 11` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "2^C(n,2) labelled graphs do not fit in u64 codes");
    let pairs = n * n.saturating_sub(1) / 2;
    (0..1u64 << pairs).map(move |code| graph_from_code(n, code))
}
