use std::fmt;

use super::mask_width;
use super::subsets::{bits, full};
use crate::graph::{Graph, Mask};
use crate::Result;

/// A nonnegative multiple of one half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: u64,
}

impl HalfInteger {
    pub fn from_twice(twice: u64) -> Self {
        HalfInteger { twice }
    }

    pub fn from_integer(n: u64) -> Self {
        HalfInteger { twice: 2 * n }
    }

    pub fn twice(self) -> u64 {
        self.twice
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Size of a maximum matching, by branching on the lowest unmatched vertex.
pub fn max_matching_size(g: &Graph) -> Result<usize> {
    mask_width("matching oracle vertex count", g.n())?;
    let adj = g.adjacency_masks().expect("checked width");
    let mut best = 0;
    branch(&adj, full(g.n()), 0, &mut best);
    Ok(best)
}

fn branch(adj: &[Mask], alive: Mask, size: usize, best: &mut usize) {
    // Only vertices with a live neighbour can still be matched.
    let live: Mask = bits(alive).filter(|&v| adj[v] & alive != 0).fold(0, |m, v| m | 1 << v);
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    if live == 0 {
        *best = size;
        return;
    }
    let v = live.trailing_zeros() as usize;
    for u in bits(adj[v] & live) {
        branch(adj, live & !(1 << v) & !(1 << u), size + 1, best);
    }
    branch(adj, live & !(1 << v), size, best);
}

/// Optimum of the fractional vertex cover LP.
///
/// The LP is half-integral and equals half the minimum vertex cover of the
/// bipartite double cover, which by König's theorem is the size of a maximum
/// matching there.
pub fn lp_vc_value(g: &Graph) -> HalfInteger {
    let n = g.n();
    let mut right_of: Vec<Option<usize>> = vec![None; n];
    let mut matched = 0;
    for root in 0..n {
        let mut visited = vec![false; n];
        if augment(g, root, &mut visited, &mut right_of) {
            matched += 1;
        }
    }
    HalfInteger::from_twice(matched)
}

/// Kuhn's augmenting step: left copy `u` is adjacent to the right copy of
/// every neighbour of `u`.
fn augment(g: &Graph, u: usize, visited: &mut [bool], right_of: &mut [Option<usize>]) -> bool {
    for &w in g.neighbors(u) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        if right_of[w].is_none_or(|x| augment(g, x, visited, right_of)) {
            right_of[w] = Some(u);
            return true;
        }
    }
    false
}
