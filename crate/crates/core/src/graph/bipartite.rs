use std::collections::VecDeque;

use super::Graph;

/// Outcome of a 2-colouring attempt, with a checkable witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `coloring[v]` is the side of `v`; every edge joins opposite sides.
    Bipartite { coloring: Vec<bool> },
    /// Closed walk `w_0 … w_{L-1}` of odd length `L` (consecutive vertices
    /// adjacent, and `w_{L-1}` adjacent to `w_0`).
    OddClosedWalk(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return Bipartiteness::OddClosedWalk(odd_walk(&parent, u, w)),
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        coloring: color.into_iter().map(|c| c.unwrap()).collect(),
    }
}

/// `u` and `w` are adjacent, at equal BFS-depth parity: tree path from `u`
/// up to the root, back down to `w`, then the edge `w–u`.
fn odd_walk(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let up = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pu = up(u);
    let pw = up(w);
    // Trim the shared suffix down to the lowest common ancestor.
    let mut common = 0;
    while common < pu.len().min(pw.len())
        && pu[pu.len() - 1 - common] == pw[pw.len() - 1 - common]
    {
        common += 1;
    }
    let mut walk: Vec<usize> = pu[..=pu.len() - common].to_vec();
    walk.extend(pw[..pw.len() - common].iter().rev());
    walk
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_witness(g: &Graph, b: &Bipartiteness) {
        match b {
            Bipartiteness::Bipartite { coloring } => {
                for &(u, v) in g.edges() {
                    assert_ne!(coloring[u], coloring[v]);
                }
            }
            Bipartiteness::OddClosedWalk(w) => {
                assert_eq!(w.len() % 2, 1, "walk {w:?}");
                for i in 0..w.len() {
                    assert!(g.has_edge(w[i], w[(i + 1) % w.len()]), "walk {w:?}");
                }
            }
        }
    }

    #[test]
    fn small_cases() {
        let c4 = Graph::cycle(4);
        let k3 = Graph::complete(3);
        let empty = Graph::new(0);
        assert!(is_bipartite(&c4).is_bipartite());
        assert!(!is_bipartite(&k3).is_bipartite());
        assert!(is_bipartite(&empty).is_bipartite());
        for g in [c4, k3, Graph::cycle(7), Graph::complete(5)] {
            check_witness(&g, &is_bipartite(&g));
        }
    }

    #[test]
    fn witness_on_pendant_odd_cycle() {
        // Long tail into a 5-cycle so the walk is not rooted on the cycle.
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)])
            .unwrap();
        let b = is_bipartite(&g);
        assert!(!b.is_bipartite());
        check_witness(&g, &b);
    }
}
