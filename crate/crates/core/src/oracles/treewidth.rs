use super::subsets::{bits, full, reach};
use crate::graph::{Graph, Mask, TreeDecomposition};
use crate::{Error, Result};

/// Largest graph accepted by [`exact_treewidth`].
pub const TREEWIDTH_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone)]
pub struct Treewidth {
    pub width: usize,
    pub decomposition: TreeDecomposition,
    /// Elimination ordering realising `width`, first eliminated first.
    pub elimination_order: Vec<usize>,
}

/// Exact treewidth by dynamic programming over vertex subsets, with a
/// witness decomposition built from an optimal elimination ordering.
pub fn exact_treewidth(g: &Graph) -> Result<Treewidth> {
    let n = g.n();
    if n > TREEWIDTH_MAX_VERTICES {
        return Err(Error::Size {
            what: "treewidth oracle vertex count",
            candidates: n as u128,
            limit: TREEWIDTH_MAX_VERTICES as u128,
        });
    }
    if n == 0 {
        return Ok(Treewidth {
            width: 0,
            decomposition: TreeDecomposition {
                bags: vec![vec![]],
                edges: vec![],
            },
            elimination_order: vec![],
        });
    }
    let adj = g.adjacency_masks().expect("n ≤ 12");
    let all = full(n);
    // Vertices outside `s ∪ {v}` reachable from v through `s`: the bag size
    // when v is eliminated right after the set s.
    let q = |s: Mask, v: usize| -> i32 {
        let inner = reach(&adj, s | 1 << v, v);
        let mut out = 0;
        for u in bits(inner) {
            out |= adj[u];
        }
        (out & all & !(s | 1 << v)).count_ones() as i32
    };
    let size = 1usize << n;
    let mut tw = vec![i32::MAX; size];
    tw[0] = -1;
    for s in 1..size {
        let s = s as Mask;
        tw[s as usize] = bits(s)
            .map(|v| tw[(s & !(1 << v)) as usize].max(q(s & !(1 << v), v)))
            .min()
            .expect("nonempty");
    }
    let mut order = Vec::with_capacity(n);
    let mut s = all;
    while s != 0 {
        let target = tw[s as usize];
        let v = bits(s)
            .find(|&v| tw[(s & !(1 << v)) as usize].max(q(s & !(1 << v), v)) == target)
            .expect("optimum is attained");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let decomposition = from_elimination_order(&adj, &order);
    Ok(Treewidth {
        width: tw[all as usize].max(0) as usize,
        decomposition,
        elimination_order: order,
    })
}

/// Standard construction: eliminating v creates the bag `{v} ∪ N⁺(v)` in the
/// fill graph, attached to the bag of the earliest-eliminated vertex of
/// `N⁺(v)`. Roots of the resulting forest are chained into one tree.
fn from_elimination_order(adj: &[Mask], order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut fill = adj.to_vec();
    let mut remaining = full(n);
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        remaining &= !(1 << v);
        let higher = fill[v] & remaining;
        for u in bits(higher) {
            fill[u] |= higher & !(1 << u);
        }
        let mut bag = vec![v];
        bag.extend(bits(higher));
        bag.sort_unstable();
        bags.push(bag);
        match bits(higher).min_by_key(|&u| pos[u]) {
            Some(p) => edges.push((i, pos[p])),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition { bags, edges }
}
