use num_traits::ToPrimitive;
use std::collections::VecDeque;

use super::subsets::{full, reach};
use super::{guard, mask_width};
use crate::count::{binomial, BigCount};
use crate::exec::Execution;
use crate::graph::{Graph, Mask, TerminalPair};
use crate::Result;

/// Minimum cut count together with the cut size it refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCutCount {
    pub count: BigCount,
    pub cut_size: usize,
}

/// Size of a minimum `(s,t)` edge cut, by unit-capacity augmenting paths.
pub fn min_cut_size(g: &Graph, st: TerminalPair) -> usize {
    // Each undirected edge is an arc pair with capacity 1 in each direction.
    let mut head = Vec::with_capacity(2 * g.m());
    let mut cap = Vec::with_capacity(2 * g.m());
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &(u, v) in g.edges() {
        out[u].push(head.len());
        head.push(v);
        cap.push(1i32);
        out[v].push(head.len());
        head.push(u);
        cap.push(1i32);
    }
    let mut flow = 0;
    loop {
        let mut via: Vec<Option<usize>> = vec![None; g.n()];
        let mut seen = vec![false; g.n()];
        seen[st.s] = true;
        let mut queue = VecDeque::from([st.s]);
        while let Some(u) = queue.pop_front() {
            if u == st.t {
                break;
            }
            for &a in &out[u] {
                let w = head[a];
                if cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = Some(a);
                    queue.push_back(w);
                }
            }
        }
        if !seen[st.t] {
            return flow;
        }
        let mut v = st.t;
        while let Some(a) = via[v] {
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            v = head[a ^ 1];
        }
        flow += 1;
    }
}

/// Whether deleting the listed edges (indices into `g.edges()`) leaves `s`
/// and `t` in different components.
pub fn separates(g: &Graph, st: TerminalPair, removed: &[usize]) -> bool {
    let gone: std::collections::HashSet<usize> = removed.iter().copied().collect();
    let kept = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, _)| !gone.contains(i))
        .map(|(_, &e)| e)
        .collect();
    let h = Graph::from_edges_unchecked(g.n(), kept);
    !h.component_of(st.s).contains(&st.t)
}

/// Number of minimum `(s,t)` cuts. Only subsets of exactly the minimum size
/// are examined; when `s` and `t` are already separated the empty cut is the
/// single solution.
pub fn count_min_st_cuts(g: &Graph, st: TerminalPair) -> Result<MinCutCount> {
    count_min_st_cuts_with(g, st, Execution::default())
}

pub fn count_min_st_cuts_with(g: &Graph, st: TerminalPair, exec: Execution) -> Result<MinCutCount> {
    let k = min_cut_size(g, st);
    if k == 0 {
        return Ok(MinCutCount {
            count: 1u32.into(),
            cut_size: 0,
        });
    }
    mask_width("min-cut oracle vertex count", g.n())?;
    // A minimum cut never uses an edge outside the component of s.
    let comp = g.component_of(st.s);
    let mut inside = vec![false; g.n()];
    for &v in &comp {
        inside[v] = true;
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(u, _)| inside[u]).collect();
    let m = edges.len();
    guard(
        "min-cut enumeration",
        binomial(m as u64, k as u64).to_u128().unwrap_or(u128::MAX),
    )?;
    let adj = g.adjacency_masks().expect("checked width");
    let search = CutSearch {
        edges: &edges,
        alive: full(g.n()),
        s: st.s,
        t: st.t,
    };
    let parts = exec.map_range(m - k + 1, |first| {
        let mut adj = adj.clone();
        search.remove(&mut adj, first);
        search.run(&mut adj, first + 1, k - 1)
    });
    Ok(MinCutCount {
        count: parts.into_iter().map(BigCount::from).sum(),
        cut_size: k,
    })
}

struct CutSearch<'a> {
    edges: &'a [(usize, usize)],
    alive: Mask,
    s: usize,
    t: usize,
}

impl CutSearch<'_> {
    fn remove(&self, adj: &mut [Mask], e: usize) {
        let (u, v) = self.edges[e];
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }

    fn restore(&self, adj: &mut [Mask], e: usize) {
        let (u, v) = self.edges[e];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }

    fn run(&self, adj: &mut [Mask], from: usize, left: usize) -> u64 {
        if left == 0 {
            return u64::from(reach(adj, self.alive, self.s) >> self.t & 1 == 0);
        }
        let mut hits = 0;
        for e in from..=(self.edges.len() - left) {
            self.remove(adj, e);
            hits += self.run(adj, e + 1, left - 1);
            self.restore(adj, e);
        }
        hits
    }
}
