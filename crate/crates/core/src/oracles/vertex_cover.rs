use num_traits::Zero;

use super::subsets::{bits, full};
use super::{guard, mask_width};
use crate::count::{subsets_up_to, BigCount, Binomials};
use crate::exec::Execution;
use crate::graph::{Graph, Mask};
use crate::Result;

/// Depth of the decision prefix that is fanned out to workers.
const SPLIT_DEPTH: usize = 8;

/// Include/exclude search over vertices in index order. Excluding a vertex
/// forces all its later neighbours in, so every leaf is a vertex cover and
/// each cover is reached exactly once.
struct CoverSearch<'a> {
    adj: &'a [Mask],
    n: usize,
    budget: usize,
    minimal: bool,
}

#[derive(Clone, Copy)]
struct State {
    next: usize,
    chosen: Mask,
    size: usize,
    forced: Mask,
}

impl CoverSearch<'_> {
    fn later(&self, v: usize) -> Mask {
        full(self.n) & !full(v + 1)
    }

    fn children(&self, st: State, mut visit: impl FnMut(State)) {
        let v = st.next;
        let bit: Mask = 1 << v;
        let pending = (st.forced & self.later(v)).count_ones() as usize;
        if st.size + 1 + pending <= self.budget {
            visit(State {
                next: v + 1,
                chosen: st.chosen | bit,
                size: st.size + 1,
                forced: st.forced,
            });
        }
        if st.forced & bit == 0 {
            let forced = st.forced | (self.adj[v] & self.later(v));
            if st.size + (forced & self.later(v)).count_ones() as usize <= self.budget {
                visit(State {
                    next: v + 1,
                    forced,
                    ..st
                });
            }
        }
    }

    fn accept(&self, chosen: Mask) -> bool {
        !self.minimal || bits(chosen).all(|u| self.adj[u] & !chosen != 0)
    }

    fn run(&self, st: State, counts: &mut [u64]) {
        if st.next == self.n {
            if self.accept(st.chosen) {
                counts[st.size] += 1;
            }
            return;
        }
        self.children(st, |child| self.run(child, counts));
    }

    fn frontier(&self, depth: usize) -> Vec<State> {
        let mut layer = vec![State {
            next: 0,
            chosen: 0,
            size: 0,
            forced: 0,
        }];
        for _ in 0..depth.min(self.n) {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for st in layer {
                self.children(st, |c| next.push(c));
            }
            layer = next;
        }
        layer
    }

    fn count(&self, exec: Execution) -> Vec<u64> {
        let starts = self.frontier(SPLIT_DEPTH);
        let partial = exec.map(starts, |st| {
            let mut c = vec![0u64; self.budget + 1];
            self.run(st, &mut c);
            c
        });
        let mut total = vec![0u64; self.budget + 1];
        for c in partial {
            for (t, x) in total.iter_mut().zip(c) {
                *t += x;
            }
        }
        total
    }
}

/// Splits off isolated vertices; returns the core graph's adjacency masks.
fn core(g: &Graph) -> Result<(Vec<Mask>, usize)> {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let isolated = g.n() - keep.len();
    let (h, _) = g.induced_subgraph(&keep);
    mask_width("vertex-cover oracle core size", h.n())?;
    Ok((h.adjacency_masks().expect("checked width"), isolated))
}

fn core_profile(adj: &[Mask], k: usize, minimal: bool, exec: Execution) -> Result<Vec<u64>> {
    let n = adj.len();
    let budget = k.min(n);
    guard("vertex-cover enumeration", subsets_up_to(n as u64, budget as u64))?;
    Ok(CoverSearch {
        adj,
        n,
        budget,
        minimal,
    }
    .count(exec))
}

/// Number of vertex covers of each exact size `0..=k`.
///
/// Isolated vertices never matter for coverage, so the enumeration runs on
/// the non-isolated core and each core cover of size `i` is combined with
/// `C(#isolated, j - i)` choices of padding.
pub fn vertex_cover_profile(g: &Graph, k: usize) -> Result<Vec<BigCount>> {
    vertex_cover_profile_with(g, k, Execution::default())
}

pub fn vertex_cover_profile_with(g: &Graph, k: usize, exec: Execution) -> Result<Vec<BigCount>> {
    let (adj, isolated) = core(g)?;
    let by_core = core_profile(&adj, k, false, exec)?;
    let mut binom = Binomials::new();
    let mut out = vec![BigCount::zero(); k + 1];
    for (i, &c) in by_core.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate().skip(i) {
            if j - i > isolated {
                break;
            }
            *slot += binom.get(isolated, j - i) * BigCount::from(c);
        }
    }
    Ok(out)
}

/// Number of vertex covers of size at most `k`.
pub fn count_vertex_covers(g: &Graph, k: usize) -> Result<BigCount> {
    count_vertex_covers_with(g, k, Execution::default())
}

pub fn count_vertex_covers_with(g: &Graph, k: usize, exec: Execution) -> Result<BigCount> {
    Ok(vertex_cover_profile_with(g, k, exec)?.into_iter().sum())
}

/// Number of inclusion-minimal vertex covers of size at most `k`.
///
/// A minimal cover contains no isolated vertex, so only the core is searched.
pub fn count_minimal_vertex_covers(g: &Graph, k: usize) -> Result<BigCount> {
    count_minimal_vertex_covers_with(g, k, Execution::default())
}

pub fn count_minimal_vertex_covers_with(g: &Graph, k: usize, exec: Execution) -> Result<BigCount> {
    let (adj, _) = core(g)?;
    let counts = core_profile(&adj, k, true, exec)?;
    Ok(counts.into_iter().map(BigCount::from).sum())
}

/// Size of a minimum vertex cover.
pub fn min_vertex_cover_size(g: &Graph) -> Result<usize> {
    let (adj, _) = core(g)?;
    for k in 0..=adj.len() {
        let counts = core_profile(&adj, k, false, Execution::default())?;
        if counts[k] > 0 {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set is a cover")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain subset enumeration, no pruning.
    fn naive(g: &Graph, k: usize, minimal: bool) -> u64 {
        let n = g.n();
        let covers = |s: Mask| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1);
        (0..(1u128 << n))
            .filter(|&s| s.count_ones() as usize <= k && covers(s))
            .filter(|&s| !minimal || bits(s).all(|u| !covers(s & !(1 << u))))
            .count() as u64
    }

    #[test]
    fn worked_examples() {
        assert_eq!(count_vertex_covers(&Graph::new(3), 2).unwrap(), 7u32.into());
        assert_eq!(count_vertex_covers(&Graph::path(2), 1).unwrap(), 2u32.into());
        assert_eq!(count_vertex_covers(&Graph::complete(3), 2).unwrap(), 3u32.into());
        assert_eq!(count_minimal_vertex_covers(&Graph::path(2), 1).unwrap(), 2u32.into());
        assert_eq!(count_minimal_vertex_covers(&Graph::star(3), 3).unwrap(), 2u32.into());
        for k in 0..6 {
            assert_eq!(count_minimal_vertex_covers(&Graph::new(5), k).unwrap(), 1u32.into());
        }
    }

    #[test]
    fn agrees_with_naive_on_all_small_graphs() {
        for n in 0..=5 {
            for g in crate::oracles::all_graphs(n) {
                for k in 0..=n {
                    for minimal in [false, true] {
                        let fast = if minimal {
                            count_minimal_vertex_covers(&g, k).unwrap()
                        } else {
                            count_vertex_covers(&g, k).unwrap()
                        };
                        assert_eq!(fast, naive(&g, k, minimal).into(), "{g:?} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn profile_by_exact_size() {
        // C4: covers of size 2 are the two colour classes, size 3 any 3 vertices.
        let p = vertex_cover_profile(&Graph::cycle(4), 4).unwrap();
        let p: Vec<u32> = p.iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(p, vec![0, 0, 2, 4, 1]);
        assert_eq!(min_vertex_cover_size(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(min_vertex_cover_size(&Graph::new(3)).unwrap(), 0);
    }

    #[test]
    fn isolated_padding_is_counted() {
        // Edge plus 3 isolated, k=3: cover {u} or {v} with ≤2 of 3 pads → 2·7,
        // {u,v} with ≤1 pad → 4.
        let g = crate::graph::add_isolated(&Graph::path(2), 3);
        assert_eq!(count_vertex_covers(&g, 3).unwrap(), 18u32.into());
    }

    #[test]
    fn guard_refuses_huge_space() {
        let g = Graph::complete(60);
        assert!(count_vertex_covers(&g, 30).unwrap_err().is_size_guard());
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let g = crate::oracles::random_graph(18, 0.3, 7).unwrap();
        assert_eq!(
            count_vertex_covers_with(&g, 12, Execution::Sequential).unwrap(),
            count_vertex_covers_with(&g, 12, Execution::Parallel).unwrap()
        );
    }
}
