use num_traits::Zero;

use super::subsets::{count_subsets_by_size, full, is_bipartite_mask, reach};
use super::{guard, mask_width};
use crate::count::{subsets_up_to, BigCount};
use crate::exec::Execution;
use crate::graph::{Graph, Mask};
use crate::Result;

fn setup(g: &Graph, k: usize) -> Result<Vec<Mask>> {
    mask_width("odd-cycle-transversal oracle vertex count", g.n())?;
    guard(
        "odd-cycle-transversal enumeration",
        subsets_up_to(g.n() as u64, k as u64),
    )?;
    Ok(g.adjacency_masks().expect("checked width"))
}

/// Number of vertex sets `S`, `|S| ≤ k`, with `G − S` bipartite.
pub fn count_odd_cycle_transversals(g: &Graph, k: usize) -> Result<BigCount> {
    count_odd_cycle_transversals_with(g, k, Execution::default())
}

pub fn count_odd_cycle_transversals_with(g: &Graph, k: usize, exec: Execution) -> Result<BigCount> {
    let adj = setup(g, k)?;
    let all = full(g.n());
    let counts = count_subsets_by_size(g.n(), k, exec, |s| is_bipartite_mask(&adj, all & !s));
    Ok(counts.into_iter().map(BigCount::from).sum())
}

/// Whether every odd cycle transversal of size at most `k` leaves a
/// connected graph. An empty remainder counts as disconnected.
pub fn is_nice_oct_instance(g: &Graph, k: usize) -> Result<bool> {
    is_nice_oct_instance_with(g, k, Execution::default())
}

pub fn is_nice_oct_instance_with(g: &Graph, k: usize, exec: Execution) -> Result<bool> {
    let adj = setup(g, k)?;
    let all = full(g.n());
    let bad = count_subsets_by_size(g.n(), k, exec, |s| {
        let alive = all & !s;
        if !is_bipartite_mask(&adj, alive) {
            return false;
        }
        alive == 0 || reach(&adj, alive, alive.trailing_zeros() as usize) != alive
    });
    Ok(bad.iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::Binomials;

    #[test]
    fn worked_examples() {
        assert_eq!(count_odd_cycle_transversals(&Graph::complete(3), 1).unwrap(), 3u32.into());
        assert_eq!(count_odd_cycle_transversals(&Graph::cycle(5), 0).unwrap(), 0u32.into());
        let mut b = Binomials::new();
        for k in 0..=6 {
            assert_eq!(
                count_odd_cycle_transversals(&Graph::cycle(6), k).unwrap(),
                b.prefix_sum(6, k)
            );
        }
    }

    #[test]
    fn niceness_examples() {
        assert!(is_nice_oct_instance(&Graph::complete(3), 1).unwrap());
        let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert!(!is_nice_oct_instance(&two, 2).unwrap());
        assert!(is_nice_oct_instance(&Graph::cycle(5), 0).unwrap());
        // K1 with k=1: removing the vertex leaves nothing.
        assert!(!is_nice_oct_instance(&Graph::new(1), 1).unwrap());
        assert!(is_nice_oct_instance(&Graph::new(1), 0).unwrap());
    }

    #[test]
    fn agrees_with_witness_based_check() {
        for g in crate::oracles::all_graphs(5) {
            for k in 0..=3 {
                let mut expect = 0u32;
                for s in 0u32..32 {
                    if s.count_ones() as usize > k {
                        continue;
                    }
                    let keep: Vec<usize> = (0..5).filter(|v| s >> v & 1 == 0).collect();
                    let (h, _) = g.induced_subgraph(&keep);
                    if crate::graph::is_bipartite(&h).is_bipartite() {
                        expect += 1;
                    }
                }
                assert_eq!(count_odd_cycle_transversals(&g, k).unwrap(), expect.into());
            }
        }
    }
}
