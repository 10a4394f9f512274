use crate::exec::Execution;
use crate::graph::Mask;

/// For each `r` in `0..=kmax`, the number of `r`-subsets of `0..n` accepted
/// by `pred`. Work is split by (size, smallest element).
pub(crate) fn count_subsets_by_size<P>(n: usize, kmax: usize, exec: Execution, pred: P) -> Vec<u64>
where
    P: Fn(Mask) -> bool + Sync + Send,
{
    let kmax = kmax.min(n);
    let mut tasks = Vec::new();
    for r in 1..=kmax {
        for first in 0..=(n - r) {
            tasks.push((r, first));
        }
    }
    let partial = exec.map(tasks, |(r, first)| {
        let mut hits = 0u64;
        combinations(n, first + 1, r - 1, 1 << first, &mut |m| {
            if pred(m) {
                hits += 1;
            }
        });
        (r, hits)
    });
    let mut out = vec![0u64; kmax + 1];
    out[0] = u64::from(pred(0));
    for (r, hits) in partial {
        out[r] += hits;
    }
    out
}

/// Calls `f` on every `base ∪ T` with `T` an `r`-subset of `from..n`.
pub(crate) fn combinations(n: usize, from: usize, r: usize, base: Mask, f: &mut impl FnMut(Mask)) {
    if r == 0 {
        f(base);
        return;
    }
    for v in from..=(n - r) {
        combinations(n, v + 1, r - 1, base | (1 << v), f);
    }
}

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

/// All vertices `< n`.
pub(crate) fn full(n: usize) -> Mask {
    if n >= Mask::BITS as usize {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Vertices reachable from `start` inside `alive`.
pub(crate) fn reach(adj: &[Mask], alive: Mask, start: usize) -> Mask {
    let mut seen: Mask = 1 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= adj[u];
        }
        next &= alive & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// 2-colourability of the subgraph induced by `alive`.
pub(crate) fn is_bipartite_mask(adj: &[Mask], alive: Mask) -> bool {
    let mut remaining = alive;
    while remaining != 0 {
        let root = remaining.trailing_zeros() as usize;
        let mut even: Mask = 1 << root;
        let mut odd: Mask = 0;
        let mut seen = even;
        let mut frontier = even;
        let mut parity = false;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= adj[u];
            }
            next &= alive & !seen;
            seen |= next;
            parity = !parity;
            if parity {
                odd |= next;
            } else {
                even |= next;
            }
            frontier = next;
        }
        for u in bits(even) {
            if adj[u] & even != 0 {
                return false;
            }
        }
        for u in bits(odd) {
            if adj[u] & odd != 0 {
                return false;
            }
        }
        remaining &= !seen;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_all_subsets() {
        let c = count_subsets_by_size(5, 5, Execution::Sequential, |_| true);
        assert_eq!(c, vec![1, 5, 10, 10, 5, 1]);
        let p = count_subsets_by_size(6, 3, Execution::Parallel, |m| m & 1 == 1);
        assert_eq!(p, vec![0, 1, 5, 10]);
    }

    #[test]
    fn mask_helpers() {
        assert_eq!(bits(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(128), Mask::MAX);
        // path 0-1-2, 3 isolated
        let adj = [0b010, 0b101, 0b010, 0];
        assert_eq!(reach(&adj, 0b1111, 0), 0b111);
        assert_eq!(reach(&adj, 0b1101, 0), 0b001);
        assert!(is_bipartite_mask(&adj, 0b1111));
        let tri = [0b110, 0b101, 0b011];
        assert!(!is_bipartite_mask(&tri, 0b111));
        assert!(is_bipartite_mask(&tri, 0b011));
    }
}
