use num_traits::Zero;
use proptest::prelude::*;

use countkernel::compositions::{exact_compose, exact_extract, sum_compose};
use countkernel::graph::{parse_graph, GraphFile};
use countkernel::oracles::{
    count_min_st_cuts, count_min_st_cuts_with, count_minimal_vertex_covers,
    count_odd_cycle_transversals, count_odd_cycle_transversals_with, count_vertex_covers,
    count_vertex_covers_with, lp_vc_value, max_matching_size, min_vertex_cover_size,
};
use countkernel::vc_kernel::{vc_lift, vc_lift_trace, vc_reduce};
use countkernel::{BigCount, Execution, Graph, TerminalPair};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn terminal_graph(max_n: usize) -> impl Strategy<Value = (Graph, TerminalPair)> {
    graph(max_n)
        .prop_filter("two vertices", |g| g.n() >= 2)
        .prop_map(|g| {
            let t = g.n() - 1;
            (g, TerminalPair { s: 0, t })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_round_trip_on_random_graphs(g in graph(9), k in 0u64..5) {
        let r = vc_reduce(&g, k).unwrap();
        let direct = count_vertex_covers(&g, k as usize).unwrap();
        let x3 = count_vertex_covers(&r.graph, r.k as usize);
        // The reduced instance is only counted when its core is small.
        if let Ok(x3) = x3 {
            prop_assert_eq!(vc_lift(&r.context, &x3).unwrap(), direct);
        }
    }

    #[test]
    fn lift_rejects_a_perturbed_count(g in graph(6), k in 1u64..4) {
        let r = vc_reduce(&g, k).unwrap();
        // The zero branch lifts every count to zero.
        prop_assume!(r.stripped.is_some());
        if let Ok(x3) = count_vertex_covers(&r.graph, r.k as usize) {
            let honest = vc_lift_trace(&r.context, &x3).unwrap();
            // Adding one changes either the split or the residual.
            if let Ok(t) = vc_lift_trace(&r.context, &(x3 + 1u32)) {
                prop_assert_ne!(t.sizes, honest.sizes);
            }
        }
    }

    #[test]
    fn cover_counts_grow_with_budget(g in graph(8), k in 0usize..6) {
        let a = count_vertex_covers(&g, k).unwrap();
        let b = count_vertex_covers(&g, k + 1).unwrap();
        prop_assert!(a <= b);
        prop_assert!(count_minimal_vertex_covers(&g, k).unwrap() <= a);
        let tau = min_vertex_cover_size(&g).unwrap();
        prop_assert_eq!(a.is_zero(), k < tau);
    }

    #[test]
    fn matching_and_lp_sandwich(g in graph(9)) {
        let mu = max_matching_size(&g).unwrap() as u64;
        let lp = lp_vc_value(&g).twice();
        let tau = min_vertex_cover_size(&g).unwrap() as u64;
        prop_assert!(mu * 2 <= lp && lp <= 2 * tau && tau <= 2 * mu);
    }

    #[test]
    fn execution_modes_agree(g in graph(10), k in 0usize..4, (h, st) in terminal_graph(7)) {
        prop_assert_eq!(
            count_vertex_covers_with(&g, k, Execution::Sequential).unwrap(),
            count_vertex_covers_with(&g, k, Execution::Parallel).unwrap()
        );
        prop_assert_eq!(
            count_odd_cycle_transversals_with(&g, k, Execution::Sequential).unwrap(),
            count_odd_cycle_transversals_with(&g, k, Execution::Parallel).unwrap()
        );
        prop_assert_eq!(
            count_min_st_cuts_with(&h, st, Execution::Sequential).unwrap(),
            count_min_st_cuts_with(&h, st, Execution::Parallel).unwrap()
        );
    }

    #[test]
    fn bipartite_graphs_have_one_empty_transversal(n in 1usize..7, m in 1usize..7, bits in any::<u64>()) {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..m {
                if bits >> ((u * m + v) % 64) & 1 == 1 {
                    edges.push((u, n + v));
                }
            }
        }
        let g = Graph::from_edges(n + m, edges).unwrap();
        prop_assert_eq!(count_odd_cycle_transversals(&g, 0).unwrap(), BigCount::from(1u32));
    }

    #[test]
    fn file_format_round_trip(g in graph(10), k in proptest::option::of(0u64..100)) {
        let mut f = GraphFile::new(g);
        f.k = k;
        if f.graph.n() >= 2 {
            f.terminals = Some(TerminalPair { s: 0, t: f.graph.n() - 1 });
        }
        prop_assert_eq!(parse_graph(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn sum_of_copies(inst in terminal_graph(6), copies in 1usize..4) {
        let one = count_min_st_cuts(&inst.0, inst.1).unwrap();
        prop_assume!(one.cut_size > 0);
        let c = sum_compose(&vec![inst; copies]).unwrap();
        let all = count_min_st_cuts(&c.graph, c.terminals).unwrap();
        prop_assert_eq!(all.count, one.count * copies as u32);
        prop_assert_eq!(all.cut_size, one.cut_size);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn exact_round_trip_on_small_pairs(a in terminal_graph(4), b in terminal_graph(4)) {
        let (ka, kb) = (
            count_min_st_cuts(&a.0, a.1).unwrap(),
            count_min_st_cuts(&b.0, b.1).unwrap(),
        );
        prop_assume!(ka.cut_size == kb.cut_size);
        let Ok(c) = exact_compose(&[a, b], None) else {
            return Err(TestCaseError::fail("composition refused equal cut sizes"));
        };
        if let Ok(q) = count_min_st_cuts(&c.graph, c.terminals) {
            prop_assert_eq!(exact_extract(&c.metadata, &q.count).unwrap(), vec![ka.count, kb.count]);
        }
    }
}
