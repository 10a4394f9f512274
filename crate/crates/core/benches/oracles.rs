use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use countkernel::oracles::{
    count_min_st_cuts_with, count_odd_cycle_transversals_with, count_vertex_covers_with, random_graph,
};
use countkernel::suites::{self, SuiteConfig};
use countkernel::{Execution, Graph, TerminalPair};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn vertex_cover(c: &mut Criterion) {
    let g = Graph::cycle(26);
    let mut group = c.benchmark_group("vertex_cover_c26_k13");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| count_vertex_covers_with(black_box(&g), 13, exec).unwrap())
        });
    }
    group.finish();
}

fn odd_cycle_transversal(c: &mut Criterion) {
    let g = random_graph(24, 0.3, 11).unwrap();
    let mut group = c.benchmark_group("oct_n24_k4");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| count_odd_cycle_transversals_with(black_box(&g), 4, exec).unwrap())
        });
    }
    group.finish();
}

fn min_cut(c: &mut Criterion) {
    let g = random_graph(12, 0.5, 3).unwrap();
    let st = TerminalPair { s: 0, t: 11 };
    let mut group = c.benchmark_group("min_cut_n12");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| count_min_st_cuts_with(black_box(&g), st, exec).unwrap())
        });
    }
    group.finish();
}

fn kernel_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("vc_kernel_sweep_n5_k3");
    group.sample_size(10);
    for (name, exec) in MODES {
        let cfg = SuiteConfig {
            nmax: 5,
            kmax: 3,
            exec,
            ..SuiteConfig::default()
        };
        group.bench_function(name, |b| b.iter(|| suites::vc_kernel(black_box(&cfg))));
    }
    group.finish();
}

criterion_group!(benches, vertex_cover, odd_cycle_transversal, min_cut, kernel_sweep);
criterion_main!(benches);
