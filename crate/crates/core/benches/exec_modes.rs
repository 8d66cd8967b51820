//! Sequential vs rayon execution of the data-parallel kernels.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use horadam::graph::build_graph_with;
use horadam::oracle::{brute_edge_count_with, brute_median_closed_with, brute_subcube_count_with};
use horadam::{build_graph, Exec, Limits, Params};

const MODES: [Exec; 2] = [Exec::Sequential, Exec::Parallel];

fn label(exec: Exec) -> &'static str {
    match exec {
        Exec::Sequential => "sequential",
        Exec::Parallel => "parallel",
    }
}

fn graph_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for (a, b, n) in [(2, 2, 10), (3, 3, 8)] {
        let p = Params::new(a, b, n).unwrap();
        for exec in MODES {
            group.bench_with_input(BenchmarkId::new(label(exec), p), &p, |bench, p| {
                bench.iter(|| build_graph_with(p, &Limits::DEFAULT, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn median_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("median_closure");
    group.sample_size(10);
    let g = build_graph(&Params::new(1, 3, 7).unwrap()).unwrap();
    for exec in MODES {
        group.bench_function(label(exec), |bench| {
            bench.iter(|| brute_median_closed_with(&g, &Limits::DEFAULT, exec).unwrap())
        });
    }
    group.finish();
}

fn subcube_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("subcube_scan");
    let g = build_graph(&Params::new(3, 2, 6).unwrap()).unwrap();
    for exec in MODES {
        group.bench_function(label(exec), |bench| {
            bench.iter(|| brute_subcube_count_with(&g, 3, &Limits::DEFAULT, exec).unwrap())
        });
    }
    group.finish();
}

fn pairwise_edges(c: &mut Criterion) {
    let mut group = c.benchmark_group("pairwise_edges");
    let g = build_graph(&Params::new(3, 2, 6).unwrap()).unwrap();
    for exec in MODES {
        group.bench_function(label(exec), |bench| {
            bench.iter(|| brute_edge_count_with(&g, &Limits::DEFAULT, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, graph_build, median_closure, subcube_scan, pairwise_edges);
criterion_main!(benches);
