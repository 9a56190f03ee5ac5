//! Sweep-shaped workload: exact dimensions for every family instance with
//! n <= 10, evaluated sequentially (jobs = 1) and on the worker pool.
//! Without the `parallel` feature both runs are sequential.

use criterion::{criterion_group, criterion_main, Criterion};

use cdg_core::exec::map_ordered;
use cdg_core::families::{cocktail_party, diam3_cut, lewis_graph, two_clique_cut};
use cdg_core::resolving::metric_dimension;
use cdg_core::Graph;

fn instances() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in [4, 6, 8, 10] {
        out.push(cocktail_party(n).unwrap());
    }
    for n in 5..=10 {
        for m in 1..=(n - 1) / 2 {
            out.push(two_clique_cut(n, m).unwrap());
        }
    }
    for n1 in 1..=3 {
        for n3 in 3..=4 {
            for n4 in 1..=2 {
                out.push(diam3_cut(n1, n3, n4).unwrap());
            }
        }
    }
    for leaves in [vec![2, 1], vec![3, 2], vec![4, 2], vec![3, 3, 1]] {
        out.push(lewis_graph(1, &leaves).unwrap());
    }
    out
}

fn run(jobs: usize) -> Vec<usize> {
    map_ordered(instances(), jobs, |g| metric_dimension(&g).unwrap().value)
}

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    group.bench_function("sequential", |b| b.iter(|| run(1)));
    group.bench_function("worker_pool", |b| b.iter(|| run(0)));
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
