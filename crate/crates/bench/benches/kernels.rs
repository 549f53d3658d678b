use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hopf_bench::fixtures;
use hopf_core::graph::{enumerate_cliques, f_vector, CliqueOptions};
use hopf_core::morse::{index_expectation_monte_carlo, index_report, VertexFunction};

fn clique_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("cliques");
    for (name, g) in fixtures() {
        group.bench_with_input(BenchmarkId::new("f_vector", name), &g, |b, g| {
            b.iter(|| f_vector(g))
        });
        group.bench_with_input(BenchmarkId::new("enumerate", name), &g, |b, g| {
            b.iter(|| enumerate_cliques(g, &CliqueOptions::default()).unwrap().len())
        });
    }
    group.finish();
}

fn index_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("indices");
    group.sample_size(20);
    for (name, g) in fixtures() {
        let f = VertexFunction::seeded(g.order(), 7, 0);
        group.bench_with_input(BenchmarkId::new("index_report", name), &g, |b, g| {
            b.iter(|| index_report(g, &f).unwrap())
        });
    }
    let (_, g) = &fixtures()[0];
    group.bench_function("monte_carlo_10k", |b| {
        b.iter(|| index_expectation_monte_carlo(g, 0, 10_000, 1).unwrap())
    });
    group.finish();
}

criterion_group!(benches, clique_kernels, index_kernels);
criterion_main!(benches);
