use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use selmer_core::masses::{c_poly, enumerate_symbols, symbol_mass, MassPoly};
use selmer_core::{class_rank_distribution, type_density_table};
use std::hint::black_box;

fn type_densities(c: &mut Criterion) {
    let mut g = c.benchmark_group("type_density_table");
    g.sample_size(10);
    for bound in [10_000u64, 1_000_000] {
        g.bench_with_input(BenchmarkId::new("n=4", bound), &bound, |b, &bound| {
            b.iter(|| type_density_table(black_box(4), bound).unwrap())
        });
    }
    g.finish();
}

fn masses(c: &mut Criterion) {
    let mut g = c.benchmark_group("masses");
    for n in [6usize, 10] {
        g.bench_with_input(BenchmarkId::new("symbol sum", n), &n, |b, &n| {
            b.iter(|| {
                enumerate_symbols(black_box(n))
                    .iter()
                    .map(symbol_mass)
                    .sum::<MassPoly>()
            })
        });
        g.bench_with_input(BenchmarkId::new("c_poly", n), &n, |b, &n| {
            b.iter(|| c_poly(black_box(n)))
        });
    }
    g.finish();
}

fn class_groups(c: &mut Criterion) {
    c.bench_function("class_rank_distribution (4,0) rho=2", |b| {
        b.iter(|| class_rank_distribution(black_box(4), 0, 2).unwrap())
    });
}

criterion_group!(benches, type_densities, masses, class_groups);
criterion_main!(benches);
