use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use selmer_bench::{hyperbolic, models};
use selmer_core::{enumerate_mti, rank_histogram, MtiSampler, Subspace};
use std::hint::black_box;

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_mti");
    g.sample_size(10);
    for (t, space) in hyperbolic(&[3, 4, 5]) {
        let zero = Subspace::zero(space.dim());
        g.bench_with_input(BenchmarkId::new("H^t", t), &space, |b, s| {
            b.iter(|| enumerate_mti(black_box(s), &zero).unwrap().len())
        });
    }
    g.finish();
}

fn histograms(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank_histogram");
    g.sample_size(10);
    for (name, model) in models() {
        g.bench_function(&name, |b| {
            b.iter(|| {
                rank_histogram(black_box(&model.space), &model.subspace)
                    .unwrap()
                    .total()
            })
        });
    }
    g.finish();
}

fn sampling(c: &mut Criterion) {
    let (_, model) = models().remove(0);
    let sampler = MtiSampler::new(&model.space, &model.subspace).unwrap();
    c.bench_function("draw_index", |b| {
        let mut i = 0u64;
        b.iter(|| {
            i += 1;
            sampler.draw_index(black_box(7), i)
        })
    });
}

criterion_group!(benches, enumerate, histograms, sampling);
criterion_main!(benches);
