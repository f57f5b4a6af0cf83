use criterion::{criterion_group, criterion_main, Criterion};
use rsq::affine::{self, EvalPair};
use rsq::rep::EvalParams;
use rsq::rmatrix;
use rsq_bench::DESK;
use std::hint::black_box;

fn finite(c: &mut Criterion) {
    let mut g = c.benchmark_group("rmatrix");
    g.sample_size(10);
    for &(f, n) in DESK {
        g.bench_function(format!("explicit {f}{n}"), |b| b.iter(|| rmatrix::rhat_explicit(black_box(f), n)));
        g.bench_function(format!("factorized {f}{n}"), |b| b.iter(|| rmatrix::rhat_factorized(black_box(f), n)));
        let r = rmatrix::rhat_explicit(f, n);
        g.bench_function(format!("braid {f}{n}"), |b| b.iter(|| rmatrix::check_braid(black_box(&r), f.module_dim(n))));
    }
    g.finish();
}

fn spectral(c: &mut Criterion) {
    let mut g = c.benchmark_group("affine");
    g.sample_size(10);
    for &(f, n) in DESK {
        let rz = affine::rhat_z(f, n);
        let pair = EvalPair::new(f, n, EvalParams::Symbolic).unwrap();
        g.bench_function(format!("intertwine {f}{n}"), |b| b.iter(|| affine::check_intertwine(&pair, black_box(&rz))));
        g.bench_function(format!("ybe {f}{n}"), |b| b.iter(|| affine::check_spectral_ybe(black_box(&rz), f.module_dim(n))));
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify");
    g.sample_size(10);
    g.bench_function("all rank 2", |b| b.iter(|| rsq::certify::certify_all(black_box(2))));
    g.finish();
}

criterion_group!(benches, finite, spectral, suite);
criterion_main!(benches);
