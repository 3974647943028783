use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use curvlab::flow::{rk4_step, FlowState};
use curvlab::{evaluate, kahler_like_check, rat, ChristoffelParts, ConnectionSpec, GauduchonPencil};
use curvlab_bench::{dense_point, sparse_point};

fn curvature(c: &mut Criterion) {
    let (lie, h) = dense_point();
    let mut g = c.benchmark_group("evaluate");
    for spec in [
        ConnectionSpec::chern(),
        ConnectionSpec::bismut(),
        ConnectionSpec::lc(),
        ConnectionSpec::new(rat(1, 5), rat(-3, 7)),
    ] {
        g.bench_function(spec.to_string(), |b| b.iter(|| evaluate(black_box(&spec), &h, &lie)));
    }
    g.finish();

    let (slie, sh) = sparse_point();
    c.bench_function("evaluate/sparse-bismut", |b| {
        b.iter(|| evaluate(&ConnectionSpec::bismut(), black_box(&sh), &slie))
    });
}

fn pencil(c: &mut Criterion) {
    let (lie, h) = dense_point();
    let parts = ChristoffelParts::new(&h, &lie);
    c.bench_function("pencil/build", |b| b.iter(|| GauduchonPencil::new(black_box(&parts), &h, &lie)));
    let p = GauduchonPencil::new(&parts, &h, &lie);
    c.bench_function("pencil/at", |b| b.iter(|| p.at(black_box(&rat(1, 3)))));
}

fn checks(c: &mut Criterion) {
    let (lie, h) = dense_point();
    let r = evaluate(&ConnectionSpec::bismut(), &h, &lie);
    c.bench_function("kahler_like_check", |b| b.iter(|| kahler_like_check(black_box(&r))));

    let state = FlowState::new(&h, &lie);
    let cx = lie.c().to_complex();
    c.bench_function("flow/rk4_step", |b| b.iter(|| rk4_step(black_box(&state.g6), &cx, 0.01)));
}

criterion_group!(benches, curvature, pencil, checks);
criterion_main!(benches);
