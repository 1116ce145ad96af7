use criterion::{criterion_group, criterion_main, Criterion};
use rank3kit::graphs::{bilinear_forms, hamming2, paley};
use rank3kit::iso::{automorphisms, certify_rank3, wl2_closure, SearchOptions};
use rank3kit::permgrp::{affine_1dim_group, two_closure};
use rank3kit::FieldTable;

fn automorphism_search(c: &mut Criterion) {
    let opts = SearchOptions::default();
    let mut group = c.benchmark_group("automorphisms");
    group.sample_size(10);
    for (name, g) in [
        ("paley(29)", paley(29).unwrap()),
        ("hamming2(8)", hamming2(8).unwrap()),
        ("bilinear(2, 3)", bilinear_forms(2, 3).unwrap()),
    ] {
        group.bench_function(name, |b| b.iter(|| automorphisms(&g, &opts).unwrap()));
    }
    group.finish();
}

fn weisfeiler_leman(c: &mut Criterion) {
    let g = paley(37).unwrap();
    let mut group = c.benchmark_group("wl2");
    group.sample_size(10);
    group.bench_function("closure paley(37)", |b| b.iter(|| wl2_closure(&g).unwrap()));
    group.bench_function("certify paley(37)", |b| {
        b.iter(|| certify_rank3(&g, &SearchOptions::default()).unwrap())
    });
    group.finish();
}

fn closure(c: &mut Criterion) {
    let field = FieldTable::of_order(49).unwrap();
    let g = affine_1dim_group(&field, 2, true).unwrap();
    let mut group = c.benchmark_group("two closure");
    group.sample_size(10);
    group.bench_function("AGammaL half of GF(49)", |b| b.iter(|| two_closure(&g).unwrap()));
    group.finish();
}

criterion_group!(benches, automorphism_search, weisfeiler_leman, closure);
criterion_main!(benches);
