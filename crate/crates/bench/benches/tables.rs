use criterion::{criterion_group, criterion_main, Criterion};
use rank3kit::distinguisher::{pairwise_intersections, scan_class_a, scan_class_b, scan_class_c};

fn scans(c: &mut Criterion) {
    c.bench_function("scan class A", |b| b.iter(scan_class_a));
    c.bench_function("scan classes B and C", |b| {
        b.iter(|| (scan_class_b(), scan_class_c()))
    });
    c.bench_function("intersections q<=64 m<=8", |b| {
        b.iter(|| pairwise_intersections(64, 8))
    });
}

criterion_group!(benches, scans);
criterion_main!(benches);
