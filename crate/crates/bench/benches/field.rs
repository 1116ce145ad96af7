use criterion::{criterion_group, criterion_main, Criterion};
use rank3kit::FieldTable;
use std::hint::black_box;

fn tables(c: &mut Criterion) {
    c.bench_function("field table GF(2^12)", |b| {
        b.iter(|| FieldTable::new(black_box(2), black_box(12)).unwrap())
    });
}

fn arithmetic(c: &mut Criterion) {
    let f = FieldTable::of_order(256).unwrap();
    let elems: Vec<_> = f.elements().collect();
    c.bench_function("GF(256) all products", |b| {
        b.iter(|| {
            let mut acc = f.from_int(0);
            for &x in &elems {
                for &y in &elems {
                    acc = f.add(acc, f.mul(x, y));
                }
            }
            acc
        })
    });
}

criterion_group!(benches, tables, arithmetic);
criterion_main!(benches);
