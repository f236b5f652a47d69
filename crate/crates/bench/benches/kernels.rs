use criterion::{black_box, criterion_group, criterion_main, Criterion};
use exlat_bench::{example_rationals, loop_matrix, radicals};
use exlat_core::algebraic::{classify, degree_reduction, equals_one};
use exlat_core::arith::{factor, IntPolynomial};
use exlat_core::eigen::eigenvalues;
use exlat_core::engine::{get_basis, BoundStrategy};
use exlat_core::isolate::isolate_roots;
use exlat_core::linear::ExponentVector;

fn arithmetic(c: &mut Criterion) {
    let f = IntPolynomial::from_i64s(&[1, -4, 17, 4, 1]);
    let wilkinson = (1..=8).fold(IntPolynomial::from_i64s(&[1]), |acc, k| &acc * &IntPolynomial::from_i64s(&[-k, 1]));
    c.bench_function("isolate_roots/wilkinson8", |b| b.iter(|| isolate_roots(black_box(&wilkinson))));
    c.bench_function("factor/wilkinson8", |b| b.iter(|| factor(black_box(&wilkinson))));
    c.bench_function("degree_reduction/quartic", |b| b.iter(|| degree_reduction(black_box(&f))));
    c.bench_function("classify/quartic", |b| b.iter(|| classify(black_box(&f))));
}

fn relations(c: &mut Criterion) {
    let xs = radicals(&[(1, 2, 2), (2, 3, 2), (1, 5, 3)]);
    let v = ExponentVector::from_i64s(&[2, -1, 1]);
    c.bench_function("equals_one/radicals", |b| b.iter(|| equals_one(black_box(&xs), black_box(&v))));
}

fn lattices(c: &mut Criterion) {
    let xs = example_rationals();
    c.bench_function("get_basis/four_rationals", |b| b.iter(|| get_basis(black_box(&xs), BoundStrategy::default())));
    let rs = radicals(&[(1, 2, 2), (2, 3, 3), (1, 5, 2)]);
    c.bench_function("get_basis/radicals", |b| b.iter(|| get_basis(black_box(&rs), BoundStrategy::default())));
    let a = loop_matrix();
    let mut g = c.benchmark_group("eigenlattice");
    g.sample_size(10);
    g.bench_function("five_by_five", |b| {
        b.iter(|| get_basis(&eigenvalues(black_box(&a)).unwrap(), BoundStrategy::default()).unwrap())
    });
    g.finish();
}

criterion_group!(benches, arithmetic, relations, lattices);
criterion_main!(benches);
